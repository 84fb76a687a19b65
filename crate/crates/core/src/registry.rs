//! Groups behind one object-safe trait, registered by name.

use std::collections::HashMap;

use crate::conjugacy::{
    bfs_solver, cl_bfs, conjugate_pairs, direct_product_conjugator, free_product_conjugacy, g4_conjugator_search,
    heis_conjugator, word_conjugator_search, bs12_conjugacy_verdict, ConjugacyCertificate, G4Search, PairRecord,
};
use crate::error::{Error, ParseError, Result};
use crate::groups::{self, parse_param};
use crate::hnn::{a::a_is_identity, b::b_is_identity, e, g4::g4_is_identity, l::l_is_identity};
use crate::models::heis::heis_eval_with_ledger;
use crate::models::heis_bounds::{heis_ann_bound, heis_area_bound};
use crate::models::{
    bs12::graded_area_bound, Bs12, CentralExt, DirectProduct, Filiform, FreeGroup, FreeProduct, GroupModel, Heis,
};
use crate::presentation::{AreaLedger, Presentation};
use crate::word::{Letter, Word};

pub trait Group: Send + Sync {
    fn name(&self) -> &str;
    fn presentation(&self) -> &Presentation;
    fn is_identity(&self, w: &Word) -> bool;

    /// Normal-form word, when the group has a faithful model.
    fn normal_form(&self, _w: &Word) -> Option<Word> {
        None
    }

    fn describe(&self, w: &Word) -> String {
        match self.normal_form(w) {
            Some(nf) => self.presentation().format_word(&nf),
            None if self.is_identity(w) => "1".into(),
            None => "nontrivial".into(),
        }
    }

    /// Admissible lower bound on the area of a null-homotopic word.
    fn area_lower_bound(&self, _w: &[Letter]) -> u64 {
        0
    }

    /// Lower bound on the annular area between cyclic words; `u64::MAX`
    /// when they are known not to be conjugate.
    fn ann_lower_bound(&self, _u: &[Letter], _v: &[Letter]) -> u64 {
        0
    }

    /// A derivation of the empty word from `w`, where a constructive one exists.
    fn identity_ledger(&self, _w: &Word) -> Option<AreaLedger> {
        None
    }

    /// Some conjugator, not necessarily shortest; `radius` caps searches.
    fn conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<ConjugacyCertificate>;

    /// Shortest conjugator of length at most `radius`.
    fn min_conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<(usize, Word)>;

    /// `Some` when conjugacy of the pair is decided outright.
    fn conjugacy_verdict(&self, _u: &Word, _v: &Word) -> Option<bool> {
        None
    }

    /// Conjugate element pairs with `ℓ(u) + ℓ(v) ≤ n`; `None` without a model.
    fn conjugate_pairs(&self, _n: usize, _radius: usize) -> Option<Vec<PairRecord>> {
        None
    }
}

type Solver = fn(&Word, &Word) -> Result<ConjugacyCertificate>;
type Verdict = fn(&Word, &Word) -> Option<bool>;

/// Adapter from a typed model to [`Group`], with optional specialised hooks.
pub struct ModelGroup<M: GroupModel> {
    pub model: M,
    solver: Option<Solver>,
    verdict: Option<Verdict>,
    bound: Option<fn(&[Letter]) -> u64>,
    pair_bound: Option<fn(&[Letter], &[Letter]) -> u64>,
    ledger: Option<fn(&Word) -> Option<AreaLedger>>,
}

impl<M: GroupModel> ModelGroup<M> {
    pub fn new(model: M) -> Self {
        Self { model, solver: None, verdict: None, bound: None, pair_bound: None, ledger: None }
    }

    pub fn with_solver(mut self, f: Solver) -> Self {
        self.solver = Some(f);
        self
    }

    pub fn with_verdict(mut self, f: Verdict) -> Self {
        self.verdict = Some(f);
        self
    }

    pub fn with_bound(mut self, f: fn(&[Letter]) -> u64) -> Self {
        self.bound = Some(f);
        self
    }

    pub fn with_pair_bound(mut self, f: fn(&[Letter], &[Letter]) -> u64) -> Self {
        self.pair_bound = Some(f);
        self
    }

    pub fn with_ledger(mut self, f: fn(&Word) -> Option<AreaLedger>) -> Self {
        self.ledger = Some(f);
        self
    }
}

impl<M: GroupModel> Group for ModelGroup<M> {
    fn name(&self) -> &str {
        self.model.presentation().name()
    }

    fn presentation(&self) -> &Presentation {
        self.model.presentation()
    }

    fn is_identity(&self, w: &Word) -> bool {
        self.model.is_identity(&self.model.eval_word(w))
    }

    fn normal_form(&self, w: &Word) -> Option<Word> {
        Some(self.model.element_to_word(&self.model.eval_word(w)))
    }

    fn describe(&self, w: &Word) -> String {
        let g = self.model.eval_word(w);
        format!("{} {}", self.presentation().format_word(&self.model.element_to_word(&g)), self.model.describe(&g))
    }

    fn area_lower_bound(&self, w: &[Letter]) -> u64 {
        self.bound.map_or(0, |f| f(w))
    }

    fn ann_lower_bound(&self, u: &[Letter], v: &[Letter]) -> u64 {
        self.pair_bound.map_or(0, |f| f(u, v))
    }

    fn identity_ledger(&self, w: &Word) -> Option<AreaLedger> {
        self.ledger.and_then(|f| f(w))
    }

    fn conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<ConjugacyCertificate> {
        if let Some(f) = self.solver {
            return f(u, v);
        }
        let (_, w) = cl_bfs(&self.model, u, v, radius)?;
        let m = &self.model;
        ConjugacyCertificate::new(u.clone(), v.clone(), w, None, m.presentation(), &|x| m.is_identity(&m.eval_word(x)))
    }

    fn min_conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<(usize, Word)> {
        cl_bfs(&self.model, u, v, radius)
    }

    fn conjugacy_verdict(&self, u: &Word, v: &Word) -> Option<bool> {
        self.verdict.and_then(|f| f(u, v))
    }

    fn conjugate_pairs(&self, n: usize, radius: usize) -> Option<Vec<PairRecord>> {
        Some(conjugate_pairs(&self.model, n, radius, &|u, v| self.conjugacy_verdict(u, v)))
    }
}

/// A group known only through a word-problem oracle.
pub struct OracleGroup {
    pres: Presentation,
    oracle: fn(&Word) -> bool,
    ledger: Option<fn(&Word) -> Option<AreaLedger>>,
    search: Option<fn(&Word, &Word, usize) -> Result<ConjugacyCertificate>>,
}

impl OracleGroup {
    pub fn new(pres: Presentation, oracle: fn(&Word) -> bool) -> Self {
        Self { pres, oracle, ledger: None, search: None }
    }
}

impl Group for OracleGroup {
    fn name(&self) -> &str {
        self.pres.name()
    }

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn is_identity(&self, w: &Word) -> bool {
        (self.oracle)(w)
    }

    fn identity_ledger(&self, w: &Word) -> Option<AreaLedger> {
        self.ledger.and_then(|f| f(w))
    }

    fn conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<ConjugacyCertificate> {
        match self.search {
            Some(f) => f(u, v, radius),
            None => word_conjugator_search(&self.pres, self.oracle, u, v, radius),
        }
    }

    fn min_conjugator(&self, u: &Word, v: &Word, radius: usize) -> Result<(usize, Word)> {
        self.conjugator(u, v, radius).map(|c| (c.w.len(), c.w))
    }
}

fn heis_group() -> ModelGroup<Heis> {
    ModelGroup::new(Heis::new())
        .with_bound(heis_area_bound)
        .with_pair_bound(heis_ann_bound)
        .with_solver(heis_conjugator)
        .with_verdict(|u, v| match heis_conjugator(u, v) {
            Ok(_) => Some(true),
            Err(Error::NotConjugate) => Some(false),
            Err(_) => None,
        })
        .with_ledger(|w| {
            let (g, l) = heis_eval_with_ledger(w);
            (g == Default::default()).then_some(l)
        })
}

fn bs12_group() -> ModelGroup<Bs12> {
    ModelGroup::new(Bs12::new())
        .with_bound(|w| graded_area_bound(w, 0, 1).unwrap_or(0))
        .with_verdict(|u, v| Some(bs12_conjugacy_verdict(u, v)))
}

fn g3_model() -> DirectProduct<Heis, Bs12> {
    let p = groups::g3();
    let right = Presentation::from_strs("BS12", &["t", "s"], &["t s t^-1 s^-2"]);
    DirectProduct::new(p, Heis::new(), Bs12::with_presentation(right, 0, 1))
}

fn g3_group() -> ModelGroup<DirectProduct<Heis, Bs12>> {
    ModelGroup::new(g3_model())
        .with_solver(|u, v| {
            let dp = g3_model();
            let (u1, u2) = dp.project(u);
            let (v1, v2) = dp.project(v);
            let c1 = heis_conjugator(&u1, &v1)?;
            let bs = &dp.right;
            let (_, w2) = cl_bfs(bs, &u2, &v2, 8)?;
            let c2 = ConjugacyCertificate::new(u2, v2, w2, None, bs.presentation(), &|x| bs.is_identity(&bs.eval_word(x)))?;
            let c = direct_product_conjugator(&dp, &c1, &c2)?;
            // the product certificate is for (u₁u₂, v₁v₂); restate it for (u, v)
            ConjugacyCertificate::new(u.clone(), v.clone(), c.w, None, dp.presentation(), &|x| {
                dp.is_identity(&dp.eval_word(x))
            })
        })
        .with_verdict(|u, v| {
            let dp = g3_model();
            let (u1, u2) = dp.project(u);
            let (v1, v2) = dp.project(v);
            let h = heis_conjugator(&u1, &v1).is_ok();
            Some(h && bs12_conjugacy_verdict(&u2, &v2))
        })
}

fn free_product_group(d: usize) -> ModelGroup<FreeProduct<Filiform, CentralExt>> {
    let p = if d == 3 { groups::g7() } else { groups::g8() };
    let model = FreeProduct::new(p, Filiform::new(d), CentralExt::new(20));
    let solver: Solver = if d == 3 { |u, v| fp_solver(3, u, v) } else { |u, v| fp_solver(4, u, v) };
    ModelGroup::new(model).with_solver(solver)
}

fn fp_solver(d: usize, u: &Word, v: &Word) -> Result<ConjugacyCertificate> {
    let p = if d == 3 { groups::g7() } else { groups::g8() };
    let fp = FreeProduct::new(p, Filiform::new(d), CentralExt::new(20));
    let ls = bfs_solver(&fp.left, 6);
    let rs = bfs_solver(&fp.right, 6);
    free_product_conjugacy(&fp, u, v, &ls, &rs)
}

fn g4_group() -> OracleGroup {
    OracleGroup {
        search: Some(|u, v, r| g4_conjugator_search(u, v, &G4Search::new(r))),
        ..OracleGroup::new(groups::g4(), g4_is_identity)
    }
}

pub type Factory = fn(Option<usize>) -> Result<Box<dyn Group>>;

/// Name → constructor table. Parametrised families take `NAME:k`.
pub struct Registry {
    entries: Vec<(String, Factory)>,
    index: HashMap<String, usize>,
}

impl Registry {
    pub fn empty() -> Self {
        Self { entries: Vec::new(), index: HashMap::new() }
    }

    pub fn register(&mut self, name: &str, f: Factory) {
        self.index.insert(name.to_string(), self.entries.len());
        self.entries.push((name.to_string(), f));
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Result<Box<dyn Group>> {
        let unknown = || Error::Parse(ParseError::UnknownGroup(name.to_string()));
        let (base, param) = match parse_param(name) {
            Some((b, k)) => (b, Some(k)),
            None => (name, None),
        };
        let i = *self.index.get(base).ok_or_else(unknown)?;
        (self.entries[i].1)(param)
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        fn fixed(p: Option<usize>, f: impl FnOnce() -> Box<dyn Group>) -> Result<Box<dyn Group>> {
            match p {
                None => Ok(f()),
                Some(_) => Err(Error::Unsupported("group takes no parameter".into())),
            }
        }
        r.register("G1", |p| fixed(p, || Box::new(heis_group())));
        r.register("BS12", |p| fixed(p, || Box::new(bs12_group())));
        r.register("G2", |p| fixed(p, || Box::new(bs12_group())));
        r.register("G3", |p| fixed(p, || Box::new(g3_group())));
        r.register("G4", |p| fixed(p, || Box::new(g4_group())));
        r.register("G5", |p| {
            let d = p.unwrap_or(3);
            if d == 0 {
                return Err(Error::Parse(ParseError::UnknownGroup("G5:0".into())));
            }
            Ok(Box::new(ModelGroup::new(Filiform::new(d))))
        });
        r.register("G6", |p| {
            let m = p.unwrap_or(2);
            if m == 0 {
                return Err(Error::Parse(ParseError::UnknownGroup("G6:0".into())));
            }
            Ok(Box::new(ModelGroup::new(CentralExt::new(m))))
        });
        r.register("G7", |p| fixed(p, || Box::new(free_product_group(3))));
        r.register("G8", |p| fixed(p, || Box::new(free_product_group(4))));
        r.register("A", |p| fixed(p, || Box::new(OracleGroup::new(groups::group_a(), a_is_identity))));
        r.register("B", |p| fixed(p, || Box::new(OracleGroup::new(groups::group_b(), b_is_identity))));
        r.register("C", |p| fixed(p, || Box::new(ModelGroup::new(FreeGroup::new(groups::group_c())))));
        r.register("E", |p| {
            fixed(p, || {
                Box::new(OracleGroup {
                    ledger: Some(e::e_identity_ledger),
                    ..OracleGroup::new(groups::group_e(), e::e_is_identity)
                })
            })
        });
        r.register("L", |p| fixed(p, || Box::new(OracleGroup::new(groups::group_l(), l_is_identity))));
        r
    }
}

/// Looks a name up in the built-in registry.
pub fn lookup(name: &str) -> Result<Box<dyn Group>> {
    Registry::builtin().get(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::builtin;

    #[test]
    fn every_builtin_resolves_with_matching_presentation() {
        let r = Registry::builtin();
        for name in groups::BUILTIN_NAMES {
            let g = r.get(name).unwrap();
            assert_eq!(g.presentation(), &builtin(name).unwrap(), "{name}");
            for rel in g.presentation().relators() {
                assert!(g.is_identity(rel), "{name}: relator not trivial");
            }
            let x = Word::letter(Letter::pos(0));
            assert!(!g.is_identity(&x), "{name}");
        }
        assert!(r.get("G9").is_err());
        assert!(r.get("G1:2").is_err());
        assert_eq!(r.get("G5:d=4").unwrap().presentation().alphabet().len(), 5);
    }

    #[test]
    fn dispatch_uses_specialised_solvers() {
        let g = lookup("G1").unwrap();
        let w = |s: &str| g.presentation().parse_word(s).unwrap();
        let c = g.conjugator(&w("b"), &w("b c^4"), 0).unwrap();
        assert_eq!(c.w, w("a^4"));
        assert_eq!(g.conjugacy_verdict(&w("a"), &w("b")), Some(false));
        assert!(g.identity_ledger(&w("a b a^-1 b^-1 c^-1")).is_some());

        let g = lookup("G3").unwrap();
        let w = |s: &str| g.presentation().parse_word(s).unwrap();
        let c = g.conjugator(&w("b s^2"), &w("t s t^-1 b c^4"), 4).unwrap();
        assert_eq!(c.u, w("b s^2"));

        let g = lookup("G4").unwrap();
        let w = |s: &str| g.presentation().parse_word(s).unwrap();
        assert_eq!(g.min_conjugator(&w("s"), &w("s^2"), 2).unwrap().0, 1);

        let g = lookup("B").unwrap();
        let w = |s: &str| g.presentation().parse_word(s).unwrap();
        assert_eq!(g.min_conjugator(&w("s"), &w("s^2"), 2).unwrap().1, w("a"));
    }
}
