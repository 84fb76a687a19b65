use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::{Function, GrowthTable, Kind};
use crate::area::{annular_area, AreaBudget, AreaOutcome, AreaSearch};
use crate::error::{Error, Result};
use crate::registry::Group;
use crate::word::{reduced_words, Letter, Word};

/// Least rotations of cyclically reduced words of length exactly `n`.
fn rotation_classes(g: &dyn Group, n: usize) -> Vec<Word> {
    let set: BTreeSet<Word> = reduced_words(g.presentation().alphabet(), n)
        .into_iter()
        .filter(|w| w.is_cyclically_reduced())
        .map(|w| w.least_rotation())
        .collect();
    set.into_iter().collect()
}

/// Cyclic classes (rotation and inversion) of length exactly `n`.
fn cyclic_classes(g: &dyn Group, n: usize) -> Vec<Word> {
    let set: BTreeSet<Word> = rotation_classes(g, n).into_iter().map(|w| w.cyclic_class_key()).collect();
    set.into_iter().collect()
}

fn bound_of(g: &dyn Group) -> impl Fn(&[Letter]) -> u64 + Sync + '_ {
    move |w: &[Letter]| g.area_lower_bound(w)
}

/// `Area(n)` for `n ≤ n_max` by exhausting null-homotopic cyclic words.
pub fn survey_area(g: &dyn Group, n_max: usize, budget: AreaBudget) -> GrowthTable {
    let oracle = |w: &Word| g.is_identity(w);
    let bound = bound_of(g);
    let search = AreaSearch::new(g.presentation()).with_oracle(&oracle).with_lower_bound(&bound);
    let mut table = GrowthTable::new(g.name(), Function::Area);
    table.budget_nodes = budget.max_nodes;
    let (mut lo, mut hi, mut open) = (0u64, Some(0u64), false);
    for n in 0..=n_max {
        let words: Vec<Word> = cyclic_classes(g, n).into_iter().filter(|w| g.is_identity(w)).collect();
        let outcomes: Vec<AreaOutcome> = words.par_iter().map(|w| search.area(w, budget).outcome).collect();
        for o in outcomes {
            lo = lo.max(o.lower().unwrap_or(0));
            hi = match (hi, o.upper()) {
                (Some(h), Some(u)) => Some(h.max(u)),
                _ => None,
            };
            open |= o.exact().is_none();
        }
        push_bounds(&mut table, n, lo, hi, open);
    }
    table
}

fn push_bounds(table: &mut GrowthTable, n: usize, lo: u64, hi: Option<u64>, open: bool) {
    if !open || hi == Some(lo) {
        table.push(n, lo, Kind::Exact);
        return;
    }
    table.push(n, lo, Kind::Lower);
    if let Some(h) = hi {
        table.push(n, h, Kind::Upper);
    }
}

/// `CL(n)` from element pairs with `ℓ(u) + ℓ(v) ≤ n`.
pub fn survey_cl(g: &dyn Group, n_max: usize, radius: usize) -> Result<GrowthTable> {
    let pairs = g
        .conjugate_pairs(n_max, radius)
        .ok_or_else(|| Error::Unsupported(format!("{} has no element enumeration", g.name())))?;
    let mut table = GrowthTable::new(g.name(), Function::Cl);
    table.radius = radius;
    for n in 0..=n_max {
        let within = pairs.iter().filter(|p| p.size() <= n);
        let (mut best, mut open) = (0usize, false);
        for p in within {
            match p.cl {
                Some(c) => best = best.max(c),
                None => open |= p.unresolved(),
            }
        }
        table.push(n, best as u64, if open { Kind::Lower } else { Kind::Exact });
    }
    Ok(table)
}

#[derive(Default)]
struct Classes {
    id: HashMap<Word, usize>,
    parent: Vec<usize>,
}

impl Classes {
    fn id(&mut self, w: Word) -> usize {
        let next = self.parent.len();
        let i = *self.id.entry(w).or_insert(next);
        if i == next {
            self.parent.push(i);
        }
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.parent[a.max(b)] = a.min(b);
    }

    fn same(&mut self, a: &Word, b: &Word) -> bool {
        if a == b {
            return true;
        }
        match (self.id.get(a).copied(), self.id.get(b).copied()) {
            (Some(i), Some(j)) => self.find(i) == self.find(j),
            _ => false,
        }
    }
}

/// `Ann(n)` over pairs of cyclic words. Pairs the peel search cannot settle
/// within `budget` contribute lower and upper rows; `radius` bounds the
/// conjugacy search used to pair up elements.
pub fn survey_ann(g: &dyn Group, n_max: usize, radius: usize, budget: AreaBudget) -> Result<GrowthTable> {
    let pairs = g
        .conjugate_pairs(n_max, (2 * n_max).max(radius))
        .ok_or_else(|| Error::Unsupported(format!("{} has no element enumeration", g.name())))?;
    let nf = |w: &Word| g.normal_form(w).expect("model groups have normal forms");
    // union conjugate elements, keyed by normal form
    let mut cls = Classes::default();
    let mut unresolved = BTreeSet::new();
    for p in &pairs {
        let (a, b) = (nf(&p.u), nf(&p.v));
        if p.cl.is_some() {
            let (i, j) = (cls.id(a), cls.id(b));
            cls.union(i, j);
        } else {
            unresolved.insert((a.clone().min(b.clone()), a.max(b)));
        }
    }
    let pair_bound = |x: &[Letter], y: &[Letter]| g.ann_lower_bound(x, y);
    let search = AreaSearch::new(g.presentation()).with_pair_bound(&pair_bound);
    let classes: Vec<Vec<Word>> = (0..=n_max).map(|n| rotation_classes(g, n)).collect();
    let mut jobs: BTreeMap<(Word, Word), usize> = BTreeMap::new();
    let mut open_pairs = BTreeMap::new();
    for lu in 0..=n_max {
        for lv in 0..=(n_max - lu) {
            for u in &classes[lu] {
                for v in &classes[lv] {
                    let key = canonical_pair(u, v);
                    if jobs.contains_key(&key) || open_pairs.contains_key(&key) {
                        continue;
                    }
                    let (a, b) = (nf(u), nf(v));
                    if cls.same(&a, &b) {
                        jobs.insert(key, lu + lv);
                    } else if unresolved.contains(&(a.clone().min(b.clone()), a.max(b))) {
                        open_pairs.insert(key, lu + lv);
                    }
                }
            }
        }
    }
    let jobs: Vec<((Word, Word), usize)> = jobs.into_iter().collect();
    let results: Vec<(usize, AnnBounds)> = jobs
        .par_iter()
        .map(|((u, v), size)| (*size, ann_bounds(g, u, v, &search, radius, budget)))
        .collect();
    let mut table = GrowthTable::new(g.name(), Function::Ann);
    table.radius = radius;
    table.budget_nodes = budget.max_nodes;
    for n in 0..=n_max {
        let mut lo = 0;
        let mut hi = Some(0u64);
        let mut all_exact = true;
        for (_, b) in results.iter().filter(|r| r.0 <= n) {
            lo = lo.max(b.lower);
            hi = hi.zip(b.upper).map(|(h, u)| h.max(u));
            all_exact &= b.upper == Some(b.lower);
        }
        if open_pairs.values().any(|&s| s <= n) {
            table.push(n, lo, Kind::Lower);
        } else {
            push_bounds(&mut table, n, lo, hi, !all_exact);
        }
    }
    Ok(table)
}

struct AnnBounds {
    lower: u64,
    upper: Option<u64>,
}

/// Peel search first; when it runs out, the group's certified conjugator
/// and its ledger give an upper bound.
fn ann_bounds(g: &dyn Group, u: &Word, v: &Word, search: &AreaSearch<'_>, radius: usize, budget: AreaBudget) -> AnnBounds {
    let rep = annular_area(u, v, search, budget);
    match rep.outcome {
        AreaOutcome::Exact(k) => AnnBounds { lower: k, upper: Some(k) },
        AreaOutcome::Unknown { lower, upper } => {
            let cert = g.conjugator(u, v, radius).ok().and_then(|c| c.ledger.map(|l| l.len() as u64));
            let upper = match (upper, cert) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            let lower = lower.max(ann_lower_bound(g, u, v));
            AnnBounds { lower, upper }
        }
        AreaOutcome::NotNullHomotopic => AnnBounds { lower: 0, upper: None },
    }
}

/// Annular area is unchanged by rotating either boundary, by swapping them,
/// and by inverting both.
fn canonical_pair(u: &Word, v: &Word) -> (Word, Word) {
    let ui = u.inverse().least_rotation();
    let vi = v.inverse().least_rotation();
    [(u.clone(), v.clone()), (v.clone(), u.clone()), (ui.clone(), vi.clone()), (vi, ui)]
        .into_iter()
        .min()
        .expect("four candidates")
}

/// A bound independent of the conjugator: exponent sums of `γuγ⁻¹v⁻¹` do not
/// depend on `γ`, and distinct cyclic words need at least one cell.
fn ann_lower_bound(g: &dyn Group, u: &Word, v: &Word) -> u64 {
    let p = g.presentation();
    let mut lb = u64::from(u != v);
    for x in 0..p.alphabet().len() {
        let e = (u.exponent_sum(x) - v.exponent_sum(x)).unsigned_abs();
        let m = p.relators().iter().map(|r| r.exponent_sum(x).unsigned_abs()).max().unwrap_or(0);
        if m > 0 {
            lb = lb.max(e.div_ceil(m));
        }
    }
    lb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    fn budget() -> AreaBudget {
        AreaBudget::new(200_000, 64, 24)
    }

    #[test]
    fn area_tables_small() {
        let g = lookup("G1").unwrap();
        let t = survey_area(g.as_ref(), 4, budget());
        assert_eq!(t.exact(0), Some(&0.into()));
        assert_eq!(t.exact(4), Some(&1.into()));
        let g = lookup("BS12").unwrap();
        let t = survey_area(g.as_ref(), 5, budget());
        assert_eq!(t.exact(4), Some(&0.into()));
        assert_eq!(t.exact(5), Some(&1.into()));
    }

    #[test]
    fn area_oracle_by_brute_force() {
        // independent count: minimum over all words of length ≤ 4 in G1
        // that are trivial, using exact_area directly on each word
        let g = lookup("G1").unwrap();
        let p = g.presentation();
        let mut best = 0;
        for n in 0..=4 {
            for w in reduced_words(p.alphabet(), n) {
                if g.is_identity(&w) {
                    best = best.max(crate::area::exact_area(&w, p, budget()).exact().unwrap());
                }
            }
        }
        assert_eq!(survey_area(g.as_ref(), 4, budget()).exact(4), Some(&best.into()));
    }

    #[test]
    fn cl_table_small() {
        let g = lookup("G1").unwrap();
        let t = survey_cl(g.as_ref(), 4, 8).unwrap();
        assert_eq!(t.exact(0), Some(&0.into()));
        // oracle: ball search over every word pair of total length ≤ 4
        let h = crate::models::Heis::new();
        let p = g.presentation();
        let words: Vec<Word> = (0..=4).flat_map(|n| reduced_words(p.alphabet(), n)).collect();
        let mut best = 0;
        for u in &words {
            for v in words.iter().filter(|v| v.len() + u.len() <= 4) {
                if let Ok((c, _)) = crate::conjugacy::cl_bfs_ball(&h, u, v, 6) {
                    best = best.max(c);
                }
            }
        }
        assert_eq!(t.exact(4), Some(&best.into()));
        assert!(survey_cl(lookup("G4").unwrap().as_ref(), 2, 2).is_err());
    }

    #[test]
    fn ann_small() {
        let g = lookup("G1").unwrap();
        let t = survey_ann(g.as_ref(), 4, 8, budget()).unwrap();
        let area = survey_area(g.as_ref(), 4, budget());
        for n in 0..=4 {
            // degenerate pairs make Ann dominate Area
            assert!(area.exact(n).unwrap() <= t.exact(n).unwrap());
        }
        // (a, a c): b⁻¹ a b = c a costs two cells
        assert_eq!(t.exact(3), Some(&2.into()));
        let b = lookup("BS12").unwrap();
        let t = survey_ann(b.as_ref(), 5, 8, budget()).unwrap();
        assert!((0..=5).all(|n| t.exact(n).is_some()));
    }
}
