//! Conjugator solvers and certificates. Conjugation is `w u w⁻¹ = v`
//! throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hnn::b::b_is_identity;
use crate::models::heis::heis_eval_with_ledger;
use crate::models::{GroupModel, Heis};
use crate::presentation::{verify_ledger, AreaLedger, Presentation};
use crate::word::{Letter, Word};

mod bfs;
mod g4;
mod pairs;
mod products;

pub use bfs::{cl_bfs, cl_bfs_ball, ConjugacyOrbit, ElementBall};
pub use g4::{g4_conjugator_search, G4Search};
pub use pairs::{bs12_conjugacy_verdict, conjugate_pairs, word_conjugator_search, PairRecord};
pub use products::{bfs_solver, direct_product_conjugator, free_product_conjugacy, FactorSolver};

/// The word whose triviality certifies `w u w⁻¹ = v`.
pub fn conjugation_word(u: &Word, v: &Word, w: &Word) -> Word {
    w.concat(u).concat(&w.inverse()).concat(&v.inverse()).free_reduce()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub u: Word,
    pub v: Word,
    pub w: Word,
    /// Derivation of the empty word from `w u w⁻¹ v⁻¹`.
    pub ledger: Option<AreaLedger>,
}

impl ConjugacyCertificate {
    /// Builds a certificate, rejecting it unless `is_identity` accepts
    /// `w u w⁻¹ v⁻¹` and any ledger replays in `p`.
    pub fn new(
        u: Word,
        v: Word,
        w: Word,
        ledger: Option<AreaLedger>,
        p: &Presentation,
        is_identity: &dyn Fn(&Word) -> bool,
    ) -> Result<Self> {
        let c = Self { u, v, w, ledger };
        if c.verify(p, is_identity) {
            Ok(c)
        } else {
            Err(Error::CertificateRejected)
        }
    }

    pub fn word(&self) -> Word {
        conjugation_word(&self.u, &self.v, &self.w)
    }

    pub fn verify(&self, p: &Presentation, is_identity: &dyn Fn(&Word) -> bool) -> bool {
        let x = self.word();
        if !is_identity(&x) {
            return false;
        }
        match &self.ledger {
            None => true,
            Some(l) => l.start.free_reduce() == x && l.end.is_empty() && verify_ledger(l, p),
        }
    }

    pub fn to_text(&self, p: &Presentation) -> String {
        let mut out = format!(
            "group: {}\nu: {}\nv: {}\nw: {}\n",
            p.name(),
            p.format_word(&self.u),
            p.format_word(&self.v),
            p.format_word(&self.w)
        );
        if let Some(l) = &self.ledger {
            out.push_str(&l.to_text(p));
        }
        out
    }

    /// Parses the output of [`Self::to_text`]; the result is not yet verified.
    pub fn from_text(p: &Presentation, text: &str) -> Result<Self> {
        let get = |key: &str| -> Result<Word> {
            let line = text
                .lines()
                .find_map(|l| l.trim().strip_prefix(key).and_then(|r| r.strip_prefix(':')))
                .ok_or_else(|| Error::Manifest(format!("certificate without `{key}`")))?;
            Ok(p.parse_word(line.trim())?)
        };
        let (u, v, w) = (get("u")?, get("v")?, get("w")?);
        let ledger = if text.lines().any(|l| l.trim_start().starts_with("start:")) {
            Some(AreaLedger::from_text(p, text)?)
        } else {
            None
        };
        Ok(Self { u, v, w, ledger })
    }
}

/// Solves `α·y + β·x = γ`. For `|γ| ≤ max(|α|,|β|)` both unknowns are bounded
/// by `max(|α|,|β|)`. `None` iff `gcd(α,β) ∤ γ` or `α = β = 0`.
pub fn bezout_bounded(alpha: i64, beta: i64, gamma: i64) -> Option<(i64, i64)> {
    let (a, b, c) = (alpha as i128, beta as i128, gamma as i128);
    if a == 0 && b == 0 {
        return None;
    }
    if a == 0 {
        return (c % b == 0).then(|| ((c / b) as i64, 0));
    }
    if b == 0 {
        return (c % a == 0).then(|| (0, (c / a) as i64));
    }
    let e = a.extended_gcd(&b);
    let g = e.gcd;
    if c % g != 0 {
        return None;
    }
    // a·(e.x) + b·(e.y) = g, so y0 = e.x·c/g and x0 = e.y·c/g
    let (y0, x0) = (e.x * (c / g), e.y * (c / g));
    let (pa, pb) = (a / g, b / g);
    // x = x0 + k·pa, y = y0 − k·pb; shrink the unknown with the larger period
    let k = if a.abs() >= b.abs() { nearest_div(-x0, pa) } else { nearest_div(y0, pb) };
    let best = [k - 1, k, k + 1]
        .into_iter()
        .map(|k| (x0 + k * pa, y0 - k * pb))
        .min_by_key(|&(x, y)| {
            let (p, q) = if a.abs() >= b.abs() { (x.abs(), y.abs()) } else { (y.abs(), x.abs()) };
            (p, q, x, y)
        })
        .expect("three candidates");
    Some((best.0 as i64, best.1 as i64))
}

fn nearest_div(n: i128, d: i128) -> i128 {
    let (q, r) = n.div_mod_floor(&d);
    if 2 * r.abs() > d.abs() {
        q + d.signum()
    } else {
        q
    }
}

/// Conjugator `a^x b^y` in G1. `γ(v) − γ(u) = β·x − α·y` for `u = a^α b^β c^γ`.
pub fn heis_conjugator(u: &Word, v: &Word) -> Result<ConjugacyCertificate> {
    let h = Heis::new();
    let (eu, ev) = (h.eval_word(u), h.eval_word(v));
    if eu.alpha != ev.alpha || eu.beta != ev.beta {
        return Err(Error::NotConjugate);
    }
    let d = ev.gamma - eu.gamma;
    let (x, y) = if eu.alpha == 0 && eu.beta == 0 {
        if d != 0 {
            return Err(Error::NotConjugate);
        }
        (0, 0)
    } else {
        bezout_bounded(-eu.alpha, eu.beta, d).ok_or(Error::NotConjugate)?
    };
    let w = Word::power(Letter::pos(0), x).concat(&Word::power(Letter::pos(1), y));
    let (nf, ledger) = heis_eval_with_ledger(&conjugation_word(u, v, &w));
    debug_assert!(h.is_identity(&nf));
    let p = h.presentation();
    ConjugacyCertificate::new(u.clone(), v.clone(), w, Some(ledger), p, &|x| h.is_identity(&h.eval_word(x)))
}

/// Exponents `(x, y)` of a Heisenberg conjugator `a^x b^y`.
pub fn heis_exponents(w: &Word) -> (i64, i64) {
    (w.exponent_sum(0), w.exponent_sum(1))
}

/// The shift `k` with `s^{-k} u s^{k} = v` in B, where
/// `u = s^{χ₁}e₁⋯s^{χ_m}e_m` and `v = s^{ξ₁}e₁⋯s^{ξ_m}e_m` over B's alphabet
/// `a d s`. The conjugator is `s^{-k}`.
pub fn b_coefficient_conjugator(chis: &[i64], xis: &[i64], es: &[Letter]) -> Result<BigInt> {
    if chis.len() != es.len() || xis.len() != es.len() || es.is_empty() {
        return Err(Error::Degenerate("lists must have equal positive length".into()));
    }
    if es.iter().any(|l| l.gen() > 1) {
        return Err(Error::Degenerate("corridor letters must be a or d".into()));
    }
    let mu: i64 = es.iter().map(|l| l.sign() as i64).sum();
    if mu == 0 {
        return Err(Error::Degenerate("zero total exponent".into()));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let pow2 = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(two.clone(), e as usize)
        } else {
            num_traits::pow(two.clone(), (-e) as usize).recip()
        }
    };
    let mut sum = BigRational::zero();
    let mut prefix = 0;
    for i in 0..es.len() {
        sum += pow2(prefix) * BigRational::from_integer(BigInt::from(chis[i] - xis[i]));
        prefix += es[i].sign() as i64;
    }
    let k = sum / (BigRational::one() - pow2(mu));
    if !k.is_integer() {
        return Err(Error::NotConjugate);
    }
    let k = k.to_integer();
    let kk: i64 = k.clone().try_into().map_err(|_| Error::Unsupported("shift too large".into()))?;
    let (u, v) = (corridor_word(chis, es), corridor_word(xis, es));
    let w = Word::power(Letter::pos(2), -kk);
    if b_is_identity(&conjugation_word(&u, &v, &w)) {
        Ok(k)
    } else {
        // the affine image forces this k, but a pinch parity fails in B
        Err(Error::NotConjugate)
    }
}

/// `s^{c₁}e₁⋯s^{c_m}e_m` over B's alphabet.
pub fn corridor_word(cs: &[i64], es: &[Letter]) -> Word {
    let mut ls = Vec::new();
    for (c, e) in cs.iter().zip(es) {
        ls.extend(Word::power(Letter::pos(2), *c).into_letters());
        ls.push(*e);
    }
    Word::from_letters(ls).free_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_b, heisenberg};

    fn brute_bezout(a: i64, b: i64, c: i64, r: i64) -> Option<(i64, i64)> {
        (-r..=r).flat_map(|x| (-r..=r).map(move |y| (x, y))).find(|&(x, y)| a * y + b * x == c)
    }

    #[test]
    fn bezout_examples() {
        let (x, y) = bezout_bounded(2, 3, 1).unwrap();
        assert_eq!(2 * y + 3 * x, 1);
        assert!(x.abs() <= 3 && y.abs() <= 3);
        assert_eq!((x, y), (1, -1));
        assert_eq!(bezout_bounded(5, 0, 10), Some((0, 2)));
        assert_eq!(bezout_bounded(4, 6, 1), None);
        assert_eq!(bezout_bounded(0, 0, 0), None);
    }

    #[test]
    fn bezout_against_window_search() {
        for a in -7..=7i64 {
            for b in -7..=7i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                let m = a.abs().max(b.abs());
                for c in -m..=m {
                    let got = bezout_bounded(a, b, c);
                    let oracle = brute_bezout(a, b, c, m);
                    assert_eq!(got.is_some(), oracle.is_some(), "{a} {b} {c}");
                    if let Some((x, y)) = got {
                        assert_eq!(a * y + b * x, c);
                        assert!(x.abs() <= m && y.abs() <= m, "{a} {b} {c} -> {x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn heis_examples() {
        let g = heisenberg();
        let w = |s: &str| g.parse_word(s).unwrap();
        let c = heis_conjugator(&w("b"), &w("b c^4")).unwrap();
        assert_eq!(c.w, w("a^4"));
        assert!(c.ledger.as_ref().is_some_and(|l| verify_ledger(l, &g)));
        assert_eq!(heis_conjugator(&w("b"), &w("b")).unwrap().w, Word::empty());
        assert!(matches!(heis_conjugator(&w("a"), &w("b")), Err(Error::NotConjugate)));
        assert!(matches!(heis_conjugator(&w("c"), &w("c^2")), Err(Error::NotConjugate)));
        // a^2 b conjugates only to c-shifts by multiples of gcd(2,1)
        assert!(heis_conjugator(&w("a^2 b"), &w("a^2 b c^5")).is_ok());
        assert!(matches!(heis_conjugator(&w("a^2 b^2"), &w("a^2 b^2 c")), Err(Error::NotConjugate)));
    }

    #[test]
    fn corrupted_certificate_fails() {
        let g = heisenberg();
        let w = |s: &str| g.parse_word(s).unwrap();
        let h = Heis::new();
        let id = |x: &Word| h.is_identity(&h.eval_word(x));
        let mut c = heis_conjugator(&w("b"), &w("b c^4")).unwrap();
        assert!(c.verify(&g, &id));
        let text = c.to_text(&g);
        let back = ConjugacyCertificate::from_text(&g, &text).unwrap();
        assert_eq!(back, c);
        c.w = w("a^3");
        assert!(!c.verify(&g, &id));
        let mut c = heis_conjugator(&w("b"), &w("b c^4")).unwrap();
        c.ledger.as_mut().unwrap().steps.pop();
        assert!(!c.verify(&g, &id));
    }

    fn brute_shift(chis: &[i64], xis: &[i64], es: &[Letter], bound: i64) -> Option<i64> {
        let (u, v) = (corridor_word(chis, es), corridor_word(xis, es));
        (-bound..=bound).find(|&k| b_is_identity(&conjugation_word(&u, &v, &Word::power(Letter::pos(2), -k))))
    }

    #[test]
    fn b_formula_examples() {
        let a = Letter::pos(0);
        for (chi, xi) in [(0, 3), (2, -1), (5, 5)] {
            let k = b_coefficient_conjugator(&[chi], &[xi], &[a]).unwrap();
            assert_eq!(k, BigInt::from(xi - chi));
            // the affine model agrees: s^{-k} s^χ a s^k = s^{χ+k} a
            let bs = crate::models::Bs12::new();
            let u = corridor_word(&[chi], &[a]).filter_gens(|g| g != 1);
            let lhs = Word::power(Letter::pos(2), -(xi - chi)).concat(&u).concat(&Word::power(Letter::pos(2), xi - chi));
            let to_bs = |w: &Word| -> Word { w.letters().iter().map(|l| Letter::new(if l.gen() == 2 { 1 } else { 0 }, l.sign())).collect() };
            assert_eq!(bs.eval_word(&to_bs(&lhs)), bs.eval_word(&to_bs(&corridor_word(&[xi], &[a]))));
        }
        let es = [a, Letter::neg(1)];
        assert!(matches!(b_coefficient_conjugator(&[1, 2], &[1, 2], &es), Err(Error::Degenerate(_))));
        // μ = 2: k = (χ−ξ)/(1−4) needs 3 | χ−ξ
        let es = [a, a];
        assert!(matches!(b_coefficient_conjugator(&[1, 0], &[0, 0], &es), Err(Error::NotConjugate)));
        assert_eq!(brute_shift(&[1, 0], &[0, 0], &es, 20), None);
        assert_eq!(b_coefficient_conjugator(&[3, 0], &[0, 0], &es).unwrap(), BigInt::from(-1));
        let _ = group_b();
    }

    #[test]
    fn b_formula_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut hits = 0;
        for _ in 0..1000 {
            let m = rng.gen_range(1..=3);
            let es: Vec<Letter> =
                (0..m).map(|_| Letter::new(rng.gen_range(0..2), if rng.gen_bool(0.7) { 1 } else { -1 })).collect();
            let mu: i64 = es.iter().map(|l| l.sign() as i64).sum();
            let chis: Vec<i64> = (0..m).map(|_| rng.gen_range(-4..=4)).collect();
            let xis: Vec<i64> = (0..m).map(|_| rng.gen_range(-4..=4)).collect();
            let got = b_coefficient_conjugator(&chis, &xis, &es);
            if mu == 0 {
                assert!(matches!(got, Err(Error::Degenerate(_))));
                continue;
            }
            // |k| ≤ Σ 2^{|μᵢ|}|χᵢ−ξᵢ| since |1−2^μ| ≥ 1/2
            let bound = 2 * chis.iter().zip(&xis).map(|(c, x)| (c - x).abs() << m).sum::<i64>() + 2;
            let oracle = brute_shift(&chis, &xis, &es, bound);
            match got {
                Ok(k) => {
                    hits += 1;
                    assert_eq!(Some(i64::try_from(k).unwrap()), oracle, "{chis:?} {xis:?} {es:?}");
                }
                Err(Error::NotConjugate) => assert_eq!(oracle, None, "{chis:?} {xis:?} {es:?}"),
                Err(e) => panic!("{e}"),
            }
        }
        assert!(hits > 100);
    }
}
