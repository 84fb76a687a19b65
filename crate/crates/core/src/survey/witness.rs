use crate::area::AreaBudget;
use crate::error::{Error, Result};
#[cfg(test)]
use crate::groups::{g4, heisenberg};
use crate::hnn::g4::g4_is_identity;
use crate::models::bs12::{bs12_witness_ledger, bs12_witness_word};
use crate::models::heis::heis_eval_with_ledger;
use crate::models::{GroupModel, Heis};
use crate::presentation::AreaLedger;
use crate::word::{Letter, Word};

/// A conjugate pair with conjugator, `w u w⁻¹ = v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: Word,
    pub v: Word,
    pub w: Word,
}

fn pw(g: usize, k: i64) -> Word {
    Word::power(Letter::pos(g), k)
}

fn need_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Degenerate("witness families start at n = 1".into()));
    }
    Ok(())
}

/// `u = b`, `v = b[aⁿ,bⁿ]`, `w = a^{n²}` in G1, checked in the model.
pub fn heis_witness(n: u32) -> Result<Witness> {
    need_positive(n)?;
    let k = n as i64;
    let u = pw(1, 1);
    let v = u.concat(&pw(0, k).commutator(&pw(1, k)));
    let w = pw(0, k * k);
    let h = Heis::new();
    let x = w.concat(&u).concat(&w.inverse()).concat(&v.inverse());
    if !h.is_identity(&h.eval_word(&x)) {
        return Err(Error::CertificateRejected);
    }
    Ok(Witness { u, v, w })
}

/// Ledger for `b[aⁿ,bⁿ]·(b c^{n²})⁻¹`, relating the witness to `(b, b c^{n²})`.
pub fn heis_companion_ledger(n: u32) -> Result<AreaLedger> {
    let wit = heis_witness(n)?;
    let k = n as i64;
    let companion = pw(1, 1).concat(&pw(2, k * k));
    let (_, l) = heis_eval_with_ledger(&wit.v.concat(&companion.inverse()));
    Ok(l)
}

/// Ledger filling `[aⁿ,bⁿ]c^{−n²}`.
pub fn heis_commutator_ledger(n: u32) -> AreaLedger {
    let k = n as i64;
    let w = pw(0, k).commutator(&pw(1, k)).concat(&pw(2, -k * k));
    heis_eval_with_ledger(&w).1
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const S: usize = 4;

/// `u = b⁻¹c^{n²}s`, `v = b⁻¹s` in G4. The pair satisfies `u x = x v` for
/// `x = a^{−n²}d^{n²}`, so the conjugator here is `w = x⁻¹`.
pub fn g4_witness(n: u32) -> Result<Witness> {
    need_positive(n)?;
    let k = (n * n) as i64;
    let u = pw(B, -1).concat(&pw(C, k)).concat(&pw(S, 1));
    let v = pw(B, -1).concat(&pw(S, 1));
    let x = pw(A, -k).concat(&pw(D, k));
    Ok(Witness { u, v, w: x.inverse() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub lhs: Word,
    pub rhs: Word,
    pub holds: bool,
}

/// The chain `u x = b⁻¹c^k s a^{−k}d^k = b⁻¹c^k a^{−k}d^k s = a^{−k}b⁻¹d^k s
/// = a^{−k}d^k b⁻¹s = x v` with `k = n²`, one G4 word-problem call per link.
pub fn g4_chain(n: u32) -> Result<Vec<ChainCheck>> {
    let wit = g4_witness(n)?;
    let k = (n * n) as i64;
    let x = wit.w.inverse();
    let cat = |ws: &[Word]| ws.iter().fold(Word::empty(), |acc, w| acc.concat(w));
    let steps = [
        wit.u.concat(&x),
        cat(&[pw(B, -1), pw(C, k), pw(S, 1), pw(A, -k), pw(D, k)]),
        cat(&[pw(B, -1), pw(C, k), pw(A, -k), pw(D, k), pw(S, 1)]),
        cat(&[pw(A, -k), pw(B, -1), pw(D, k), pw(S, 1)]),
        cat(&[pw(A, -k), pw(D, k), pw(B, -1), pw(S, 1)]),
        x.concat(&wit.v),
    ];
    Ok(steps
        .windows(2)
        .map(|p| ChainCheck {
            lhs: p[0].clone(),
            rhs: p[1].clone(),
            holds: g4_is_identity(&p[0].concat(&p[1].inverse())),
        })
        .collect())
}

/// `s` commutes with `a^{−k}d^k` in G4.
pub fn g4_s_commutes(k: u32) -> bool {
    let x = pw(A, -(k as i64)).concat(&pw(D, k as i64));
    g4_is_identity(&pw(S, 1).commutator(&x))
}

/// `aⁿ s a⁻ⁿ s^{−2ⁿ}` with its doubling ledger of `2ⁿ − 1` steps.
pub fn bs12_witness(n: u32) -> Result<(Word, AreaLedger)> {
    need_positive(n)?;
    Ok((bs12_witness_word(n), bs12_witness_ledger(n)))
}

/// Exact area of the BS12 witness word, with the graded lower bound.
pub fn bs12_witness_area(n: u32, budget: AreaBudget) -> Option<u64> {
    let p = crate::groups::bs12();
    let w = bs12_witness_word(n);
    let bound = |w: &[Letter]| crate::models::bs12::graded_area_bound(w, 0, 1).unwrap_or(0);
    crate::area::AreaSearch::new(&p).with_lower_bound(&bound).area(&w, budget).outcome.exact()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::verify_ledger;

    #[test]
    fn heis_family() {
        let g = heisenberg();
        let w1 = heis_witness(1).unwrap();
        assert_eq!(w1.v, g.parse_word("b a b a^-1 b^-1").unwrap());
        assert_eq!(w1.w, g.parse_word("a").unwrap());
        let w2 = heis_witness(2).unwrap();
        assert_eq!(w2.w, g.parse_word("a^4").unwrap());
        assert!(heis_witness(0).is_err());
        for n in 1..=4 {
            let l = heis_companion_ledger(n).unwrap();
            assert!(verify_ledger(&l, &g));
            assert!(l.end.is_empty());
        }
        let l = heis_commutator_ledger(3);
        assert!(verify_ledger(&l, &g) && l.end.is_empty());
    }

    #[test]
    fn g4_family() {
        let p = g4();
        let w = g4_witness(1).unwrap();
        assert_eq!(w.w, p.parse_word("d^-1 a").unwrap());
        for n in 1..=2 {
            let chain = g4_chain(n).unwrap();
            assert_eq!(chain.len(), 5);
            assert!(chain.iter().all(|c| c.holds), "n = {n}");
        }
        for k in 1..=6 {
            assert!(g4_s_commutes(k));
        }
        // a broken link is detected
        let w = p.parse_word("b^-1 c s a^-1 d").unwrap();
        assert!(!g4_is_identity(&w.concat(&p.parse_word("a^-1 d b^-1 s^2").unwrap().inverse())));
    }

    #[test]
    fn bs12_family() {
        for n in 1..=3 {
            let (w, l) = bs12_witness(n).unwrap();
            assert_eq!(l.len(), (1 << n) - 1);
            assert!(verify_ledger(&l, &crate::groups::bs12()));
            assert_eq!(w, l.start);
            let area = bs12_witness_area(n, AreaBudget::new(100_000, 64, 40)).unwrap();
            assert_eq!(area as usize, l.len());
        }
        assert!(bs12_witness(0).is_err());
    }
}
