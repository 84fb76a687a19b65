//! `E = ⟨a,c,d,s | [a,c], s^a s⁻², s^d s⁻²⟩` as a multiple HNN extension of
//! `F(c,s)` with stable letters `a` (`c ↦ c, s ↦ s²`) and `d` (`s ↦ s²`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{britton_reduce, Hnn, RunWord};
use crate::groups::group_e;
use crate::presentation::{AreaLedger, LedgerBuilder, Presentation};
use crate::word::{Letter, Word};

/// Generator indices of `a, c, d, s` in the ambient alphabet.
#[derive(Clone, Copy, Debug)]
pub struct EHnn {
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub s: usize,
}

impl EHnn {
    /// Indices in E's own alphabet `a c d s`.
    pub fn standard() -> Self {
        Self { a: 0, c: 1, d: 2, s: 3 }
    }

    /// Indices in G4's alphabet `a b c d s`.
    pub fn in_g4() -> Self {
        Self { a: 0, c: 2, d: 3, s: 4 }
    }

    fn s_runs_even(&self, g: &RunWord) -> bool {
        g.runs().iter().all(|(x, e)| *x != self.s || e.is_even())
    }

    fn single_s_run(&self, g: &RunWord) -> Option<BigInt> {
        match g.runs() {
            [] => Some(BigInt::zero()),
            [(x, e)] if *x == self.s => Some(e.clone()),
            _ => None,
        }
    }

    fn scale_s(&self, g: &RunWord, f: impl Fn(&BigInt) -> BigInt) -> RunWord {
        g.scale(|x, e| if x == self.s { f(e) } else { e.clone() })
    }

    /// Legal pinch test; the fold-based oracle in tests agrees with these
    /// run-parity shortcuts.
    pub fn pinch_legal(&self, t: Letter, g: &RunWord) -> bool {
        match (t.gen() == self.a, t.is_positive()) {
            (true, true) => true,
            (true, false) => self.s_runs_even(g),
            (false, true) => self.single_s_run(g).is_some(),
            (false, false) => self.single_s_run(g).is_some_and(|e| e.is_even()),
        }
    }
}

impl Hnn for EHnn {
    type Base = RunWord;

    fn is_stable(&self, l: Letter) -> bool {
        l.gen() == self.a || l.gen() == self.d
    }

    fn base_identity(&self) -> RunWord {
        RunWord::new()
    }

    fn base_letter(&self, l: Letter) -> RunWord {
        assert!(l.gen() == self.c || l.gen() == self.s, "letter outside E");
        RunWord::letter(l)
    }

    fn base_mul(&self, x: &RunWord, y: &RunWord) -> RunWord {
        x.mul(y)
    }

    fn base_is_identity(&self, x: &RunWord) -> bool {
        x.is_empty()
    }

    fn pinch(&self, t: Letter, g: &RunWord) -> Option<RunWord> {
        if !self.pinch_legal(t, g) {
            return None;
        }
        Some(if t.is_positive() {
            self.scale_s(g, |e| e * 2)
        } else {
            self.scale_s(g, |e| e / 2)
        })
    }
}

/// Word problem in E, for words over E's own alphabet.
pub fn e_is_identity(w: &Word) -> bool {
    e_is_identity_in(&EHnn::standard(), w)
}

pub fn e_is_identity_in(h: &EHnn, w: &Word) -> bool {
    super::hnn_is_identity(h, w.letters().iter().copied())
}

/// Reduced form of `w`; the number of stable letters left is zero iff `w`
/// lies in `F(c,s)`.
pub fn e_reduce(h: &EHnn, w: &Word) -> super::BrittonWord<RunWord> {
    britton_reduce(h, w.letters().iter().copied())
}

/// Relator-by-relator derivation of an identity word of E down to the empty
/// word. Each pinch is removed by walking its opening stable letter across the
/// base subword one letter (or one `s²` pair) at a time. `None` when `w ≠ 1`.
pub fn e_identity_ledger(w: &Word) -> Option<AreaLedger> {
    let p = group_e();
    let h = EHnn::standard();
    if !e_is_identity(w) {
        return None;
    }
    let mut lb = LedgerBuilder::new(&p, w);
    while !lb.current().is_empty() {
        let (pos, t, nxt) = find_pinch(&h, lb.current())?;
        step_across(&p, &h, &mut lb, pos, t, nxt).ok()?;
    }
    Some(lb.finish())
}

// Leftmost innermost legal pinch: position of its opening letter and the
// letter following it.
fn find_pinch(h: &EHnn, w: &Word) -> Option<(usize, Letter, Letter)> {
    let ls = w.letters();
    let stable: Vec<usize> = (0..ls.len()).filter(|&i| h.is_stable(ls[i])).collect();
    for pair in stable.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        if ls[j] != ls[i].inverse() {
            continue;
        }
        let g = RunWord::from_word(&Word::from_letters(ls[i + 1..j].to_vec()));
        if h.pinch_legal(ls[i], &g) {
            return Some((i, ls[i], ls[i + 1]));
        }
    }
    None
}

fn step_across(
    p: &Presentation,
    h: &EHnn,
    lb: &mut LedgerBuilder<'_>,
    pos: usize,
    t: Letter,
    x: Letter,
) -> crate::Result<()> {
    let tw = Word::letter(t);
    let xw = Word::letter(x);
    if x.gen() == h.c {
        // only a commutes with c
        return lb.replace(pos, 2, &xw.concat(&tw));
    }
    let _ = p;
    if t.is_positive() {
        // t s^e = s^2e t
        lb.replace(pos, 2, &xw.concat(&xw).concat(&tw))
    } else {
        // t^-1 s^2e = s^e t^-1
        lb.replace(pos, 3, &xw.concat(&tw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hnn::fold::fold;
    use crate::presentation::verify_ledger;

    fn w(s: &str) -> Word {
        group_e().parse_word(s).unwrap()
    }

    #[test]
    fn pinch_examples() {
        let h = EHnn::standard();
        let r = e_reduce(&h, &w("a s a^-1"));
        assert_eq!((r.tail.len(), r.head.to_word()), (0, w("s^2")));
        let r = e_reduce(&h, &w("a^-1 s a"));
        assert_eq!(r.tail.len(), 2);
        let r = e_reduce(&h, &w("d^-1 s^2 d"));
        assert_eq!((r.tail.len(), r.head.to_word()), (0, w("s")));
    }

    #[test]
    fn identity_examples() {
        assert!(e_is_identity(&w("a c a^-1 c^-1")));
        assert!(e_is_identity(&w("a s a^-1 s^-2")));
        assert!(!e_is_identity(&w("a^-1 s a s^-1")));
        for r in group_e().relators() {
            assert!(e_is_identity(r));
        }
    }

    #[test]
    fn parity_shortcut_matches_folding() {
        let e = group_e();
        let g = fold(&[w("c"), w("s^2")]);
        for len in 0..=6 {
            for x in crate::word::reduced_words(e.alphabet(), len) {
                if x.letters().iter().any(|l| l.gen() == 0 || l.gen() == 2) {
                    continue;
                }
                let even = EHnn::standard().pinch_legal(Letter::neg(0), &RunWord::from_word(&x));
                assert_eq!(even, g.contains(&x), "{x:?}");
            }
        }
    }

    #[test]
    fn ledgers_replay_within_bound() {
        for s in ["a s a^-1 s^-2", "a^2 s a^-2 s^-4", "d a s a^-1 d^-1 s^-4", "a c s a^-1 s^-2 c^-1", "a^-1 s^2 c a c^-1 s^-1"] {
            let x = w(s);
            let l = e_identity_ledger(&x).unwrap();
            assert!(verify_ledger(&l, &group_e()));
            assert!(l.end.is_empty());
            let count = |g: usize| x.letter_count(g) as u64;
            let bound = (count(1) + count(3)) << (count(0) + count(2));
            assert!(l.len() as u64 <= bound, "{s}: {} > {bound}", l.len());
        }
        assert!(e_identity_ledger(&w("a^-1 s a s^-1")).is_none());
    }
}
