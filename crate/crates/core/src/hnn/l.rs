//! `L = ⟨b,c,s | [b,c]⟩ = Z² ∗ Z` with normal forms, and G4 as the multiple
//! HNN extension of L with stable letters `a` (`b ↦ cb, c ↦ c, s ↦ s²`) and
//! `d` (`b ↦ b, s ↦ s²` on `⟨b,s⟩`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{britton_reduce, BrittonWord, Hnn};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LSyl {
    /// `b^β c^γ`, never both zero.
    Bc(i64, i64),
    /// `s^μ`, `μ ≠ 0`.
    S(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LElem(pub Vec<LSyl>);

impl LElem {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, s: LSyl) {
        match (self.0.last_mut(), s) {
            (Some(LSyl::Bc(b, c)), LSyl::Bc(b2, c2)) => {
                *b += b2;
                *c += c2;
                if *b == 0 && *c == 0 {
                    self.0.pop();
                }
            }
            (Some(LSyl::S(m)), LSyl::S(m2)) => {
                *m += m2;
                if m.is_zero() {
                    self.0.pop();
                }
            }
            (_, s) => {
                let trivial = match &s {
                    LSyl::Bc(b, c) => *b == 0 && *c == 0,
                    LSyl::S(m) => m.is_zero(),
                };
                if !trivial {
                    self.0.push(s);
                }
            }
        }
    }

    pub fn mul(&self, other: &LElem) -> LElem {
        let mut out = self.clone();
        for s in &other.0 {
            out.push(s.clone());
        }
        out
    }

    pub fn map(&self, f: impl Fn(&LSyl) -> LSyl) -> LElem {
        let mut out = LElem::default();
        for s in &self.0 {
            out.push(f(s));
        }
        out
    }

    /// `(Σ|β|, Σ|γ|, Σ|μ|)` over the normal form.
    pub fn sizes(&self) -> (u64, u64, BigInt) {
        let mut out = (0u64, 0u64, BigInt::zero());
        for s in &self.0 {
            match s {
                LSyl::Bc(b, c) => {
                    out.0 += b.unsigned_abs();
                    out.1 += c.unsigned_abs();
                }
                LSyl::S(m) => out.2 += m.abs(),
            }
        }
        out
    }
}

/// Generator indices of `a, b, c, d, s`; `a` and `d` are absent for L itself.
#[derive(Clone, Copy, Debug)]
pub struct LHnn {
    pub a: Option<usize>,
    pub b: usize,
    pub c: usize,
    pub d: Option<usize>,
    pub s: usize,
}

impl LHnn {
    pub fn standard() -> Self {
        Self { a: None, b: 0, c: 1, d: None, s: 2 }
    }

    pub fn in_g4() -> Self {
        Self { a: Some(0), b: 1, c: 2, d: Some(3), s: 4 }
    }
}

impl Hnn for LHnn {
    type Base = LElem;

    fn is_stable(&self, l: Letter) -> bool {
        Some(l.gen()) == self.a || Some(l.gen()) == self.d
    }

    fn base_identity(&self) -> LElem {
        LElem::default()
    }

    fn base_letter(&self, l: Letter) -> LElem {
        let e = l.sign() as i64;
        let g = l.gen();
        LElem(vec![if g == self.b {
            LSyl::Bc(e, 0)
        } else if g == self.c {
            LSyl::Bc(0, e)
        } else if g == self.s {
            LSyl::S(BigInt::from(e))
        } else {
            panic!("letter outside L")
        }])
    }

    fn base_mul(&self, x: &LElem, y: &LElem) -> LElem {
        x.mul(y)
    }

    fn base_is_identity(&self, x: &LElem) -> bool {
        x.is_identity()
    }

    fn pinch(&self, t: Letter, g: &LElem) -> Option<LElem> {
        let is_a = Some(t.gen()) == self.a;
        let even = || g.0.iter().all(|s| !matches!(s, LSyl::S(m) if m.is_odd()));
        let no_c = || g.0.iter().all(|s| !matches!(s, LSyl::Bc(_, c) if *c != 0));
        match (is_a, t.is_positive()) {
            (true, true) => Some(g.map(|s| match s {
                LSyl::Bc(b, c) => LSyl::Bc(*b, c + b),
                LSyl::S(m) => LSyl::S(m * 2),
            })),
            (true, false) => even().then(|| {
                g.map(|s| match s {
                    LSyl::Bc(b, c) => LSyl::Bc(*b, c - b),
                    LSyl::S(m) => LSyl::S(m / 2),
                })
            }),
            (false, true) => no_c().then(|| {
                g.map(|s| match s {
                    LSyl::S(m) => LSyl::S(m * 2),
                    x => x.clone(),
                })
            }),
            (false, false) => (no_c() && even()).then(|| {
                g.map(|s| match s {
                    LSyl::S(m) => LSyl::S(m / 2),
                    x => x.clone(),
                })
            }),
        }
    }
}

/// Normal form of a word over `b c s`.
pub fn l_normal_form(w: &Word) -> LElem {
    britton_reduce(&LHnn::standard(), w.letters().iter().copied()).head
}

pub fn l_is_identity(w: &Word) -> bool {
    l_normal_form(w).is_identity()
}

/// Reduces a G4 word over L; the result has no stable letters iff the word
/// represents an element of L.
pub fn g4_reduce_over_l(w: &Word) -> BrittonWord<LElem> {
    britton_reduce(&LHnn::in_g4(), w.letters().iter().copied())
}

/// Word problem in G4 through the L tower.
pub fn g4_is_identity_via_l(w: &Word) -> bool {
    let r = g4_reduce_over_l(w);
    r.tail.is_empty() && r.head.is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{g4, group_l};

    #[test]
    fn l_examples() {
        let l = group_l();
        assert!(l_is_identity(&l.parse_word("b c b^-1 c^-1").unwrap()));
        assert!(!l_is_identity(&l.parse_word("b s b^-1 s^-1").unwrap()));
        let nf = l_normal_form(&l.parse_word("c b s^3 b^2 b^-2 s^-1").unwrap());
        assert_eq!(nf, LElem(vec![LSyl::Bc(1, 1), LSyl::S(BigInt::from(2))]));
    }

    #[test]
    fn g4_relators_vanish() {
        let p = g4();
        for r in p.relators() {
            assert!(g4_is_identity_via_l(r), "{r:?}");
        }
        assert!(!g4_is_identity_via_l(&p.parse_word("b s b^-1 s^-1").unwrap()));
        assert!(g4_is_identity_via_l(&p.parse_word("b a b^-1 a^-1 c").unwrap()));
    }
}
