//! `A = ⟨a,b,c,d | [a,b]c⁻¹, [a,c], [b,c], [b,d]⟩` as the HNN extension of
//! `K = ⟨a,c⟩ ∗ ⟨d⟩ ≅ Z² ∗ Z` with stable letter `b` acting by `a ↦ c⁻¹a`.

use super::{britton_reduce, BrittonWord, Hnn};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KSyl {
    /// `a^α c^γ`, never both zero.
    Ac(i64, i64),
    /// `d^δ`, `δ ≠ 0`.
    D(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct KElem(pub Vec<KSyl>);

impl KElem {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, s: KSyl) {
        match (self.0.last_mut(), s) {
            (Some(KSyl::Ac(a, c)), KSyl::Ac(a2, c2)) => {
                *a += a2;
                *c += c2;
                if *a == 0 && *c == 0 {
                    self.0.pop();
                }
            }
            (Some(KSyl::D(d)), KSyl::D(d2)) => {
                *d += d2;
                if *d == 0 {
                    self.0.pop();
                }
            }
            (_, s) => {
                if s != KSyl::Ac(0, 0) && s != KSyl::D(0) {
                    self.0.push(s);
                }
            }
        }
    }

    pub fn mul(&self, other: &KElem) -> KElem {
        let mut out = self.clone();
        for s in &other.0 {
            out.push(s.clone());
        }
        out
    }

    /// The normal-form word `a^α c^γ d^δ …` over indices `(a, c, d)`.
    pub fn to_word(&self, a: usize, c: usize, d: usize) -> Word {
        let mut ls = Vec::new();
        for s in &self.0 {
            match *s {
                KSyl::Ac(x, y) => {
                    ls.extend(Word::power(Letter::pos(a), x).into_letters());
                    ls.extend(Word::power(Letter::pos(c), y).into_letters());
                }
                KSyl::D(x) => ls.extend(Word::power(Letter::pos(d), x).into_letters()),
            }
        }
        Word::from_letters(ls)
    }
}

/// Generator indices of `a, b, c, d`; letters of any other generator are
/// ignored, which realises the retraction killing `s`.
#[derive(Clone, Copy, Debug)]
pub struct AHnn {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl AHnn {
    pub fn standard() -> Self {
        Self { a: 0, b: 1, c: 2, d: 3 }
    }

    pub fn in_g4() -> Self {
        Self::standard()
    }
}

impl Hnn for AHnn {
    type Base = KElem;

    fn is_stable(&self, l: Letter) -> bool {
        l.gen() == self.b
    }

    fn base_identity(&self) -> KElem {
        KElem::default()
    }

    fn base_letter(&self, l: Letter) -> KElem {
        let e = l.sign() as i64;
        let g = l.gen();
        KElem(if g == self.a {
            vec![KSyl::Ac(e, 0)]
        } else if g == self.c {
            vec![KSyl::Ac(0, e)]
        } else if g == self.d {
            vec![KSyl::D(e)]
        } else {
            vec![]
        })
    }

    fn base_mul(&self, x: &KElem, y: &KElem) -> KElem {
        x.mul(y)
    }

    fn base_is_identity(&self, x: &KElem) -> bool {
        x.is_identity()
    }

    // b (a^α c^γ) b⁻¹ = a^α c^(γ-α); every element of K is in the domain
    fn pinch(&self, t: Letter, g: &KElem) -> Option<KElem> {
        let e = t.sign() as i64;
        let mut out = KElem::default();
        for s in &g.0 {
            out.push(match *s {
                KSyl::Ac(a, c) => KSyl::Ac(a, c - e * a),
                KSyl::D(d) => KSyl::D(d),
            });
        }
        Some(out)
    }
}

pub fn a_reduce(w: &Word) -> BrittonWord<KElem> {
    britton_reduce(&AHnn::standard(), w.letters().iter().copied())
}

pub fn a_is_identity(w: &Word) -> bool {
    let r = a_reduce(w);
    r.tail.is_empty() && r.head.is_identity()
}

/// An `s`- and `b`-free word over `a c d` equal in G4 to `w`, when `w`
/// represents an element of `⟨a,c,d⟩`: kill `s` (a retraction onto A), then
/// remove `b`-pinches in A.
pub fn k_representative(w: &Word) -> Option<Word> {
    let r = a_reduce(w);
    r.tail.is_empty().then(|| r.head.to_word(0, 2, 3))
}
