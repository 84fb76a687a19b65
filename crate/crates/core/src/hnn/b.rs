//! `B = ⟨a,d,s | s^a s⁻², s^d s⁻²⟩`, two copies of BS(1,2) amalgamated along
//! `⟨s⟩`. Elements are alternating syllables, each a dyadic affine map from
//! one factor and none in `⟨s⟩` (except a lone syllable).

use crate::models::{Bs12, Bs12Element, Dyadic, GroupModel};
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BElem(pub Vec<(u8, Bs12Element)>);

/// Generator indices of `a, d, s`; other letters are ignored (the retraction
/// killing `b` and `c`).
#[derive(Clone, Debug)]
pub struct BAmalgam {
    pub a: usize,
    pub d: usize,
    pub s: usize,
    model: Bs12,
}

impl BAmalgam {
    pub fn standard() -> Self {
        Self { a: 0, d: 1, s: 2, model: Bs12::new() }
    }

    pub fn in_g4() -> Self {
        Self { a: 0, d: 3, s: 4, model: Bs12::new() }
    }

    pub fn model(&self) -> &Bs12 {
        &self.model
    }

    pub fn identity(&self) -> BElem {
        BElem::default()
    }

    /// Multiplies by one syllable of factor `f` on the right.
    pub fn push(&self, x: &mut BElem, f: u8, g: Bs12Element) {
        let m = &self.model;
        if m.is_identity(&g) {
            return;
        }
        let mergeable = match x.0.last() {
            Some((tf, top)) => *tf == f || g.in_s_subgroup() || (x.0.len() == 1 && top.in_s_subgroup()),
            None => false,
        };
        if !mergeable {
            x.0.push((f, g));
            return;
        }
        let (tf, top) = x.0.pop().expect("nonempty");
        let nf = if g.in_s_subgroup() { tf } else { f };
        let mut carry = m.multiply(&top, &g);
        let mut nf = nf;
        // an s-power sinks into the syllable below it
        loop {
            if m.is_identity(&carry) {
                return;
            }
            if !carry.in_s_subgroup() || x.0.is_empty() {
                x.0.push((nf, carry));
                return;
            }
            let (bf, below) = x.0.pop().expect("nonempty");
            carry = m.multiply(&below, &carry);
            nf = bf;
        }
    }

    pub fn letter(&self, l: Letter) -> Option<(u8, Bs12Element)> {
        let e = l.sign() as i64;
        let g = l.gen();
        if g == self.a || g == self.d {
            Some((u8::from(g == self.d), Bs12Element { k: e, q: Dyadic::zero() }))
        } else if g == self.s {
            Some((0, Bs12Element::s_pow(e)))
        } else {
            None
        }
    }

    pub fn eval(&self, w: &Word) -> BElem {
        let mut x = self.identity();
        for &l in w.letters() {
            if let Some((f, g)) = self.letter(l) {
                self.push(&mut x, f, g);
            }
        }
        x
    }

    pub fn mul(&self, x: &BElem, y: &BElem) -> BElem {
        let mut out = x.clone();
        for (f, g) in &y.0 {
            self.push(&mut out, *f, g.clone());
        }
        out
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.eval(w).0.is_empty()
    }
}

pub fn b_is_identity(w: &Word) -> bool {
    BAmalgam::standard().is_identity(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group_b;

    fn w(s: &str) -> Word {
        group_b().parse_word(s).unwrap()
    }

    #[test]
    fn b_examples() {
        assert!(b_is_identity(&w("a s a^-1 d s^-1 d^-1")));
        for r in group_b().relators() {
            assert!(b_is_identity(r));
        }
        assert!(!b_is_identity(&w("a d a^-1 d^-1")));
        assert!(!b_is_identity(&w("a^-1 s a d^-1 s^-1 d")));
        // a^-1 s^2 a = s = d^-1 s^2 d
        assert!(b_is_identity(&w("a^-1 s^2 a d^-1 s^-2 d")));
    }

    #[test]
    fn syllables_alternate() {
        let b = BAmalgam::standard();
        let x = b.eval(&w("a s d s a^-1"));
        assert_eq!(x.0.len(), 3);
        let x = b.eval(&w("a s a^-1 d s^-1 d^-1 s"));
        assert_eq!(x.0, vec![(0, Bs12Element::s_pow(1))]);
    }
}
