//! G4 as an HNN extension of E with stable letter `b` over `K = ⟨a,c,d⟩`, the
//! pinch rule `b g b⁻¹ = ψ(g)` with `ψ(a) = c⁻¹a`, and the retractions.

use super::e::{e_is_identity_in, EHnn};
use super::{britton_reduce, BrittonWord, Hnn};
use crate::word::{Letter, Word};

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;
pub const S: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Retract {
    /// Kill `d` and `s`: onto the Heisenberg group on `a b c`.
    Heis,
    /// Kill `b` and `c`, send `d ↦ a`: onto BS(1,2) on `a s`.
    D1,
    /// Kill `s`: onto A.
    A,
    /// Kill `b` and `c`: onto B.
    B,
}

/// Image word, still over G4's alphabet.
pub fn retract(w: &Word, which: Retract) -> Word {
    let ls = w.letters().iter().filter_map(|&l| match which {
        Retract::Heis => (l.gen() != D && l.gen() != S).then_some(l),
        Retract::A => (l.gen() != S).then_some(l),
        Retract::B => (l.gen() != B && l.gen() != C).then_some(l),
        Retract::D1 => match l.gen() {
            B | C => None,
            D => Some(Letter::new(A, l.sign())),
            _ => Some(l),
        },
    });
    Word::from_letters(ls.collect()).free_reduce()
}

/// Maps a Heisenberg retract image (letters `a b c` of G4) to G1's alphabet.
pub fn to_heis_alphabet(w: &Word) -> Word {
    w.letters().iter().map(|&l| Letter::new(l.gen(), l.sign())).collect()
}

/// Maps a D1 retract image (letters `a s` of G4) to BS12's alphabet.
pub fn to_bs12_alphabet(w: &Word) -> Word {
    w.letters().iter().map(|&l| Letter::new(if l.gen() == S { 1 } else { 0 }, l.sign())).collect()
}

fn strip_s(g: &Word) -> Word {
    g.filter_gens(|x| x != S).free_reduce()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct G4Hnn;

impl G4Hnn {
    fn ehnn(&self) -> EHnn {
        EHnn::in_g4()
    }

    /// `g ∈ K` iff deleting its `s`-letters does not change it in E.
    pub fn in_k(&self, g: &Word) -> bool {
        let stripped = strip_s(g);
        e_is_identity_in(&self.ehnn(), &g.concat(&stripped.inverse()))
    }

    /// `ψ^ε` on an `s`-free word of K.
    pub fn psi(&self, eps: i8, g: &Word) -> Word {
        g.substitute(|l| {
            if l.gen() != A {
                return Word::letter(l);
            }
            // b a b⁻¹ = c⁻¹ a and b⁻¹ a b = c a
            let c = Word::letter(Letter::new(C, -eps));
            let a = Word::letter(Letter::pos(A));
            let img = c.concat(&a);
            if l.is_positive() {
                img
            } else {
                img.inverse()
            }
        })
        .free_reduce()
    }
}

impl Hnn for G4Hnn {
    type Base = Word;

    fn is_stable(&self, l: Letter) -> bool {
        l.gen() == B
    }

    fn base_identity(&self) -> Word {
        Word::empty()
    }

    fn base_letter(&self, l: Letter) -> Word {
        Word::letter(l)
    }

    fn base_mul(&self, x: &Word, y: &Word) -> Word {
        x.concat(y).free_reduce()
    }

    fn base_is_identity(&self, x: &Word) -> bool {
        e_is_identity_in(&self.ehnn(), x)
    }

    fn pinch(&self, t: Letter, g: &Word) -> Option<Word> {
        if !self.in_k(g) {
            return None;
        }
        Some(self.psi(t.sign(), &strip_s(g)))
    }
}

pub fn g4_reduce(w: &Word) -> BrittonWord<Word> {
    britton_reduce(&G4Hnn, w.letters().iter().copied())
}

/// Word problem in G4 through the E tower.
pub fn g4_is_identity(w: &Word) -> bool {
    super::hnn_is_identity(&G4Hnn, w.letters().iter().copied())
}

/// Sound but incomplete equality key: images in the Heisenberg retract and
/// the D1 retract, as model keys.
pub fn retract_key(w: &Word) -> Vec<u8> {
    use crate::models::{Bs12, GroupModel, Heis};
    let h = Heis::new();
    let bs = Bs12::new();
    let mut k = h.canonical_key(&h.eval_word(&to_heis_alphabet(&retract(w, Retract::Heis))));
    k.extend(bs.canonical_key(&bs.eval_word(&to_bs12_alphabet(&retract(w, Retract::D1)))));
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::g4;

    fn w(s: &str) -> Word {
        g4().parse_word(s).unwrap()
    }

    #[test]
    fn identity_examples() {
        assert!(g4_is_identity(&w("b d b^-1 d^-1")));
        assert!(g4_is_identity(&w("b a b^-1 a^-1 c")));
        assert!(!g4_is_identity(&w("b s b^-1 s^-1")));
        for r in g4().relators() {
            assert!(g4_is_identity(r));
        }
    }

    #[test]
    fn agrees_with_l_tower() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rels = g4().relators().to_vec();
        for _ in 0..300 {
            // random product of conjugated relators, then optionally perturbed
            let mut x = Word::empty();
            for _ in 0..rng.gen_range(1..4) {
                let r = &rels[rng.gen_range(0..rels.len())];
                let c: Word = (0..rng.gen_range(0..4))
                    .map(|_| Letter::new(rng.gen_range(0..5), if rng.gen_bool(0.5) { 1 } else { -1 }))
                    .collect();
                x = x.concat(&c.concat(r).concat(&c.inverse()));
            }
            if rng.gen_bool(0.5) {
                x = x.concat(&Word::letter(Letter::new(rng.gen_range(0..5), 1)));
            }
            let x = x.free_reduce();
            assert_eq!(g4_is_identity(&x), crate::hnn::l::g4_is_identity_via_l(&x), "{x:?}");
        }
    }

    #[test]
    fn retract_examples() {
        assert_eq!(retract(&w("b^-1 c s"), Retract::Heis), w("b^-1 c"));
        assert_eq!(retract(&w("a^-1 d"), Retract::D1), Word::empty());
        assert_eq!(retract(&w("s"), Retract::Heis), Word::empty());
        assert_eq!(retract(&w("b a s d"), Retract::B), w("a s d"));
        assert_eq!(retract(&w("b a s d"), Retract::A), w("b a d"));
    }

    #[test]
    fn psi_matches_relators() {
        let h = G4Hnn;
        assert_eq!(h.psi(1, &w("a")), w("c^-1 a"));
        assert_eq!(h.psi(-1, &w("a^-1 d")), w("a^-1 c^-1 d"));
        assert!(h.in_k(&w("a s a^-1 s^-2 d")));
        assert!(!h.in_k(&w("s")));
    }
}
