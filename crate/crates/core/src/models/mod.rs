//! Faithful normal-form models of the built-in groups.

use std::fmt::Debug;
use std::hash::Hash;

use crate::presentation::Presentation;
use crate::word::{Letter, Word};

pub mod bs12;
pub mod filiform;
pub mod free;
pub mod g6m;
pub mod heis;
pub mod heis_bounds;
pub mod product;

pub use bs12::{Bs12, Bs12Element, Dyadic};
pub use filiform::{Filiform, FiliformElement};
pub use free::FreeGroup;
pub use g6m::{CentralExt, CentralExtElement};
pub use heis::{Heis, HeisElement};
pub use product::{DirectProduct, FreeProduct, Syllable};

/// A group with computable normal forms. `eval_word` is a monoid homomorphism
/// and `canonical_key` separates elements.
pub trait GroupModel: Send + Sync {
    type Element: Clone + Eq + Hash + Debug + Send + Sync;

    fn presentation(&self) -> &Presentation;
    fn identity(&self) -> Self::Element;
    fn generator(&self, l: Letter) -> Self::Element;
    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn inverse(&self, x: &Self::Element) -> Self::Element;
    fn element_to_word(&self, g: &Self::Element) -> Word;
    fn canonical_key(&self, g: &Self::Element) -> Vec<u8>;

    fn eval_word(&self, w: &Word) -> Self::Element {
        w.letters()
            .iter()
            .fold(self.identity(), |acc, &l| self.multiply(&acc, &self.generator(l)))
    }

    fn is_identity(&self, g: &Self::Element) -> bool {
        *g == self.identity()
    }

    /// `w u w⁻¹` in the model.
    fn conjugate(&self, w: &Self::Element, u: &Self::Element) -> Self::Element {
        self.multiply(&self.multiply(w, u), &self.inverse(w))
    }

    fn describe(&self, g: &Self::Element) -> String {
        format!("{g:?}")
    }
}

pub(crate) fn push_i64(out: &mut Vec<u8>, x: i64) {
    out.extend_from_slice(&x.to_le_bytes());
}

pub(crate) fn powers(p: &Presentation, exps: &[(usize, i64)]) -> Word {
    let _ = p;
    let mut letters = Vec::new();
    for &(g, e) in exps {
        letters.extend(Word::power(Letter::pos(g), e).into_letters());
    }
    Word::from_letters(letters).free_reduce()
}
