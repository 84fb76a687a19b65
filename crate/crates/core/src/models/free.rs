//! Free groups: reduced words are normal forms.

use super::GroupModel;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub struct FreeGroup {
    pres: Presentation,
}

impl FreeGroup {
    pub fn new(pres: Presentation) -> Self {
        assert!(pres.relators().is_empty(), "free group presentations have no relators");
        Self { pres }
    }
}

impl GroupModel for FreeGroup {
    type Element = Word;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> Word {
        Word::empty()
    }

    fn generator(&self, l: Letter) -> Word {
        Word::letter(l)
    }

    fn multiply(&self, x: &Word, y: &Word) -> Word {
        x.concat(y).free_reduce()
    }

    fn inverse(&self, x: &Word) -> Word {
        x.inverse()
    }

    fn element_to_word(&self, g: &Word) -> Word {
        g.clone()
    }

    fn canonical_key(&self, g: &Word) -> Vec<u8> {
        g.key_bytes()
    }
}
