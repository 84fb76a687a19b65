//! Direct and free products of two models over disjoint alphabets. The
//! combined alphabet lists the left factor's generators first.

use super::GroupModel;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

fn shift(w: &Word, by: usize) -> Word {
    w.letters().iter().map(|l| Letter::new(l.gen() + by, l.sign())).collect()
}

fn unshift(l: Letter, by: usize) -> Letter {
    Letter::new(l.gen() - by, l.sign())
}

#[derive(Clone, Debug)]
pub struct DirectProduct<L, R> {
    pres: Presentation,
    pub left: L,
    pub right: R,
    split: usize,
}

impl<L: GroupModel, R: GroupModel> DirectProduct<L, R> {
    pub fn new(pres: Presentation, left: L, right: R) -> Self {
        let split = left.presentation().alphabet().len();
        assert_eq!(split + right.presentation().alphabet().len(), pres.alphabet().len());
        Self { pres, left, right, split }
    }

    pub fn split(&self) -> usize {
        self.split
    }

    /// The two retractions: letters of the other factor are deleted.
    pub fn project(&self, w: &Word) -> (Word, Word) {
        let l = w.filter_gens(|g| g < self.split);
        let r: Word = w
            .letters()
            .iter()
            .filter(|l| l.gen() >= self.split)
            .map(|&l| unshift(l, self.split))
            .collect();
        (l, r)
    }

    pub fn embed_right(&self, w: &Word) -> Word {
        shift(w, self.split)
    }
}

impl<L: GroupModel, R: GroupModel> GroupModel for DirectProduct<L, R> {
    type Element = (L::Element, R::Element);

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> Self::Element {
        (self.left.identity(), self.right.identity())
    }

    fn generator(&self, l: Letter) -> Self::Element {
        if l.gen() < self.split {
            (self.left.generator(l), self.right.identity())
        } else {
            (self.left.identity(), self.right.generator(unshift(l, self.split)))
        }
    }

    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        (self.left.multiply(&x.0, &y.0), self.right.multiply(&x.1, &y.1))
    }

    fn inverse(&self, x: &Self::Element) -> Self::Element {
        (self.left.inverse(&x.0), self.right.inverse(&x.1))
    }

    fn element_to_word(&self, g: &Self::Element) -> Word {
        self.left.element_to_word(&g.0).concat(&shift(&self.right.element_to_word(&g.1), self.split))
    }

    fn canonical_key(&self, g: &Self::Element) -> Vec<u8> {
        let mut k = self.left.canonical_key(&g.0);
        let kl = k.len() as u32;
        k.extend(self.right.canonical_key(&g.1));
        k.extend_from_slice(&kl.to_le_bytes());
        k
    }

    fn describe(&self, g: &Self::Element) -> String {
        format!("({}) x ({})", self.left.describe(&g.0), self.right.describe(&g.1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Syllable<A, B> {
    Left(A),
    Right(B),
}

#[derive(Clone, Debug)]
pub struct FreeProduct<L, R> {
    pres: Presentation,
    pub left: L,
    pub right: R,
    split: usize,
}

impl<L: GroupModel, R: GroupModel> FreeProduct<L, R> {
    pub fn new(pres: Presentation, left: L, right: R) -> Self {
        let split = left.presentation().alphabet().len();
        assert_eq!(split + right.presentation().alphabet().len(), pres.alphabet().len());
        Self { pres, left, right, split }
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn is_left(&self, l: Letter) -> bool {
        l.gen() < self.split
    }

    /// Splits a word into maximal single-factor subwords, in factor-local
    /// letters.
    pub fn syllable_words(&self, w: &Word) -> Vec<Syllable<Word, Word>> {
        let mut out: Vec<Syllable<Word, Word>> = Vec::new();
        for &l in w.letters() {
            let left = self.is_left(l);
            match (out.last_mut(), left) {
                (Some(Syllable::Left(x)), true) => *x = x.concat(&Word::letter(l)),
                (Some(Syllable::Right(x)), false) => *x = x.concat(&Word::letter(unshift(l, self.split))),
                (_, true) => out.push(Syllable::Left(Word::letter(l))),
                (_, false) => out.push(Syllable::Right(Word::letter(unshift(l, self.split)))),
            }
        }
        out
    }

    pub fn syllable_to_word(&self, s: &Syllable<L::Element, R::Element>) -> Word {
        match s {
            Syllable::Left(x) => self.left.element_to_word(x),
            Syllable::Right(y) => shift(&self.right.element_to_word(y), self.split),
        }
    }

    pub fn embed_left(&self, w: &Word) -> Word {
        w.clone()
    }

    pub fn embed_right(&self, w: &Word) -> Word {
        shift(w, self.split)
    }

    fn push(&self, out: &mut Vec<Syllable<L::Element, R::Element>>, s: Syllable<L::Element, R::Element>) {
        let merged = match (out.last(), &s) {
            (Some(Syllable::Left(x)), Syllable::Left(y)) => Some(Syllable::Left(self.left.multiply(x, y))),
            (Some(Syllable::Right(x)), Syllable::Right(y)) => Some(Syllable::Right(self.right.multiply(x, y))),
            _ => None,
        };
        let next = match merged {
            Some(m) => {
                out.pop();
                m
            }
            None => s,
        };
        let trivial = match &next {
            Syllable::Left(x) => self.left.is_identity(x),
            Syllable::Right(y) => self.right.is_identity(y),
        };
        if !trivial {
            out.push(next);
        }
    }
}

impl<L: GroupModel, R: GroupModel> GroupModel for FreeProduct<L, R> {
    type Element = Vec<Syllable<L::Element, R::Element>>;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> Self::Element {
        Vec::new()
    }

    fn generator(&self, l: Letter) -> Self::Element {
        if self.is_left(l) {
            vec![Syllable::Left(self.left.generator(l))]
        } else {
            vec![Syllable::Right(self.right.generator(unshift(l, self.split)))]
        }
    }

    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        let mut out = x.clone();
        for s in y {
            self.push(&mut out, s.clone());
        }
        out
    }

    fn inverse(&self, x: &Self::Element) -> Self::Element {
        x.iter()
            .rev()
            .map(|s| match s {
                Syllable::Left(a) => Syllable::Left(self.left.inverse(a)),
                Syllable::Right(b) => Syllable::Right(self.right.inverse(b)),
            })
            .collect()
    }

    fn eval_word(&self, w: &Word) -> Self::Element {
        let mut out = Vec::new();
        for s in self.syllable_words(w) {
            let e = match s {
                Syllable::Left(x) => Syllable::Left(self.left.eval_word(&x)),
                Syllable::Right(y) => Syllable::Right(self.right.eval_word(&y)),
            };
            self.push(&mut out, e);
        }
        out
    }

    fn element_to_word(&self, g: &Self::Element) -> Word {
        g.iter().fold(Word::empty(), |acc, s| acc.concat(&self.syllable_to_word(s)))
    }

    fn canonical_key(&self, g: &Self::Element) -> Vec<u8> {
        let mut out = Vec::new();
        for s in g {
            let (tag, k) = match s {
                Syllable::Left(x) => (0u8, self.left.canonical_key(x)),
                Syllable::Right(y) => (1u8, self.right.canonical_key(y)),
            };
            out.push(tag);
            out.extend_from_slice(&(k.len() as u32).to_le_bytes());
            out.extend(k);
        }
        out
    }

    fn describe(&self, g: &Self::Element) -> String {
        let parts: Vec<String> = g
            .iter()
            .map(|s| match s {
                Syllable::Left(x) => format!("L[{}]", self.left.describe(x)),
                Syllable::Right(y) => format!("R[{}]", self.right.describe(y)),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}
