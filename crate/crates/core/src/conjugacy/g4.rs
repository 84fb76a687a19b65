use rayon::prelude::*;

use super::{conjugation_word, ConjugacyCertificate};
use crate::error::{Error, Result};
use crate::groups::g4;
use crate::hnn::g4::{g4_is_identity, A, B, C, D, S};
use crate::models::{Bs12, Bs12Element, GroupModel, Heis, HeisElement};
use crate::word::{Letter, Word};

/// Bounded conjugator search in G4.
#[derive(Clone, Debug)]
pub struct G4Search {
    pub max_len: usize,
    /// Generators allowed in the conjugator; all five when `None`.
    pub gens: Option<Vec<usize>>,
}

impl G4Search {
    pub fn new(max_len: usize) -> Self {
        Self { max_len, gens: None }
    }

    pub fn only(mut self, gens: &[usize]) -> Self {
        self.gens = Some(gens.to_vec());
        self
    }
}

struct Retracts {
    h: Heis,
    bs: Bs12,
}

impl Retracts {
    fn heis_letter(&self, l: Letter) -> HeisElement {
        match l.gen() {
            A | B | C => self.h.generator(l),
            _ => self.h.identity(),
        }
    }

    fn d1_letter(&self, l: Letter) -> Bs12Element {
        match l.gen() {
            A | D => self.bs.generator(Letter::new(0, l.sign())),
            S => self.bs.generator(Letter::new(1, l.sign())),
            _ => self.bs.identity(),
        }
    }

    fn heis(&self, w: &Word) -> HeisElement {
        w.letters().iter().fold(self.h.identity(), |acc, &l| self.h.multiply(&acc, &self.heis_letter(l)))
    }

    fn d1(&self, w: &Word) -> Bs12Element {
        w.letters().iter().fold(self.bs.identity(), |acc, &l| self.bs.multiply(&acc, &self.d1_letter(l)))
    }
}

struct Target {
    hu: HeisElement,
    hv: HeisElement,
    bu: Bs12Element,
    bv: Bs12Element,
    u: Word,
    v: Word,
}

/// Shortest (then shortlex-least) conjugator of length ≤ `max_len`. Candidates
/// must conjugate in the Heisenberg and D1 retracts before the exact G4 check.
pub fn g4_conjugator_search(u: &Word, v: &Word, opts: &G4Search) -> Result<ConjugacyCertificate> {
    let r = Retracts { h: Heis::new(), bs: Bs12::new() };
    let t = Target { hu: r.heis(u), hv: r.heis(v), bu: r.d1(u), bv: r.d1(v), u: u.clone(), v: v.clone() };
    let gens = opts.gens.clone().unwrap_or_else(|| (0..5).collect());
    let mut letters: Vec<Letter> = gens.iter().flat_map(|&g| [Letter::pos(g), Letter::neg(g)]).collect();
    letters.sort();
    for len in 0..=opts.max_len {
        if let Some(w) = search_len(&r, &t, &letters, len) {
            let p = g4();
            return ConjugacyCertificate::new(u.clone(), v.clone(), w, None, &p, &g4_is_identity);
        }
    }
    Err(Error::NotFoundWithin(opts.max_len))
}

fn search_len(r: &Retracts, t: &Target, letters: &[Letter], len: usize) -> Option<Word> {
    let start = (r.h.identity(), r.bs.identity());
    if len == 0 {
        return accept(r, t, &[], &start.0, &start.1).then(Word::empty);
    }
    let found: Vec<Option<Word>> = letters
        .par_iter()
        .map(|&l| {
            let mut stack = vec![l];
            let h = r.h.multiply(&start.0, &r.heis_letter(l));
            let b = r.bs.multiply(&start.1, &r.d1_letter(l));
            dfs(r, t, letters, len, &mut stack, h, b)
        })
        .collect();
    found.into_iter().flatten().next()
}

fn dfs(
    r: &Retracts,
    t: &Target,
    letters: &[Letter],
    len: usize,
    stack: &mut Vec<Letter>,
    h: HeisElement,
    b: Bs12Element,
) -> Option<Word> {
    if stack.len() == len {
        return accept(r, t, stack, &h, &b).then(|| Word::from_letters(stack.clone()));
    }
    for &l in letters {
        if stack.last() == Some(&l.inverse()) {
            continue;
        }
        let h2 = r.h.multiply(&h, &r.heis_letter(l));
        let b2 = r.bs.multiply(&b, &r.d1_letter(l));
        stack.push(l);
        let hit = dfs(r, t, letters, len, stack, h2, b2);
        stack.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

fn accept(r: &Retracts, t: &Target, w: &[Letter], h: &HeisElement, b: &Bs12Element) -> bool {
    r.h.conjugate(h, &t.hu) == t.hv
        && r.bs.conjugate(b, &t.bu) == t.bv
        && g4_is_identity(&conjugation_word(&t.u, &t.v, &Word::from_letters(w.to_vec())))
}
