use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::models::GroupModel;
use crate::word::{Letter, Word};

/// Breadth-first enumeration of group elements by word length. Each element
/// carries its shortlex-least geodesic word.
pub struct ElementBall<'m, M: GroupModel> {
    model: &'m M,
    letters: Vec<Letter>,
    seen: HashSet<Vec<u8>>,
    frontier: Vec<(M::Element, Word)>,
    radius: usize,
}

impl<'m, M: GroupModel> ElementBall<'m, M> {
    pub fn new(model: &'m M) -> Self {
        let mut letters = model.presentation().alphabet().letters();
        letters.sort();
        let id = model.identity();
        let mut seen = HashSet::new();
        seen.insert(model.canonical_key(&id));
        Self { model, letters, seen, frontier: vec![(id, Word::empty())], radius: 0 }
    }

    /// Elements at distance exactly `radius()` from the identity, in
    /// shortlex order of their words.
    pub fn sphere(&self) -> &[(M::Element, Word)] {
        &self.frontier
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn size(&self) -> usize {
        self.seen.len()
    }

    /// Advances to the next sphere; returns false once it is empty.
    pub fn grow(&mut self) -> bool {
        let model = self.model;
        let letters = &self.letters;
        let children: Vec<Vec<(Vec<u8>, M::Element, Word)>> = self
            .frontier
            .par_iter()
            .map(|(g, w)| {
                letters
                    .iter()
                    .filter(|l| w.letters().last() != Some(&l.inverse()))
                    .map(|&l| {
                        let h = model.multiply(g, &model.generator(l));
                        (model.canonical_key(&h), h, w.concat(&Word::letter(l)))
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (k, h, w) in children.into_iter().flatten() {
            if self.seen.insert(k) {
                next.push((h, w));
            }
        }
        self.frontier = next;
        self.radius += 1;
        !self.frontier.is_empty()
    }
}

/// Distances from `u` in its conjugacy orbit: conjugating by one letter is one
/// step, so the depth of `x` is the least `|w|` with `w u w⁻¹ = x`. Each
/// conjugate keeps the shortlex-least such `w`.
pub struct ConjugacyOrbit<'m, M: GroupModel> {
    model: &'m M,
    letters: Vec<Letter>,
    seen: HashMap<Vec<u8>, usize>,
    frontier: Vec<(M::Element, Word)>,
    depth: usize,
}

impl<'m, M: GroupModel> ConjugacyOrbit<'m, M> {
    pub fn new(model: &'m M, u: &M::Element) -> Self {
        let mut letters = model.presentation().alphabet().letters();
        letters.sort();
        let mut seen = HashMap::new();
        seen.insert(model.canonical_key(u), 0);
        Self { model, letters, seen, frontier: vec![(u.clone(), Word::empty())], depth: 0 }
    }

    pub fn layer(&self) -> &[(M::Element, Word)] {
        &self.frontier
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Depth at which a conjugate with this key was first reached.
    pub fn distance(&self, key: &[u8]) -> Option<usize> {
        self.seen.get(key).copied()
    }

    pub fn grow(&mut self) -> bool {
        let model = self.model;
        let letters = &self.letters;
        let children: Vec<(Vec<u8>, M::Element, Word)> = self
            .frontier
            .par_iter()
            .flat_map_iter(|(x, w)| {
                letters.iter().map(move |&l| {
                    let g = model.generator(l);
                    let y = model.conjugate(&g, x);
                    let mut ls = vec![l];
                    ls.extend_from_slice(w.letters());
                    (model.canonical_key(&y), y, Word::from_letters(ls).free_reduce())
                })
            })
            .collect();
        let mut best: HashMap<Vec<u8>, (M::Element, Word)> = HashMap::new();
        for (k, y, w) in children {
            if self.seen.contains_key(&k) {
                continue;
            }
            match best.get_mut(&k) {
                Some(b) if b.1 <= w => {}
                Some(b) => b.1 = w,
                None => {
                    best.insert(k, (y, w));
                }
            }
        }
        self.depth += 1;
        let mut next: Vec<(Vec<u8>, (M::Element, Word))> = best.into_iter().collect();
        next.sort_by(|a, b| a.1 .1.cmp(&b.1 .1));
        for (k, _) in &next {
            self.seen.insert(k.clone(), self.depth);
        }
        self.frontier = next.into_iter().map(|(_, x)| x).collect();
        !self.frontier.is_empty()
    }
}

/// Shortest conjugator with `w u w⁻¹ = v`, shortlex-least among the shortest,
/// of length at most `radius`.
pub fn cl_bfs<M: GroupModel>(model: &M, u: &Word, v: &Word, radius: usize) -> Result<(usize, Word)> {
    let target = model.canonical_key(&model.eval_word(v));
    let mut orbit = ConjugacyOrbit::new(model, &model.eval_word(u));
    loop {
        let hit = orbit.layer().iter().find(|(x, _)| model.canonical_key(x) == target);
        if let Some((_, w)) = hit {
            return Ok((w.len(), w.clone()));
        }
        if orbit.depth() >= radius || !orbit.grow() {
            return Err(Error::NotFoundWithin(radius));
        }
    }
}

/// Reference implementation over the element ball; slow but direct.
pub fn cl_bfs_ball<M: GroupModel>(model: &M, u: &Word, v: &Word, radius: usize) -> Result<(usize, Word)> {
    let (eu, ev) = (model.eval_word(u), model.eval_word(v));
    let target = model.canonical_key(&ev);
    let mut ball = ElementBall::new(model);
    loop {
        let hit = ball
            .sphere()
            .par_iter()
            .position_first(|(g, _)| model.canonical_key(&model.conjugate(g, &eu)) == target);
        if let Some(i) = hit {
            let w = ball.sphere()[i].1.clone();
            return Ok((w.len(), w));
        }
        if ball.radius() >= radius || !ball.grow() {
            return Err(Error::NotFoundWithin(radius));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::heisenberg;
    use crate::models::{Bs12, Heis};

    #[test]
    fn cl_examples() {
        let h = Heis::new();
        let g = heisenberg();
        let w = |s: &str| g.parse_word(s).unwrap();
        assert_eq!(cl_bfs(&h, &w("b"), &w("b c"), 3).unwrap(), (1, w("a")));
        assert_eq!(cl_bfs(&h, &w("b"), &w("b c^4"), 6).unwrap(), (4, w("a^4")));
        assert_eq!(cl_bfs(&h, &w("a b"), &w("a b"), 0).unwrap(), (0, Word::empty()));
        assert!(matches!(cl_bfs(&h, &w("b"), &w("b c^4"), 3), Err(Error::NotFoundWithin(3))));
        assert!(matches!(cl_bfs(&h, &w("a"), &w("b"), 3), Err(Error::NotFoundWithin(3))));
    }

    #[test]
    fn orbit_search_matches_ball_search() {
        let h = Heis::new();
        let g = heisenberg();
        let words: Vec<Word> = (0..=3).flat_map(|n| crate::word::reduced_words(g.alphabet(), n)).collect();
        for u in words.iter().step_by(7) {
            for v in words.iter().step_by(5) {
                let a = cl_bfs(&h, u, v, 4).ok();
                let b = cl_bfs_ball(&h, u, v, 4).ok();
                assert_eq!(a, b, "{u:?} {v:?}");
            }
        }
        let bs = Bs12::new();
        let p = crate::groups::bs12();
        let words: Vec<Word> = (0..=3).flat_map(|n| crate::word::reduced_words(p.alphabet(), n)).collect();
        for u in &words {
            for v in words.iter().step_by(3) {
                assert_eq!(cl_bfs(&bs, u, v, 4).ok(), cl_bfs_ball(&bs, u, v, 4).ok(), "{u:?} {v:?}");
            }
        }
    }

    #[test]
    fn ball_sizes_match_word_enumeration() {
        // oracle: distinct elements among all words of length ≤ r
        let h = Heis::new();
        let g = heisenberg();
        let mut ball = ElementBall::new(&h);
        let mut elems = HashSet::new();
        for r in 0..=4 {
            for len in 0..=r {
                for x in crate::word::reduced_words(g.alphabet(), len) {
                    elems.insert(h.eval_word(&x));
                }
            }
            assert_eq!(ball.size(), elems.len());
            ball.grow();
        }
        let bs = Bs12::new();
        let mut ball = ElementBall::new(&bs);
        ball.grow();
        assert_eq!(ball.size(), 5);
    }

    #[test]
    fn sphere_words_are_shortlex_least() {
        let h = Heis::new();
        let g = heisenberg();
        let mut best = std::collections::HashMap::new();
        for len in 0..=3 {
            for x in crate::word::reduced_words(g.alphabet(), len) {
                best.entry(h.eval_word(&x)).and_modify(|b: &mut Word| *b = b.clone().min(x.clone())).or_insert(x);
            }
        }
        let mut ball = ElementBall::new(&h);
        for _ in 0..=3 {
            for (e, w) in ball.sphere() {
                assert_eq!(&best[e], w);
            }
            ball.grow();
        }
    }
}
