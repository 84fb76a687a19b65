//! Stallings folding for finitely generated subgroups of free groups.

use std::collections::HashMap;

use crate::word::{Letter, Word};

/// A folded labelled graph; vertex 0 is the base point.
#[derive(Clone, Debug)]
pub struct SubgroupGraph {
    // out[v][g] = target of the positive g-edge leaving v
    out: Vec<HashMap<usize, usize>>,
    inc: Vec<HashMap<usize, usize>>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
}

/// Builds the folded graph of the subgroup generated by `gens`.
pub fn fold(gens: &[Word]) -> SubgroupGraph {
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut n = 1;
    for g in gens {
        let g = g.free_reduce();
        if g.is_empty() {
            continue;
        }
        let mut prev = 0;
        let len = g.len();
        for (i, l) in g.letters().iter().enumerate() {
            let next = if i + 1 == len {
                0
            } else {
                n += 1;
                n - 1
            };
            if l.is_positive() {
                edges.push((prev, l.gen(), next));
            } else {
                edges.push((next, l.gen(), prev));
            }
            prev = next;
        }
    }
    let mut dsu = Dsu((0..n).collect());
    loop {
        let mut changed = false;
        let mut out: HashMap<(usize, usize), usize> = HashMap::new();
        let mut inc: HashMap<(usize, usize), usize> = HashMap::new();
        for &(s, g, t) in &edges {
            let (s, t) = (dsu.find(s), dsu.find(t));
            if let Some(&t2) = out.get(&(s, g)) {
                let t2 = dsu.find(t2);
                if t2 != t {
                    dsu.0[t.max(t2)] = t.min(t2);
                    changed = true;
                }
            } else {
                out.insert((s, g), t);
            }
            let t = dsu.find(t);
            if let Some(&s2) = inc.get(&(t, g)) {
                let s2 = dsu.find(s2);
                let s = dsu.find(s);
                if s2 != s {
                    dsu.0[s.max(s2)] = s.min(s2);
                    changed = true;
                }
            } else {
                inc.insert((t, g), s);
            }
        }
        if !changed {
            break;
        }
    }
    // compact vertex ids, base stays 0
    let mut ids: HashMap<usize, usize> = HashMap::new();
    ids.insert(dsu.find(0), 0);
    for v in 0..n {
        let r = dsu.find(v);
        let k = ids.len();
        ids.entry(r).or_insert(k);
    }
    let m = ids.len();
    let mut g = SubgroupGraph { out: vec![HashMap::new(); m], inc: vec![HashMap::new(); m] };
    for &(s, l, t) in &edges {
        let (s, t) = (ids[&dsu.find(s)], ids[&dsu.find(t)]);
        g.out[s].insert(l, t);
        g.inc[t].insert(l, s);
    }
    g
}

impl SubgroupGraph {
    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    fn step(&self, v: usize, l: Letter) -> Option<usize> {
        if l.is_positive() {
            self.out[v].get(&l.gen()).copied()
        } else {
            self.inc[v].get(&l.gen()).copied()
        }
    }

    /// True iff the reduced form of `w` labels a loop at the base point.
    pub fn contains(&self, w: &Word) -> bool {
        let w = w.free_reduce();
        let mut v = 0;
        for &l in w.letters() {
            match self.step(v, l) {
                Some(u) => v = u,
                None => return false,
            }
        }
        v == 0
    }

    /// True iff every vertex has an in- and out-edge for each of `gens`
    /// generators, i.e. the subgroup has finite index.
    pub fn is_covering(&self, gens: usize) -> bool {
        self.out.iter().all(|m| m.len() == gens) && self.inc.iter().all(|m| m.len() == gens)
    }
}

/// Fast check for `⟨c, s²⟩ ≤ F(c, s)`: every maximal `s`-run is even.
pub fn even_s_runs(w: &Word, s: usize) -> bool {
    let w = w.free_reduce();
    let mut run = 0i64;
    for l in w.letters() {
        if l.gen() == s {
            run += l.sign() as i64;
        } else {
            if run % 2 != 0 {
                return false;
            }
            run = 0;
        }
    }
    run % 2 == 0
}
