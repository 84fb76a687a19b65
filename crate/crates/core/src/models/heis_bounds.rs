//! Lower bounds on disc and annular area over `⟨a, b, c | [a,c], [b,c], [a,b]c⁻¹⟩`.
//!
//! Projecting a diagram to the `(a, b)` lattice sends each `[a,b]c⁻¹` cell to a
//! unit square and each commutator cell to a unit segment. The squares are
//! forced by the winding numbers of the boundary; every `c`-edge of a square
//! sits at its lower-left corner, and `c`-corridors of commutator cells carry
//! boundary `c`-letters to those corners one unit per cell. The bound is the
//! total winding plus the cheapest transport of these charges.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use crate::word::Letter;

type Pt = (i64, i64);

/// Winding numbers of squares (keyed by lower-left corner) and `c`-charges of
/// a closed lattice walk.
#[derive(Default, Debug)]
struct Profile {
    squares: HashMap<Pt, i64>,
    charges: HashMap<Pt, i64>,
}

fn walk(w: &[Letter]) -> Option<Profile> {
    let mut p = (0i64, 0i64);
    let mut cols: HashMap<i64, Vec<(i64, i64)>> = HashMap::new();
    let mut out = Profile::default();
    for l in w {
        let s = l.sign() as i64;
        match l.gen() {
            0 => {
                let col = if s > 0 { p.0 } else { p.0 - 1 };
                cols.entry(col).or_default().push((p.1, s));
                p.0 += s;
            }
            1 => p.1 += s,
            _ => *out.charges.entry(p).or_default() += s,
        }
    }
    if p != (0, 0) {
        return None;
    }
    for (col, mut edges) in cols {
        edges.sort_unstable();
        let mut acc = 0;
        for (k, &(y, s)) in edges.iter().enumerate() {
            acc += s;
            let next = edges.get(k + 1).map_or(y, |e| e.0);
            if acc != 0 {
                for j in y..next {
                    *out.squares.entry((col, j)).or_default() += acc;
                }
            }
        }
    }
    out.squares.retain(|_, v| *v != 0);
    for (&q, &f) in &out.squares {
        *out.charges.entry(q).or_default() += f;
    }
    out.charges.retain(|_, v| *v != 0);
    Some(out)
}

/// Cheapest transport between positive and negative charges; `None` when the
/// total charge is nonzero.
fn transport(charges: &HashMap<Pt, i64>, dist: impl Fn(Pt, Pt) -> i64) -> Option<u64> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut keys: Vec<_> = charges.iter().collect();
    keys.sort();
    for (&p, &q) in keys {
        let list = if q > 0 { &mut pos } else { &mut neg };
        list.extend(std::iter::repeat_n(p, q.unsigned_abs() as usize));
    }
    if pos.len() != neg.len() {
        return None;
    }
    if pos.is_empty() {
        return Some(0);
    }
    let cost: Vec<Vec<i64>> = pos.iter().map(|&p| neg.iter().map(|&q| dist(p, q)).collect()).collect();
    Some(min_assignment(&cost) as u64)
}

/// Minimum-cost perfect matching of a square matrix (Hungarian method with
/// potentials).
fn min_assignment(cost: &[Vec<i64>]) -> i64 {
    let n = cost.len();
    let inf = i64::MAX / 4;
    let (mut u, mut v) = (vec![0i64; n + 1], vec![0i64; n + 1]);
    let mut way = vec![0usize; n + 1];
    let mut row_of = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| cost[row_of[j] - 1][j - 1]).sum()
}

fn l1(p: Pt, q: Pt) -> i64 {
    (p.0 - q.0).abs() + (p.1 - q.1).abs()
}

/// Lower bound on the area of a null-homotopic word; 0 when the word does not
/// close up or its charges do not balance.
pub fn heis_area_bound(w: &[Letter]) -> u64 {
    let Some(p) = walk(w) else { return 0 };
    let wind: u64 = p.squares.values().map(|v| v.unsigned_abs()).sum();
    transport(&p.charges, l1).map_or(0, |t| wind + t)
}

/// Lattice modulo a nonzero vector `t`, normalised so `t.0 > 0` or `t.0 == 0 < t.1`.
struct Cylinder {
    t: Pt,
}

impl Cylinder {
    fn new(t: Pt) -> Self {
        let t = if t.0 < 0 || (t.0 == 0 && t.1 < 0) { (-t.0, -t.1) } else { t };
        Self { t }
    }

    fn fold(&self, p: Pt) -> Pt {
        let k = if self.t.0 != 0 { p.0.div_euclid(self.t.0) } else { p.1.div_euclid(self.t.1) };
        (p.0 - k * self.t.0, p.1 - k * self.t.1)
    }

    fn dist(&self, p: Pt, q: Pt) -> i64 {
        let d = (p.0 - q.0, p.1 - q.1);
        let mut ks = Vec::with_capacity(4);
        if self.t.0 != 0 {
            ks.push(Integer::div_floor(&d.0, &self.t.0));
            ks.push(Integer::div_ceil(&d.0, &self.t.0));
        }
        if self.t.1 != 0 {
            ks.push(Integer::div_floor(&d.1, &self.t.1));
            ks.push(Integer::div_ceil(&d.1, &self.t.1));
        }
        ks.into_iter().map(|k| (d.0 - k * self.t.0).abs() + (d.1 - k * self.t.1).abs()).min().unwrap_or(0)
    }
}

fn conjugated(g: Pt, u: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let (a, b) = (Letter::new(0, 1), Letter::new(1, 1));
    let pw = |l: Letter, k: i64| std::iter::repeat_n(if k >= 0 { l } else { l.inverse() }, k.unsigned_abs() as usize);
    let mut w: Vec<Letter> = pw(a, g.0).chain(pw(b, g.1)).collect();
    w.extend_from_slice(u);
    w.extend(pw(b, -g.1).chain(pw(a, -g.0)));
    w.extend(v.iter().rev().map(|l| l.inverse()));
    w
}

/// Total charge of `g u g⁻¹ v⁻¹`, the central coordinate of that element.
fn total_charge(g: Pt, u: &[Letter], v: &[Letter]) -> Option<i64> {
    walk(&conjugated(g, u, v)).map(|p| p.charges.values().sum())
}

/// Lower bound on the annular area between cyclic words `u` and `v`.
/// Returns `u64::MAX` when they are not conjugate and 0 when both are central.
pub fn heis_ann_bound(u: &[Letter], v: &[Letter]) -> u64 {
    let exp = |w: &[Letter], g: usize| w.iter().filter(|l| l.gen() == g).map(|l| l.sign() as i64).sum::<i64>();
    let t = (exp(u, 0), exp(u, 1));
    if t != (exp(v, 0), exp(v, 1)) {
        return u64::MAX;
    }
    if t == (0, 0) {
        return 0;
    }
    // the central coordinate of g u g⁻¹ v⁻¹ is affine in g; conjugators are its zeros
    let (Some(c0), Some(cx), Some(cy)) =
        (total_charge((0, 0), u, v), total_charge((1, 0), u, v), total_charge((0, 1), u, v))
    else {
        return 0;
    };
    let (ax, ay) = (cx - c0, cy - c0);
    let e = ax.extended_gcd(&ay);
    if e.gcd == 0 {
        return if c0 == 0 { 0 } else { u64::MAX };
    }
    if c0 % e.gcd != 0 {
        return u64::MAX;
    }
    let g0 = (-c0 / e.gcd * e.x, -c0 / e.gcd * e.y);
    let cyl = Cylinder::new(t);
    let d = t.0.gcd(&t.1);
    let step = (t.0 / d, t.1 / d);
    let mut best = u64::MAX;
    for k in 0..d {
        let g = (g0.0 + k * step.0, g0.1 + k * step.1);
        let Some(p) = walk(&conjugated(g, u, v)) else { return 0 };
        let mut squares: BTreeMap<Pt, i64> = BTreeMap::new();
        for (&q, &f) in &p.squares {
            *squares.entry(cyl.fold(q)).or_default() += f;
        }
        let wind: u64 = squares.values().map(|v| v.unsigned_abs()).sum();
        let mut charges: HashMap<Pt, i64> = HashMap::new();
        for (&q, &c) in &p.charges {
            *charges.entry(cyl.fold(q)).or_default() += c;
        }
        charges.retain(|_, v| *v != 0);
        match transport(&charges, |x, y| cyl.dist(x, y)) {
            Some(tr) => best = best.min(wind + tr),
            None => return 0,
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::area::{annular_area, exact_area, AreaBudget, AreaOutcome, AreaSearch};
    use crate::groups::heisenberg;
    use crate::models::{GroupModel, Heis};
    use crate::word::{reduced_words, Word};

    #[test]
    fn assignment_matches_permutations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in 1..=6 {
            for _ in 0..20 {
                let c: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..20)).collect()).collect();
                let mut idx: Vec<usize> = (0..n).collect();
                let mut best = i64::MAX;
                permute(&mut idx, 0, &mut |p| best = best.min((0..n).map(|i| c[i][p[i]]).sum()));
                assert_eq!(min_assignment(&c), best);
            }
        }
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn relators() {
        let p = heisenberg();
        for r in p.relators() {
            assert_eq!(heis_area_bound(r.letters()), 1);
            assert_eq!(heis_area_bound(r.inverse().letters()), 1);
            assert_eq!(heis_area_bound(r.rotate(2).letters()), 1);
        }
        let w = p.parse_word("a^2 b^2 a^-2 b^-2 c^-4").unwrap();
        assert_eq!(heis_area_bound(w.letters()), 8);
    }

    #[test]
    fn disc_bound_below_exact_area() {
        let p = heisenberg();
        let h = Heis::new();
        let mut checked = 0;
        for n in 1..=7 {
            for w in reduced_words(p.alphabet(), n) {
                if !w.is_cyclically_reduced() || !h.is_identity(&h.eval_word(&w)) {
                    continue;
                }
                let lb = heis_area_bound(w.letters());
                if let AreaOutcome::Exact(a) = exact_area(&w, &p, AreaBudget::new(5_000, 64, 14)) {
                    assert!(lb <= a, "{w:?}: bound {lb} > area {a}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn annular_bound_below_annular_area() {
        let p = heisenberg();
        let h = Heis::new();
        let s = AreaSearch::new(&p);
        let words: Vec<Word> = (1..=3).flat_map(|n| reduced_words(p.alphabet(), n)).filter(|w| w.is_cyclically_reduced()).collect();
        let mut checked = 0;
        for u in words.iter().filter(|w| w.len() <= 2) {
            for v in &words {
                let (eu, ev) = (h.eval_word(u), h.eval_word(v));
                if eu.alpha != ev.alpha || eu.beta != ev.beta || (eu.alpha, eu.beta) == (0, 0) {
                    continue;
                }
                let lb = heis_ann_bound(u.letters(), v.letters());
                let conj = crate::conjugacy::heis_conjugator(u, v).is_ok();
                assert_eq!(lb == u64::MAX, !conj, "{u:?} {v:?}");
                if !conj {
                    continue;
                }
                if let AreaOutcome::Exact(a) = annular_area(u, v, &s, AreaBudget::new(5_000, 64, 12)).outcome {
                    assert!(lb <= a, "{u:?} {v:?}: bound {lb} > ann {a}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 50, "{checked}");
    }

    #[test]
    fn pruned_search_agrees_with_plain_search() {
        let p = heisenberg();
        let plain = AreaSearch::new(&p);
        let bound = |x: &[Letter], y: &[Letter]| heis_ann_bound(x, y);
        let pruned = AreaSearch::new(&p).with_pair_bound(&bound);
        for (u, v, k) in [("a", "a c", 2), ("a", "a c^-2", 3), ("a", "a c^2", 5), ("b", "b c", 1), ("a b", "a b c^-1", 1)] {
            let (u, v) = (p.parse_word(u).unwrap(), p.parse_word(v).unwrap());
            let budget = AreaBudget::new(200_000, 64, 16);
            assert_eq!(annular_area(&u, &v, &plain, budget).outcome, AreaOutcome::Exact(k));
            assert_eq!(annular_area(&u, &v, &pruned, budget).outcome, AreaOutcome::Exact(k));
        }
    }
}
