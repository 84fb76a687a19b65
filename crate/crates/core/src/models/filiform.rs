//! The filiform groups `Z^d ⋊ Z`, `t` acting by the unipotent map
//! `e_i ↦ e_i + e_(i-1)`.

use super::{powers, push_i64, GroupModel};
use crate::groups::filiform;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiliformElement {
    pub v: Vec<i64>,
    pub m: i64,
}

#[derive(Clone, Debug)]
pub struct Filiform {
    pres: Presentation,
    d: usize,
}

impl Filiform {
    pub fn new(d: usize) -> Self {
        Self { pres: filiform(d), d }
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    /// `φ^m v` via the binomial expansion of `(1 + N)^m`, valid for negative `m`.
    pub fn phi_pow(&self, m: i64, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.d];
        // binom(m, k) for k < d, generalised to negative m
        let mut coef: i128 = 1;
        for k in 0..self.d {
            if k > 0 {
                coef = coef * (m as i128 - (k as i128 - 1)) / k as i128;
            }
            if coef == 0 {
                break;
            }
            for i in 0..self.d - k {
                out[i] += (coef * v[i + k] as i128) as i64;
            }
        }
        out
    }
}

impl GroupModel for Filiform {
    type Element = FiliformElement;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> FiliformElement {
        FiliformElement { v: vec![0; self.d], m: 0 }
    }

    fn generator(&self, l: Letter) -> FiliformElement {
        let mut g = self.identity();
        if l.gen() == self.d {
            g.m = l.sign() as i64;
        } else {
            g.v[l.gen()] = l.sign() as i64;
        }
        g
    }

    fn multiply(&self, x: &FiliformElement, y: &FiliformElement) -> FiliformElement {
        let w = self.phi_pow(x.m, &y.v);
        FiliformElement { v: x.v.iter().zip(w).map(|(a, b)| a + b).collect(), m: x.m + y.m }
    }

    fn inverse(&self, x: &FiliformElement) -> FiliformElement {
        let w = self.phi_pow(-x.m, &x.v);
        FiliformElement { v: w.into_iter().map(|a| -a).collect(), m: -x.m }
    }

    fn element_to_word(&self, g: &FiliformElement) -> Word {
        let mut exps: Vec<(usize, i64)> = g.v.iter().copied().enumerate().collect();
        exps.push((self.d, g.m));
        powers(&self.pres, &exps)
    }

    fn canonical_key(&self, g: &FiliformElement) -> Vec<u8> {
        let mut out = Vec::new();
        for &x in &g.v {
            push_i64(&mut out, x);
        }
        push_i64(&mut out, g.m);
        out
    }
}

pub fn filiform_eval(w: &Word, d: usize) -> FiliformElement {
    Filiform::new(d).eval_word(w)
}
