//! Central extensions of `Z^(m+2)` with normal form `a^x b^y c^z`.

use super::{powers, push_i64, GroupModel};
use crate::groups::central_ext;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralExtElement {
    pub x: Vec<i64>,
    pub y: [i64; 2],
    pub z: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct CentralExt {
    pres: Presentation,
    m: usize,
}

impl CentralExt {
    pub fn new(m: usize) -> Self {
        Self { pres: central_ext(m), m }
    }

    /// Central correction produced when `b^y` is moved right past `a^x`.
    pub fn cocycle(&self, y: [i64; 2], x: &[i64]) -> Vec<i64> {
        (0..self.m)
            .map(|j| if j == 0 { y[0] * x[0] } else { y[0] * x[j] - y[1] * x[j - 1] })
            .collect()
    }
}

impl GroupModel for CentralExt {
    type Element = CentralExtElement;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> CentralExtElement {
        CentralExtElement { x: vec![0; self.m], y: [0, 0], z: vec![0; self.m] }
    }

    fn generator(&self, l: Letter) -> CentralExtElement {
        let mut g = self.identity();
        let e = l.sign() as i64;
        let i = l.gen();
        if i < self.m {
            g.x[i] = e;
        } else if i < self.m + 2 {
            g.y[i - self.m] = e;
        } else {
            g.z[i - self.m - 2] = e;
        }
        g
    }

    fn multiply(&self, p: &CentralExtElement, q: &CentralExtElement) -> CentralExtElement {
        let b = self.cocycle(p.y, &q.x);
        CentralExtElement {
            x: p.x.iter().zip(&q.x).map(|(a, b)| a + b).collect(),
            y: [p.y[0] + q.y[0], p.y[1] + q.y[1]],
            z: (0..self.m).map(|j| p.z[j] + q.z[j] + b[j]).collect(),
        }
    }

    fn inverse(&self, p: &CentralExtElement) -> CentralExtElement {
        // (x,y,z)^-1 = (-x, -y, -z + B(y, x))
        let b = self.cocycle(p.y, &p.x);
        CentralExtElement {
            x: p.x.iter().map(|a| -a).collect(),
            y: [-p.y[0], -p.y[1]],
            z: (0..self.m).map(|j| -p.z[j] + b[j]).collect(),
        }
    }

    fn element_to_word(&self, g: &CentralExtElement) -> Word {
        let mut exps: Vec<(usize, i64)> = g.x.iter().copied().enumerate().collect();
        exps.push((self.m, g.y[0]));
        exps.push((self.m + 1, g.y[1]));
        exps.extend(g.z.iter().enumerate().map(|(j, &z)| (self.m + 2 + j, z)));
        powers(&self.pres, &exps)
    }

    fn canonical_key(&self, g: &CentralExtElement) -> Vec<u8> {
        let mut out = Vec::new();
        for &v in g.x.iter().chain(&g.y).chain(&g.z) {
            push_i64(&mut out, v);
        }
        out
    }
}

pub fn g6m_eval(w: &Word, m: usize) -> CentralExtElement {
    CentralExt::new(m).eval_word(w)
}
