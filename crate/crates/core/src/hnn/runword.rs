//! Freely reduced words with big-integer run exponents.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RunWord {
    runs: Vec<(usize, BigInt)>,
}

impl RunWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letter(l: Letter) -> Self {
        Self { runs: vec![(l.gen(), BigInt::from(l.sign()))] }
    }

    pub fn power(gen: usize, e: BigInt) -> Self {
        let mut r = Self::new();
        r.push(gen, e);
        r
    }

    pub fn from_word(w: &Word) -> Self {
        let mut r = Self::new();
        for l in w.letters() {
            r.push(l.gen(), BigInt::from(l.sign()));
        }
        r
    }

    pub fn runs(&self) -> &[(usize, BigInt)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn push(&mut self, gen: usize, e: BigInt) {
        if e.is_zero() {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == gen {
                last.1 += e;
                if last.1.is_zero() {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((gen, e));
    }

    pub fn mul(&self, other: &RunWord) -> RunWord {
        let mut out = self.clone();
        for (g, e) in &other.runs {
            out.push(*g, e.clone());
        }
        out
    }

    pub fn inverse(&self) -> RunWord {
        RunWord { runs: self.runs.iter().rev().map(|(g, e)| (*g, -e)).collect() }
    }

    /// Applies `gen ↦ gen^k` for the listed generators, others fixed.
    pub fn scale(&self, f: impl Fn(usize, &BigInt) -> BigInt) -> RunWord {
        let mut out = RunWord::new();
        for (g, e) in &self.runs {
            out.push(*g, f(*g, e));
        }
        out
    }

    /// Total letter length.
    pub fn len(&self) -> BigInt {
        self.runs.iter().map(|(_, e)| e.abs()).sum()
    }

    /// Expands into letters; panics on huge exponents.
    pub fn to_word(&self) -> Word {
        let mut ls = Vec::new();
        for (g, e) in &self.runs {
            let k: i64 = e.try_into().expect("exponent fits in i64");
            ls.extend(Word::power(Letter::pos(*g), k).into_letters());
        }
        Word::from_letters(ls)
    }
}
