//! BS(1,2) as the group of affine maps `x ↦ 2^k x + q` with dyadic `q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{push_i64, GroupModel};
use crate::groups::bs12;
use crate::presentation::{AreaLedger, LedgerBuilder, Presentation};
use crate::word::{Letter, Word};

/// `num / 2^exp`, reduced: `num` is odd whenever `exp > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    num: BigInt,
    exp: u64,
}

impl Dyadic {
    pub fn new(num: BigInt, exp: u64) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic { num: n.into(), exp: 0 }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp);
        self.num >>= tz as usize;
        self.exp -= tz;
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        let n = (&self.num << (e - self.exp) as usize) + (&other.num << (e - other.exp) as usize);
        Dyadic::new(n, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.num.is_zero() {
            return Dyadic::zero();
        }
        if k >= 0 {
            let k = k as u64;
            if k >= self.exp {
                Dyadic { num: &self.num << (k - self.exp) as usize, exp: 0 }
            } else {
                Dyadic { num: self.num.clone(), exp: self.exp - k }
            }
        } else {
            Dyadic { num: self.num.clone(), exp: self.exp + k.unsigned_abs() }
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bs12Element {
    pub k: i64,
    pub q: Dyadic,
}

impl Bs12Element {
    /// True iff the element lies in the cyclic subgroup generated by `s`.
    pub fn in_s_subgroup(&self) -> bool {
        self.k == 0 && self.q.is_integer()
    }

    /// The `s`-exponent when the element is a power of `s`.
    pub fn s_power(&self) -> Option<BigInt> {
        self.in_s_subgroup().then(|| self.q.num().clone())
    }

    pub fn s_pow(n: impl Into<BigInt>) -> Self {
        Bs12Element { k: 0, q: Dyadic::integer(n) }
    }
}

/// `a = x ↦ 2x`, `s = x ↦ x + 1`; words act by `eval(gh) = eval(g) ∘ eval(h)`.
#[derive(Clone, Debug)]
pub struct Bs12 {
    pres: Presentation,
    a: usize,
    s: usize,
}

impl Default for Bs12 {
    fn default() -> Self {
        Self::new()
    }
}

impl Bs12 {
    pub fn new() -> Self {
        Self::with_presentation(bs12(), 0, 1)
    }

    /// Uses the given generator indices for `a` and `s`; any other generator
    /// is rejected at evaluation time.
    pub fn with_presentation(pres: Presentation, a: usize, s: usize) -> Self {
        Self { pres, a, s }
    }

    /// Applies the map to an integer point; used by oracles.
    pub fn apply(g: &Bs12Element, x: &Dyadic) -> Dyadic {
        x.shl(g.k).add(&g.q)
    }
}

impl GroupModel for Bs12 {
    type Element = Bs12Element;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> Bs12Element {
        Bs12Element::default()
    }

    fn generator(&self, l: Letter) -> Bs12Element {
        let e = l.sign() as i64;
        if l.gen() == self.a {
            Bs12Element { k: e, q: Dyadic::zero() }
        } else if l.gen() == self.s {
            Bs12Element { k: 0, q: Dyadic::integer(e) }
        } else {
            panic!("letter {l:?} is not in BS(1,2)")
        }
    }

    fn multiply(&self, x: &Bs12Element, y: &Bs12Element) -> Bs12Element {
        Bs12Element { k: x.k + y.k, q: y.q.shl(x.k).add(&x.q) }
    }

    fn inverse(&self, x: &Bs12Element) -> Bs12Element {
        Bs12Element { k: -x.k, q: x.q.neg().shl(-x.k) }
    }

    /// `a^-e s^n a^(e+k)` for `q = n / 2^e`.
    fn element_to_word(&self, g: &Bs12Element) -> Word {
        let e = g.q.exp() as i64;
        let n = g.q.num().to_i64().expect("s-exponent fits in i64");
        let mut ls = Word::power(Letter::pos(self.a), -e).into_letters();
        ls.extend(Word::power(Letter::pos(self.s), n).into_letters());
        ls.extend(Word::power(Letter::pos(self.a), e + g.k).into_letters());
        Word::from_letters(ls).free_reduce()
    }

    fn canonical_key(&self, g: &Bs12Element) -> Vec<u8> {
        let mut out = Vec::new();
        push_i64(&mut out, g.k);
        push_i64(&mut out, g.q.exp() as i64);
        out.extend_from_slice(&g.q.num().to_signed_bytes_le());
        out
    }

    fn describe(&self, g: &Bs12Element) -> String {
        format!("k={}, q={}", g.k, g.q)
    }
}

pub fn bs12_eval(w: &Word) -> Bs12Element {
    Bs12::new().eval_word(w)
}

/// `a^n s a^-n s^(-2^n)`, the null-homotopic doubling word.
pub fn bs12_witness_word(n: u32) -> Word {
    let p = bs12();
    let a = p.alphabet().gen("a");
    let s = p.alphabet().gen("s");
    let mut ls = Word::power(a, n as i64).into_letters();
    ls.push(s);
    ls.extend(Word::power(a, -(n as i64)).into_letters());
    let word = Word::from_letters(ls);
    // s^(-2^n) is spelt letter by letter
    let tail: Vec<Letter> = std::iter::repeat(s.inverse()).take(1usize << n).collect();
    word.concat(&Word::from_letters(tail))
}

/// Ledger for [`bs12_witness_word`] with exactly `2^n - 1` steps. Every step
/// rewrites `a s` into `s s a`, doubling the `s`-run as the `a` moves right.
pub fn bs12_witness_ledger(n: u32) -> AreaLedger {
    let p = bs12();
    let a = p.alphabet().gen("a");
    let s = p.alphabet().gen("s");
    let start = bs12_witness_word(n);
    let mut lb = LedgerBuilder::new(&p, &start);
    let to = Word::from_letters(vec![s, s, a]);
    loop {
        let ls = lb.current().letters();
        let Some(i) = ls.windows(2).position(|x| x[0] == a && x[1] == s) else { break };
        lb.replace(i, 2, &to).expect("a s = s s a");
    }
    lb.finish()
}

/// Lower bound on the area of a null-homotopic word over a presentation
/// whose only relator is `a s a^-1 s^-2`. Levels are prefix `a`-exponents; a
/// cell based at level `l` carries `s`-weight `-2` at `l` and `+1` at `l+1`,
/// so the net number of cells per level is forced by the boundary.
/// `None` when the word is visibly not null-homotopic.
pub fn graded_area_bound(w: &[Letter], a: usize, s: usize) -> Option<u64> {
    let mut level = 0i64;
    let mut counts: std::collections::BTreeMap<i64, i64> = std::collections::BTreeMap::new();
    for l in w {
        if l.gen() == a {
            level += l.sign() as i64;
        } else if l.gen() == s {
            *counts.entry(level).or_default() += l.sign() as i64;
        } else {
            return None;
        }
    }
    if level != 0 {
        return None;
    }
    let (&lo, _) = counts.iter().next()?;
    let &hi = counts.keys().next_back()?;
    let mut x: i64 = 0;
    let mut total: u64 = 0;
    let mut l = lo;
    loop {
        let n = counts.get(&l).copied().unwrap_or(0);
        let num = x - n;
        if num % 2 != 0 {
            return None;
        }
        x = num / 2;
        total += x.unsigned_abs();
        if l >= hi && x == 0 {
            break;
        }
        l += 1;
    }
    Some(total)
}

/// `2^n - 1` as a big integer, the ledger length for the doubling word.
pub fn mersenne(n: u32) -> BigInt {
    (BigInt::one() << n as usize) - BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::verify_ledger;

    fn w(s: &str) -> Word {
        bs12().parse_word(s).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(bs12_eval(&w("a s a^-1 s^-2")), Bs12Element::default());
        assert_eq!(bs12_eval(&w("s a")), Bs12Element { k: 1, q: Dyadic::integer(1) });
        assert_eq!(bs12_eval(&w("a^5 s a^-5")), Bs12Element::s_pow(32));
    }

    #[test]
    fn dyadic_normalizes() {
        let d = Dyadic::new(BigInt::from(12), 3);
        assert_eq!((d.num().clone(), d.exp()), (BigInt::from(3), 1));
        assert!(Dyadic::new(BigInt::from(0), 5).is_integer());
        assert_eq!(Dyadic::integer(3).shl(-2).add(&Dyadic::new(BigInt::from(1), 2)), Dyadic::integer(1));
    }

    #[test]
    fn witness_ledgers() {
        let p = bs12();
        for n in 1..=6 {
            let l = bs12_witness_ledger(n);
            assert!(verify_ledger(&l, &p));
            assert!(l.end.is_empty());
            assert_eq!(l.len(), (1usize << n) - 1);
        }
    }

    #[test]
    fn roundtrip() {
        let m = Bs12::new();
        for s in ["a^-3 s a", "s^5 a^-1 s^-1 a^2", ""] {
            let g = m.eval_word(&w(s));
            assert_eq!(m.eval_word(&m.element_to_word(&g)), g);
            assert!(m.is_identity(&m.multiply(&g, &m.inverse(&g))));
        }
    }
}
