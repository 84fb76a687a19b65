//! Alphabets, words over them, and the free-group reductions everything
//! else is built on.

use std::cmp::Ordering;
use std::fmt;

use crate::error::ParseError;

/// An ordered list of distinct generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self, ParseError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(ParseError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if !is_symbol(s) {
                return Err(ParseError::BadSymbol(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(ParseError::DuplicateGenerator(s.clone()));
            }
        }
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn symbol(&self, gen: usize) -> &str {
        &self.symbols[gen]
    }

    /// Positive letter for a named generator. Panics on unknown names; meant for
    /// built-in constructions where the name is known to exist.
    pub fn gen(&self, name: &str) -> Letter {
        Letter::pos(self.index_of(name).unwrap_or_else(|| panic!("unknown generator {name}")))
    }

    /// All `2n` letters in enumeration order: `x1, x1^-1, x2, x2^-1, ...`.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.len()).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect()
    }

    /// Parses whitespace-separated tokens `x`, `x^k`.
    pub fn parse(&self, text: &str) -> Result<Word, ParseError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| ParseError::BadExponent(token.to_string()))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            let gen = self
                .index_of(name)
                .ok_or_else(|| ParseError::UnknownSymbol(name.to_string()))?;
            let letter = if exp < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
            letters.extend(std::iter::repeat(letter).take(exp.unsigned_abs() as usize));
        }
        Ok(Word::from_letters(letters))
    }

    /// Renders a word with runs collapsed into powers, e.g. `a^2 b^-1 c`.
    pub fn format(&self, w: &Word) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        let ls = w.letters();
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            let exp = (j - i) as i64 * ls[i].sign() as i64;
            let name = self.symbol(ls[i].gen());
            out.push(if exp == 1 { name.to_string() } else { format!("{name}^{exp}") });
            i = j;
        }
        out.join(" ")
    }
}

fn is_symbol(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
}

/// A generator or its inverse, packed as `±(index + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter(gen as i32 + 1)
    }

    pub fn neg(gen: usize) -> Self {
        Letter(-(gen as i32) - 1)
    }

    pub fn new(gen: usize, sign: i8) -> Self {
        if sign < 0 {
            Self::neg(gen)
        } else {
            Self::pos(gen)
        }
    }

    pub fn gen(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    fn rank(self) -> u32 {
        2 * self.gen() as u32 + u32::from(self.0 < 0)
    }

    /// Compact byte used in search keys.
    pub fn code(self) -> u32 {
        self.rank()
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.gen())
        } else {
            write!(f, "x{}^-1", self.gen())
        }
    }
}

/// An immutable sequence of letters. The empty word is the identity.
///
/// Ordering is shortlex: shorter words first, then lexicographic by letter.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letter(l: Letter) -> Self {
        Self { letters: vec![l] }
    }

    /// `l^k` with `k` possibly negative.
    pub fn power(l: Letter, k: i64) -> Self {
        let l = if k < 0 { l.inverse() } else { l };
        Self { letters: vec![l; k.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self^k`, `k` possibly negative.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse())
    }

    /// `[self, other] = self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse()).concat(&other.inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != p[1].inverse())
    }

    /// Splits a freely reduced word as `prefix · core · prefix⁻¹` with `core`
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let w = &self.letters;
        let mut i = 0;
        let mut j = w.len();
        while j > i + 1 && w[i] == w[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        (Word::from_letters(w[i..j].to_vec()), Word::from_letters(w[..i].to_vec()))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && (self.len() < 2 || self.letters[0] != self.letters[self.len() - 1].inverse())
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// Least rotation in shortlex order.
    pub fn least_rotation(&self) -> Word {
        (0..self.len().max(1))
            .map(|k| self.rotate(k))
            .min()
            .unwrap_or_default()
    }

    /// Canonical representative of the class of `self` under free reduction,
    /// cyclic conjugation and inversion.
    pub fn cyclic_class_key(&self) -> Word {
        let (core, _) = self.free_reduce().cyclic_reduce();
        let a = core.least_rotation();
        let b = core.inverse().least_rotation();
        a.min(b)
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen() == gen)
            .map(|l| l.sign() as i64)
            .sum()
    }

    pub fn letter_count(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen() == gen).count()
    }

    /// Keeps letters whose generator satisfies `keep`.
    pub fn filter_gens(&self, keep: impl Fn(usize) -> bool) -> Word {
        Word { letters: self.letters.iter().copied().filter(|l| keep(l.gen())).collect() }
    }

    /// Applies a letter-to-word substitution.
    pub fn substitute(&self, image: impl Fn(Letter) -> Word) -> Word {
        let mut letters = Vec::new();
        for &l in &self.letters {
            letters.extend_from_slice(image(l).letters());
        }
        Word { letters }
    }

    /// Bytes usable as a hash key.
    pub fn key_bytes(&self) -> Vec<u8> {
        self.letters.iter().map(|l| l.code() as u8).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.letters).finish()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word { letters: iter.into_iter().collect() }
    }
}

/// All freely reduced words of exactly the given length, in shortlex order.
pub fn reduced_words(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let letters = alphabet.letters();
    let mut level = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(level.len() * letters.len());
        for w in &level {
            for &l in &letters {
                if w.letters.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(Word { letters });
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c", "d", "s"]).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let al = abc();
        let w = al.parse("a a^-1 b").unwrap();
        assert_eq!(w.free_reduce(), al.parse("b").unwrap());
        assert_eq!(Word::empty().free_reduce(), Word::empty());
        let w = al.parse("a b b^-1 a^-1 c").unwrap();
        assert_eq!(w.free_reduce(), al.parse("c").unwrap());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let al = abc();
        let (core, pre) = al.parse("a b a^-1").unwrap().cyclic_reduce();
        assert_eq!((core, pre), (al.parse("b").unwrap(), al.parse("a").unwrap()));
        let (core, pre) = al.parse("b c").unwrap().cyclic_reduce();
        assert_eq!((core, pre), (al.parse("b c").unwrap(), Word::empty()));
        let (core, pre) = al.parse("a^2 b a^-2").unwrap().cyclic_reduce();
        assert_eq!((core, pre), (al.parse("b").unwrap(), al.parse("a^2").unwrap()));
    }

    #[test]
    fn exponent_sums_and_counts() {
        let al = abc();
        let a = al.index_of("a").unwrap();
        let d = al.index_of("d").unwrap();
        let c = al.index_of("c").unwrap();
        assert_eq!(al.parse("a b a^-1").unwrap().exponent_sum(a), 0);
        assert_eq!(al.parse("a^2 d^-3").unwrap().exponent_sum(d), -3);
        let n = 2i64;
        let w = al.parse(&format!("a^{} d^{}", -n * n, n * n)).unwrap();
        assert_eq!(w.exponent_sum(a), -4);
        assert_eq!(al.parse("a b a^-1").unwrap().letter_count(a), 2);
        assert_eq!(al.parse("c^4").unwrap().letter_count(c), 4);
        assert_eq!(Word::empty().letter_count(al.index_of("s").unwrap()), 0);
    }

    #[test]
    fn parse_and_format() {
        let al = abc();
        let w = al.parse("a^3 b^-2 c").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(al.format(&w), "a^3 b^-2 c");
        assert!(matches!(al.parse("x"), Err(ParseError::UnknownSymbol(_))));
        assert!(matches!(al.parse("a^q"), Err(ParseError::BadExponent(_))));
        assert_eq!(al.parse("a^0").unwrap(), Word::empty());
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(ParseError::DuplicateGenerator(_))));
    }

    #[test]
    fn cyclic_class_key_identifies_rotations_and_inverses() {
        let al = abc();
        let w = al.parse("a b a^-1 b^-1 c^-1").unwrap();
        let key = w.cyclic_class_key();
        assert_eq!(w.rotate(2).cyclic_class_key(), key);
        assert_eq!(w.inverse().cyclic_class_key(), key);
        assert_eq!(al.parse("s").unwrap().conjugate(&w).cyclic_class_key(), key);
    }

    #[test]
    fn reduced_word_counts() {
        let al = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(reduced_words(&al, 0).len(), 1);
        assert_eq!(reduced_words(&al, 3).len(), 4 * 3 * 3);
    }
}
