//! Finite presentations, single relator applications and replayable area
//! ledgers.

use crate::error::{Error, ParseError, Result};
use crate::word::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are freely and cyclically reduced on the way in; empty ones are
    /// rejected.
    pub fn new(name: impl Into<String>, alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        let mut out = Vec::with_capacity(relators.len());
        for r in relators {
            let (core, _) = r.free_reduce().cyclic_reduce();
            if core.is_empty() {
                return Err(Error::Unsupported("relator reduces to the empty word".into()));
            }
            out.push(core);
        }
        Ok(Self { name: name.into(), alphabet, relators: out })
    }

    /// Builds from relator literals; panics on malformed input.
    pub fn from_strs(name: &str, gens: &[&str], rels: &[&str]) -> Self {
        let alphabet = Alphabet::new(gens.iter().copied()).expect("valid alphabet");
        let relators = rels.iter().map(|r| alphabet.parse(r).expect("valid relator")).collect();
        Self::new(name, alphabet, relators).expect("valid presentation")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Length of the longest relator.
    pub fn max_relator_len(&self) -> usize {
        self.relators.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        self.alphabet.parse(text)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    /// The rotated, signed relator a step refers to.
    pub fn oriented_relator(&self, relator: usize, sign: i8, rotation: usize) -> Option<Word> {
        let r = self.relators.get(relator)?;
        let r = if sign < 0 { r.inverse() } else { r.clone() };
        Some(r.rotate(rotation))
    }

    /// Finds a step that rewrites the subword `from` into `to` in one relator
    /// application, i.e. some rotation of some relator equals `from · to⁻¹`
    /// letter for letter.
    pub fn find_step(&self, from: &Word, to: &Word) -> Option<(usize, i8, usize)> {
        let target = from.concat(&to.inverse());
        for (i, r) in self.relators.iter().enumerate() {
            if r.len() != target.len() {
                continue;
            }
            for sign in [1i8, -1] {
                for rot in 0..r.len() {
                    if self.oriented_relator(i, sign, rot).as_ref() == Some(&target) {
                        return Some((i, sign, rot));
                    }
                }
            }
        }
        None
    }

    /// Parses the line-oriented presentation format. Returns warnings for
    /// relators that had to be cyclically reduced.
    pub fn parse_text(name: &str, text: &str) -> Result<(Self, Vec<String>), ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        let mut warnings = Vec::new();
        let mut pname = name.to_string();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| ParseError::Line {
                line: line_no,
                msg: format!("expected `key: value`, got `{line}`"),
            })?;
            let rest = rest.trim();
            match key.trim() {
                "name" => pname = rest.to_string(),
                "generators" => {
                    if alphabet.is_some() {
                        return Err(ParseError::Line { line: line_no, msg: "generators declared twice".into() });
                    }
                    alphabet = Some(Alphabet::new(rest.split_whitespace()).map_err(|e| match e {
                        ParseError::DuplicateGenerator(_) => e,
                        other => ParseError::Line { line: line_no, msg: other.to_string() },
                    })?);
                }
                "relator" => {
                    let al = alphabet.as_ref().ok_or_else(|| ParseError::Line {
                        line: line_no,
                        msg: "relator before generators".into(),
                    })?;
                    if rest.is_empty() {
                        return Err(ParseError::Line { line: line_no, msg: "empty relator".into() });
                    }
                    let w = al.parse(rest).map_err(|e| match e {
                        ParseError::UnknownSymbol(symbol) => {
                            ParseError::UnknownSymbolInRelator { line: line_no, symbol }
                        }
                        other => ParseError::Line { line: line_no, msg: other.to_string() },
                    })?;
                    let (core, _) = w.free_reduce().cyclic_reduce();
                    if core.is_empty() {
                        return Err(ParseError::Line { line: line_no, msg: "relator is freely trivial".into() });
                    }
                    if core != w {
                        warnings.push(format!(
                            "line {line_no}: relator `{rest}` reduced to `{}`",
                            al.format(&core)
                        ));
                    }
                    relators.push(core);
                }
                other => {
                    return Err(ParseError::Line { line: line_no, msg: format!("unknown key `{other}`") })
                }
            }
        }
        let alphabet = alphabet.ok_or(ParseError::Line { line: 0, msg: "no generators line".into() })?;
        Ok((Presentation { name: pname, alphabet, relators }, warnings))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("name: {}\ngenerators: {}\n", self.name, self.alphabet.symbols().join(" "));
        for r in &self.relators {
            out.push_str(&format!("relator: {}\n", self.alphabet.format(r)));
        }
        out
    }
}

/// One relator application: at `position`, the prefix of length `split` of the
/// oriented relator is replaced by the inverse of its remaining suffix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DerivationStep {
    pub position: usize,
    pub relator: usize,
    pub rotation: usize,
    pub sign: i8,
    pub split: usize,
}

/// Applies one step and freely reduces the result.
pub fn apply_relator(w: &Word, step: &DerivationStep, p: &Presentation) -> Result<Word> {
    let r = p
        .oriented_relator(step.relator, step.sign, step.rotation)
        .ok_or_else(|| Error::NotApplicable(format!("no relator {}", step.relator)))?;
    if step.split > r.len() || step.position + step.split > w.len() {
        return Err(Error::NotApplicable(format!("{step:?} out of range")));
    }
    let (r1, r2) = r.letters().split_at(step.split);
    let ls = w.letters();
    if &ls[step.position..step.position + step.split] != r1 {
        return Err(Error::NotApplicable(format!("{step:?} does not match")));
    }
    let mut out = ls[..step.position].to_vec();
    out.extend(r2.iter().rev().map(|l| l.inverse()));
    out.extend_from_slice(&ls[step.position + step.split..]);
    Ok(Word::from_letters(out).free_reduce())
}

/// A replayable derivation. Replay starts from the free reduction of `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaLedger {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<DerivationStep>,
}

impl AreaLedger {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self, p: &Presentation) -> Result<Word> {
        let mut w = self.start.free_reduce();
        for step in &self.steps {
            w = apply_relator(&w, step, p)?;
        }
        Ok(w)
    }

    /// Serialises steps as `position relator rotation sign split` lines.
    pub fn to_text(&self, p: &Presentation) -> String {
        let mut out = format!("start: {}\nend: {}\n", p.format_word(&self.start), p.format_word(&self.end));
        for s in &self.steps {
            out.push_str(&format!("step: {} {} {} {} {}\n", s.position, s.relator, s.rotation, s.sign, s.split));
        }
        out
    }

    pub fn from_text(p: &Presentation, text: &str) -> Result<Self> {
        let mut start = None;
        let mut end = None;
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse(ParseError::Line { line: i + 1, msg: msg.to_string() });
            let (k, v) = line.split_once(':').ok_or_else(|| bad("expected key: value"))?;
            match k.trim() {
                "start" => start = Some(p.parse_word(v.trim())?),
                "end" => end = Some(p.parse_word(v.trim())?),
                "step" => {
                    let f: Vec<i64> = v
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| bad("bad step field")))
                        .collect::<Result<_>>()?;
                    if f.len() != 5 || f.iter().enumerate().any(|(j, &x)| j != 3 && x < 0) {
                        return Err(bad("step needs five fields"));
                    }
                    steps.push(DerivationStep {
                        position: f[0] as usize,
                        relator: f[1] as usize,
                        rotation: f[2] as usize,
                        sign: if f[3] < 0 { -1 } else { 1 },
                        split: f[4] as usize,
                    });
                }
                _ => {}
            }
        }
        Ok(Self {
            start: start.ok_or_else(|| Error::Manifest("ledger without start".into()))?,
            end: end.ok_or_else(|| Error::Manifest("ledger without end".into()))?,
            steps,
        })
    }
}

/// True iff replaying the ledger reproduces its end word.
pub fn verify_ledger(l: &AreaLedger, p: &Presentation) -> bool {
    matches!(l.replay(p), Ok(w) if w == l.end.free_reduce())
}

/// Records steps while rewriting a word in place.
#[derive(Clone, Debug)]
pub struct LedgerBuilder<'p> {
    pres: &'p Presentation,
    start: Word,
    current: Word,
    steps: Vec<DerivationStep>,
}

impl<'p> LedgerBuilder<'p> {
    pub fn new(pres: &'p Presentation, start: &Word) -> Self {
        let start = start.free_reduce();
        Self { pres, current: start.clone(), start, steps: Vec::new() }
    }

    pub fn current(&self) -> &Word {
        &self.current
    }

    pub fn steps(&self) -> usize {
        self.steps.len()
    }

    pub fn apply(&mut self, step: DerivationStep) -> Result<()> {
        self.current = apply_relator(&self.current, &step, self.pres)?;
        self.steps.push(step);
        Ok(())
    }

    /// Rewrites `current[pos..pos + len]` into `to` with one relator application.
    pub fn replace(&mut self, pos: usize, len: usize, to: &Word) -> Result<()> {
        let from = Word::from_letters(self.current.letters()[pos..pos + len].to_vec());
        let (relator, sign, rotation) = self.pres.find_step(&from, to).ok_or_else(|| {
            Error::NotApplicable(format!(
                "no relator rewrites `{}` to `{}`",
                self.pres.format_word(&from),
                self.pres.format_word(to)
            ))
        })?;
        self.apply(DerivationStep { position: pos, relator, rotation, sign, split: len })
    }

    /// Replays another ledger whose start equals the current word's factor at
    /// `offset`; positions are shifted accordingly.
    pub fn splice(&mut self, offset: usize, other: &AreaLedger) -> Result<()> {
        for s in &other.steps {
            self.apply(DerivationStep { position: s.position + offset, ..*s })?;
        }
        Ok(())
    }

    pub fn finish(self) -> AreaLedger {
        AreaLedger { start: self.start, end: self.current, steps: self.steps }
    }
}

/// Image in the abelianization: exponent vectors reduced modulo the lattice
/// spanned by the relators' exponent vectors. Equal images are necessary for
/// conjugacy.
#[derive(Clone, Debug)]
pub struct Abelianizer {
    rows: Vec<(usize, Vec<i64>)>,
    gens: usize,
}

impl Abelianizer {
    pub fn new(p: &Presentation) -> Self {
        let n = p.alphabet().len();
        let mut m: Vec<Vec<i64>> =
            p.relators().iter().map(|r| (0..n).map(|g| r.exponent_sum(g)).collect()).collect();
        let mut rows = Vec::new();
        for col in 0..n {
            // gcd-eliminate this column among the remaining rows
            loop {
                m.retain(|r| r.iter().any(|&x| x != 0));
                let Some(piv) = (0..m.len()).filter(|&i| m[i][col] != 0).min_by_key(|&i| m[i][col].abs()) else {
                    break;
                };
                let pr = m[piv].clone();
                let mut done = true;
                for (i, r) in m.iter_mut().enumerate() {
                    if i != piv && r[col] != 0 {
                        let q = r[col] / pr[col];
                        for j in 0..n {
                            r[j] -= q * pr[j];
                        }
                        done &= r[col] == 0;
                    }
                }
                if done {
                    let mut pr = m.remove(piv);
                    if pr[col] < 0 {
                        pr.iter_mut().for_each(|x| *x = -*x);
                    }
                    rows.push((col, pr));
                    break;
                }
            }
        }
        Self { rows, gens: n }
    }

    pub fn image(&self, w: &Word) -> Vec<i64> {
        let mut v: Vec<i64> = (0..self.gens).map(|g| w.exponent_sum(g)).collect();
        for (col, r) in &self.rows {
            let q = v[*col].div_euclid(r[*col]);
            for j in 0..self.gens {
                v[j] -= q * r[j];
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::builtin;

    #[test]
    fn abelianizer_examples() {
        let g1 = builtin("G1").unwrap();
        let ab = Abelianizer::new(&g1);
        let w = |s: &str| g1.parse_word(s).unwrap();
        assert_eq!(ab.image(&w("c")), ab.image(&Word::empty()));
        assert_eq!(ab.image(&w("a b")), ab.image(&w("b a c^3")));
        assert_ne!(ab.image(&w("a")), ab.image(&w("b")));
        let bs = builtin("BS12").unwrap();
        let ab = Abelianizer::new(&bs);
        let w = |s: &str| bs.parse_word(s).unwrap();
        assert_eq!(ab.image(&w("s^5")), ab.image(&Word::empty()));
        assert_ne!(ab.image(&w("a")), ab.image(&Word::empty()));
        let g4 = builtin("G4").unwrap();
        let ab = Abelianizer::new(&g4);
        let w = |s: &str| g4.parse_word(s).unwrap();
        assert_eq!(ab.image(&w("b^-1 c s")), ab.image(&w("b^-1")));
    }

    #[test]
    fn apply_relator_g1_commutator() {
        let g1 = builtin("G1").unwrap();
        let w = g1.parse_word("a b a^-1 b^-1").unwrap();
        // whole relator [a,b]c^-1 split after the commutator part
        let step = DerivationStep { position: 0, relator: 2, rotation: 0, sign: 1, split: 4 };
        assert_eq!(apply_relator(&w, &step, &g1).unwrap(), g1.parse_word("c").unwrap());
    }

    #[test]
    fn apply_relator_bs12() {
        let p = builtin("BS12").unwrap();
        let w = p.parse_word("a s a^-1").unwrap();
        let step = DerivationStep { position: 0, relator: 0, rotation: 0, sign: 1, split: 3 };
        assert_eq!(apply_relator(&w, &step, &p).unwrap(), p.parse_word("s^2").unwrap());
    }

    #[test]
    fn apply_relator_pure_insertion() {
        let p = builtin("BS12").unwrap();
        let step = DerivationStep { position: 0, relator: 0, rotation: 0, sign: -1, split: 0 };
        // inserting the inverse of the complement of the empty prefix yields the relator
        assert_eq!(apply_relator(&Word::empty(), &step, &p).unwrap(), p.relators()[0]);
    }

    #[test]
    fn apply_relator_rejects_mismatch() {
        let p = builtin("BS12").unwrap();
        let w = p.parse_word("s s").unwrap();
        let step = DerivationStep { position: 0, relator: 0, rotation: 0, sign: 1, split: 2 };
        assert!(matches!(apply_relator(&w, &step, &p), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn ledger_verification() {
        let g1 = builtin("G1").unwrap();
        let start = g1.parse_word("a b a^-1 b^-1 c^-1").unwrap();
        let mut b = LedgerBuilder::new(&g1, &start);
        b.replace(0, 5, &Word::empty()).unwrap();
        let l = b.finish();
        assert_eq!(l.len(), 1);
        assert!(verify_ledger(&l, &g1));
        let mut bad = l.clone();
        bad.steps[0].position = 1;
        assert!(!verify_ledger(&bad, &g1));
        let back = AreaLedger::from_text(&g1, &l.to_text(&g1)).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn parse_presentation_file() {
        let text = "# heisenberg\ngenerators: a b c\nrelator: a c a^-1 c^-1\nrelator: b c b^-1 c^-1\nrelator: a b a^-1 b^-1 c^-1\n";
        let (p, warnings) = Presentation::parse_text("H", text).unwrap();
        assert_eq!(p.relators().len(), 3);
        assert!(warnings.is_empty());
        assert_eq!(p.relators(), builtin("G1").unwrap().relators());
    }

    #[test]
    fn parse_presentation_errors() {
        let e = Presentation::parse_text("x", "generators: a b\nrelator: a x\n").unwrap_err();
        assert!(matches!(e, ParseError::UnknownSymbolInRelator { line: 2, .. }));
        let e = Presentation::parse_text("x", "generators: a b\nrelator:\n").unwrap_err();
        assert!(matches!(e, ParseError::Line { line: 2, .. }));
        let e = Presentation::parse_text("x", "generators: a a\n").unwrap_err();
        assert!(matches!(e, ParseError::DuplicateGenerator(_)));
    }

    #[test]
    fn parse_presentation_cyclically_reduces_with_warning() {
        let (p, warnings) = Presentation::parse_text("x", "generators: a b\nrelator: b a b a^-1 b^-1\n").unwrap();
        assert_eq!(p.relators()[0], p.parse_word("a b a^-1").unwrap().free_reduce().cyclic_reduce().0);
        assert_eq!(warnings.len(), 1);
    }
}
