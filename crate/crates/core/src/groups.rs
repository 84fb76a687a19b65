//! Built-in presentations, addressable by name.

use crate::error::ParseError;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, Word};

pub const BUILTIN_NAMES: &[&str] =
    &["G1", "BS12", "G3", "G4", "G5:d=3", "G6:m=2", "G7", "G8", "A", "B", "C", "E", "L"];

fn comm(x: &str, y: &str) -> String {
    format!("{x} {y} {x}^-1 {y}^-1")
}

pub fn heisenberg() -> Presentation {
    Presentation::from_strs(
        "G1",
        &["a", "b", "c"],
        &[&comm("a", "c"), &comm("b", "c"), "a b a^-1 b^-1 c^-1"],
    )
}

pub fn bs12() -> Presentation {
    Presentation::from_strs("BS12", &["a", "s"], &["a s a^-1 s^-2"])
}

/// G1 × BS12 on `a b c t s`, the BS factor's `a` renamed to `t`.
pub fn g3() -> Presentation {
    let mut bs = bs12();
    bs = rename(&bs, |s| if s == "a" { "t".into() } else { s.into() });
    direct_product("G3", &heisenberg(), &bs)
}

pub fn g4() -> Presentation {
    Presentation::from_strs(
        "G4",
        &["a", "b", "c", "d", "s"],
        &[
            "a b a^-1 b^-1 c^-1",
            &comm("a", "c"),
            &comm("b", "c"),
            &comm("b", "d"),
            "a s a^-1 s^-2",
            "d s d^-1 s^-2",
        ],
    )
}

pub fn group_a() -> Presentation {
    Presentation::from_strs(
        "A",
        &["a", "b", "c", "d"],
        &["a b a^-1 b^-1 c^-1", &comm("a", "c"), &comm("b", "c"), &comm("b", "d")],
    )
}

pub fn group_b() -> Presentation {
    Presentation::from_strs("B", &["a", "d", "s"], &["a s a^-1 s^-2", "d s d^-1 s^-2"])
}

pub fn group_c() -> Presentation {
    Presentation::from_strs("C", &["a", "d"], &[])
}

pub fn group_e() -> Presentation {
    Presentation::from_strs(
        "E",
        &["a", "c", "d", "s"],
        &[&comm("a", "c"), "a s a^-1 s^-2", "d s d^-1 s^-2"],
    )
}

pub fn group_l() -> Presentation {
    Presentation::from_strs("L", &["b", "c", "s"], &[&comm("b", "c")])
}

/// Filiform group on `a1..ad t`: `t a_i t^-1 = a_i a_{i-1}` for i > 1, all
/// `a_i` commute and `t` commutes with `a1`.
pub fn filiform(d: usize) -> Presentation {
    assert!(d >= 1);
    let mut gens: Vec<String> = (1..=d).map(|i| format!("a{i}")).collect();
    gens.push("t".into());
    let mut rels = Vec::new();
    for i in 2..=d {
        rels.push(format!("t a{i} t^-1 a{}^-1 a{i}^-1", i - 1));
    }
    rels.push(comm("a1", "t"));
    for i in 1..=d {
        for j in i + 1..=d {
            rels.push(comm(&format!("a{i}"), &format!("a{j}")));
        }
    }
    build(&format!("G5:d={d}"), &gens, &rels)
}

/// Central extension on `a1..am b1 b2 c1..cm` with `b1 a_i = a_i b1 c_i` and
/// `b2 a_i = a_i b2 c_{i+1}^-1` (i < m); `b2` commutes with `am`.
pub fn central_ext(m: usize) -> Presentation {
    assert!(m >= 1);
    let a = |i: usize| format!("a{i}");
    let c = |i: usize| format!("c{i}");
    let mut gens: Vec<String> = (1..=m).map(a).collect();
    gens.push("b1".into());
    gens.push("b2".into());
    gens.extend((1..=m).map(c));
    let mut rels = Vec::new();
    for i in 1..=m {
        rels.push(format!("b1 {} {}^-1 b1^-1 {}^-1", a(i), c(i), a(i)));
    }
    for i in 1..m {
        rels.push(format!("b2 {} {} b2^-1 {}^-1", a(i), c(i + 1), a(i)));
    }
    rels.push(comm("b2", &a(m)));
    for i in 1..=m {
        for j in i + 1..=m {
            rels.push(comm(&a(i), &a(j)));
        }
    }
    rels.push(comm("b1", "b2"));
    for i in 1..=m {
        for j in i + 1..=m {
            rels.push(comm(&c(i), &c(j)));
        }
    }
    for b in ["b1", "b2"] {
        for j in 1..=m {
            rels.push(comm(b, &c(j)));
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            rels.push(comm(&a(i), &c(j)));
        }
    }
    build(&format!("G6:m={m}"), &gens, &rels)
}

/// Free product; the second factor's symbols get a `'` suffix.
pub fn free_product(name: &str, p: &Presentation, q: &Presentation) -> Presentation {
    let q = rename(q, |s| format!("{s}'"));
    join(name, p, &q, false)
}

/// Direct product of presentations over disjoint alphabets.
pub fn direct_product(name: &str, p: &Presentation, q: &Presentation) -> Presentation {
    join(name, p, q, true)
}

fn join(name: &str, p: &Presentation, q: &Presentation, commute: bool) -> Presentation {
    let np = p.alphabet().len();
    let mut syms: Vec<String> = p.alphabet().symbols().to_vec();
    syms.extend(q.alphabet().symbols().iter().cloned());
    let alphabet = Alphabet::new(syms).expect("disjoint alphabets");
    let shift = |w: &Word| w.substitute(|l| Word::letter(Letter::new(l.gen() + np, l.sign())));
    let mut rels: Vec<Word> = p.relators().to_vec();
    rels.extend(q.relators().iter().map(shift));
    if commute {
        for i in 0..np {
            for j in 0..q.alphabet().len() {
                let x = Word::letter(Letter::pos(i));
                let y = Word::letter(Letter::pos(np + j));
                rels.push(x.commutator(&y));
            }
        }
    }
    Presentation::new(name, alphabet, rels).expect("valid product")
}

fn rename(p: &Presentation, f: impl Fn(&str) -> String) -> Presentation {
    let syms: Vec<String> = p.alphabet().symbols().iter().map(|s| f(s)).collect();
    let alphabet = Alphabet::new(syms).expect("renaming keeps symbols distinct");
    Presentation::new(p.name(), alphabet, p.relators().to_vec()).expect("valid")
}

fn build(name: &str, gens: &[String], rels: &[String]) -> Presentation {
    let alphabet = Alphabet::new(gens.iter().cloned()).expect("valid alphabet");
    let rels = rels.iter().map(|r| alphabet.parse(r).expect("valid relator")).collect();
    Presentation::new(name, alphabet, rels).expect("valid presentation")
}

pub fn g7() -> Presentation {
    free_product("G7", &filiform(3), &central_ext(20))
}

pub fn g8() -> Presentation {
    free_product("G8", &filiform(4), &central_ext(20))
}

/// Splits `G5:d=3` / `G5:3` style names into base and parameter.
pub fn parse_param(name: &str) -> Option<(&str, usize)> {
    let (base, rest) = name.split_once(':')?;
    let rest = rest.rsplit('=').next()?;
    Some((base, rest.trim().parse().ok()?))
}

pub fn builtin(name: &str) -> Result<Presentation, ParseError> {
    let unknown = || ParseError::UnknownGroup(name.to_string());
    if let Some((base, k)) = parse_param(name) {
        return match base {
            "G5" if k >= 1 => Ok(filiform(k)),
            "G6" if k >= 1 => Ok(central_ext(k)),
            _ => Err(unknown()),
        };
    }
    Ok(match name {
        "G1" => heisenberg(),
        "G2" | "BS12" => bs12(),
        "G3" => g3(),
        "G4" => g4(),
        "G5" => filiform(3),
        "G6" => central_ext(2),
        "G7" => g7(),
        "G8" => g8(),
        "A" => group_a(),
        "B" => group_b(),
        "C" => group_c(),
        "E" => group_e(),
        "L" => group_l(),
        _ => return Err(unknown()),
    })
}
