//! The integral Heisenberg group with normal form `a^α b^β c^γ`.

use super::{powers, push_i64, GroupModel};
use crate::groups::heisenberg;
use crate::presentation::{AreaLedger, LedgerBuilder, Presentation};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct HeisElement {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl HeisElement {
    pub fn new(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self { alpha, beta, gamma }
    }
}

#[derive(Clone, Debug)]
pub struct Heis {
    pres: Presentation,
}

impl Default for Heis {
    fn default() -> Self {
        Self::new()
    }
}

impl Heis {
    pub fn new() -> Self {
        Self { pres: heisenberg() }
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

impl GroupModel for Heis {
    type Element = HeisElement;

    fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn identity(&self) -> HeisElement {
        HeisElement::default()
    }

    fn generator(&self, l: Letter) -> HeisElement {
        let e = l.sign() as i64;
        match l.gen() {
            A => HeisElement::new(e, 0, 0),
            B => HeisElement::new(0, e, 0),
            _ => HeisElement::new(0, 0, e),
        }
    }

    // b^β a^α' = a^α' b^β c^(-β α')
    fn multiply(&self, x: &HeisElement, y: &HeisElement) -> HeisElement {
        HeisElement::new(x.alpha + y.alpha, x.beta + y.beta, x.gamma + y.gamma - x.beta * y.alpha)
    }

    fn inverse(&self, x: &HeisElement) -> HeisElement {
        HeisElement::new(-x.alpha, -x.beta, -x.gamma - x.alpha * x.beta)
    }

    fn element_to_word(&self, g: &HeisElement) -> Word {
        powers(&self.pres, &[(A, g.alpha), (B, g.beta), (C, g.gamma)])
    }

    fn canonical_key(&self, g: &HeisElement) -> Vec<u8> {
        let mut out = Vec::with_capacity(24);
        push_i64(&mut out, g.alpha);
        push_i64(&mut out, g.beta);
        push_i64(&mut out, g.gamma);
        out
    }

    fn describe(&self, g: &HeisElement) -> String {
        format!("({}, {}, {})", g.alpha, g.beta, g.gamma)
    }
}

pub fn heis_eval(w: &Word) -> HeisElement {
    Heis::new().eval_word(w)
}

/// Normal-forms `w` by relator applications only and records the ledger.
/// The schedule first collects every `c` at the right end, then sorts the
/// `a`/`b` letters, each swap emitting one `c` that is carried right.
pub fn heis_eval_with_ledger(w: &Word) -> (HeisElement, AreaLedger) {
    let model = Heis::new();
    let p = model.presentation();
    let mut lb = LedgerBuilder::new(p, w);
    loop {
        if !shuffle_once(p, &mut lb) {
            break;
        }
    }
    let g = model.eval_word(w);
    debug_assert_eq!(lb.current(), &model.element_to_word(&g));
    (g, lb.finish())
}

fn letter_word(l: Letter) -> Word {
    Word::letter(l)
}

/// Performs one relator application moving the word towards normal form.
/// Returns false once the word is `a^α b^β c^γ`.
fn shuffle_once(p: &Presentation, lb: &mut LedgerBuilder<'_>) -> bool {
    let ls = lb.current().letters().to_vec();
    // push a c-letter right past a non-c neighbour
    for i in 0..ls.len().saturating_sub(1) {
        if ls[i].gen() == C && ls[i + 1].gen() != C {
            let to = Word::from_letters(vec![ls[i + 1], ls[i]]);
            lb.replace(i, 2, &to).expect("c is central");
            return true;
        }
    }
    // a b-letter directly followed by an a-letter
    for i in 0..ls.len().saturating_sub(1) {
        if ls[i].gen() == B && ls[i + 1].gen() == A {
            let (x, y) = (ls[i], ls[i + 1]);
            let k = -(x.sign() as i64) * (y.sign() as i64);
            let cw = Word::power(Letter::pos(C), k);
            let swapped = [letter_word(y), letter_word(x)];
            // the three placements of the new c-letter; one matches a relator
            let candidates = [
                swapped[0].concat(&swapped[1]).concat(&cw),
                swapped[0].concat(&cw).concat(&swapped[1]),
                cw.concat(&swapped[0]).concat(&swapped[1]),
            ];
            for cand in &candidates {
                if p.find_step(&Word::from_letters(vec![x, y]), cand).is_some() {
                    lb.replace(i, 2, cand).expect("found step");
                    return true;
                }
            }
            // b⁻¹a is not a two-letter arc of any relator; rewrite b⁻¹ alone
            // as a b⁻¹ a⁻¹ c and let the c-push cancel the a⁻¹ a
            let to = Word::from_letters(vec![Letter::pos(A), Letter::neg(B), Letter::neg(A), Letter::pos(C)]);
            lb.replace(i, 1, &to).expect("b^-1 arc");
            return true;
        }
    }
    false
}
