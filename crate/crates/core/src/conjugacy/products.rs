use super::{cl_bfs, conjugation_word, ConjugacyCertificate};
use crate::error::{Error, Result};
use crate::models::{DirectProduct, FreeProduct, GroupModel, Syllable};
use crate::presentation::{DerivationStep, LedgerBuilder, Presentation};
use crate::word::Word;

/// Solves `w u w⁻¹ = v` inside one factor, in that factor's letters.
pub type FactorSolver<'a> = &'a dyn Fn(&Word, &Word) -> Result<Word>;

/// A factor solver backed by [`cl_bfs`].
pub fn bfs_solver<M: GroupModel>(model: &M, radius: usize) -> impl Fn(&Word, &Word) -> Result<Word> + '_ {
    move |u, v| cl_bfs(model, u, v, radius).map(|(_, w)| w)
}

fn relator_map(from: &Presentation, to: &Presentation, shift: usize) -> Option<Vec<usize>> {
    from.relators()
        .iter()
        .map(|r| {
            let r = r.substitute(|l| Word::letter(crate::word::Letter::new(l.gen() + shift, l.sign())));
            to.relators().iter().position(|x| *x == r)
        })
        .collect()
}

/// Combines factor certificates into one for `(u₁u₂, v₁v₂)` with conjugator
/// `w₁w₂`. When both carry ledgers the result does too: letters of the two
/// factors are first separated by commutator moves, then the factor ledgers
/// are replayed.
pub fn direct_product_conjugator<L: GroupModel, R: GroupModel>(
    dp: &DirectProduct<L, R>,
    c1: &ConjugacyCertificate,
    c2: &ConjugacyCertificate,
) -> Result<ConjugacyCertificate> {
    let (u, v, w) = (
        c1.u.concat(&dp.embed_right(&c2.u)),
        c1.v.concat(&dp.embed_right(&c2.v)),
        c1.w.concat(&dp.embed_right(&c2.w)),
    );
    let p = dp.presentation();
    let ledger = match (&c1.ledger, &c2.ledger) {
        (Some(l1), Some(l2)) => {
            let m1 = relator_map(dp.left.presentation(), p, 0).ok_or(Error::CertificateRejected)?;
            let m2 = relator_map(dp.right.presentation(), p, dp.split()).ok_or(Error::CertificateRejected)?;
            let mut b = LedgerBuilder::new(p, &conjugation_word(&u, &v, &w));
            let split = dp.split();
            while let Some(i) = b
                .current()
                .letters()
                .windows(2)
                .position(|x| x[0].gen() >= split && x[1].gen() < split)
            {
                let ls = b.current().letters();
                let to = Word::from_letters(vec![ls[i + 1], ls[i]]);
                b.replace(i, 2, &to)?;
            }
            for (l, m) in [(l1, &m1), (l2, &m2)] {
                for s in &l.steps {
                    b.apply(DerivationStep { relator: m[s.relator], ..*s })?;
                }
            }
            Some(b.finish())
        }
        _ => None,
    };
    ConjugacyCertificate::new(u, v, w, ledger, p, &|x| dp.is_identity(&dp.eval_word(x)))
}

type Elem<L, R> = Vec<Syllable<<L as GroupModel>::Element, <R as GroupModel>::Element>>;

/// Returns `(core, c)` with `c x c⁻¹ = core` cyclically reduced.
fn cyclic_core<L: GroupModel, R: GroupModel>(fp: &FreeProduct<L, R>, x: &Elem<L, R>) -> (Elem<L, R>, Elem<L, R>) {
    let mut core = x.clone();
    let mut c = fp.identity();
    while core.len() >= 2 {
        let same = matches!(
            (&core[0], &core[core.len() - 1]),
            (Syllable::Left(_), Syllable::Left(_)) | (Syllable::Right(_), Syllable::Right(_))
        );
        if !same {
            break;
        }
        let last = vec![core[core.len() - 1].clone()];
        core = fp.conjugate(&last, &core);
        c = fp.multiply(&last, &c);
    }
    (core, c)
}

/// Conjugacy in a free product: cyclically reduced forms of syllable length
/// at least two must be cyclic rotations; single syllables go to the factor
/// solvers.
pub fn free_product_conjugacy<L: GroupModel, R: GroupModel>(
    fp: &FreeProduct<L, R>,
    u: &Word,
    v: &Word,
    left: FactorSolver<'_>,
    right: FactorSolver<'_>,
) -> Result<ConjugacyCertificate> {
    let (cu, pu) = cyclic_core(fp, &fp.eval_word(u));
    let (cv, pv) = cyclic_core(fp, &fp.eval_word(v));
    if cu.len() != cv.len() {
        return Err(Error::NotConjugate);
    }
    let middle = match (cu.as_slice(), cv.as_slice()) {
        ([], []) => Word::empty(),
        ([Syllable::Left(x)], [Syllable::Left(y)]) => left(&fp.left.element_to_word(x), &fp.left.element_to_word(y))?,
        ([Syllable::Right(x)], [Syllable::Right(y)]) => {
            fp.embed_right(&right(&fp.right.element_to_word(x), &fp.right.element_to_word(y))?)
        }
        ([_], [_]) => return Err(Error::NotConjugate),
        _ => {
            let k = cu.len();
            let j = (0..k)
                .find(|&j| (0..k).all(|i| cu[(i + j) % k] == cv[i]))
                .ok_or(Error::NotConjugate)?;
            let prefix: Word = cu[..j].iter().map(|s| fp.syllable_to_word(s)).fold(Word::empty(), |a, b| a.concat(&b));
            prefix.inverse()
        }
    };
    let w = fp
        .element_to_word(&fp.inverse(&pv))
        .concat(&middle)
        .concat(&fp.element_to_word(&pu))
        .free_reduce();
    ConjugacyCertificate::new(u.clone(), v.clone(), w, None, fp.presentation(), &|x| fp.is_identity(&fp.eval_word(x)))
}
