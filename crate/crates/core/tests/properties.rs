use num_bigint::BigInt;
use proptest::prelude::*;

use fillfn_core::area::{AreaBudget, AreaSearch};
use fillfn_core::conjugacy::{heis_conjugator, ConjugacyCertificate};
use fillfn_core::groups;
use fillfn_core::hnn::g4::{g4_is_identity, retract, Retract};
use fillfn_core::models::{Bs12, GroupModel, Heis};
use fillfn_core::models::heis_bounds::heis_area_bound;
use fillfn_core::registry::lookup;
use fillfn_core::survey::{subnegative_closure, survey_cl, with_threads, GrowthTable, TableFormat};
use fillfn_core::{Letter, Word};

fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop::bool::ANY), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(g, pos)| Letter::new(g, if pos { 1 } else { -1 })).collect())
}

/// A conjugate of one relator of G1, freely reduced.
fn g1_trivial() -> impl Strategy<Value = Word> {
    (0..3usize, prop::bool::ANY, word(3, 2)).prop_map(|(r, inv, c)| {
        let p = groups::heisenberg();
        let r = &p.relators()[r];
        let r = if inv { r.inverse() } else { r.clone() };
        c.concat(&r).concat(&c.inverse()).free_reduce()
    })
}

fn g1_area(w: &Word) -> Option<u64> {
    let p = groups::heisenberg();
    let bound = |x: &[Letter]| heis_area_bound(x);
    AreaSearch::new(&p).with_lower_bound(&bound).area(w, AreaBudget::new(50_000, 64, 20)).outcome.exact()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn free_reduce_is_idempotent(w in word(3, 20)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn cyclic_reduce_round_trip(w in word(3, 20)) {
        let (core, prefix) = w.free_reduce().cyclic_reduce();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(prefix.concat(&core).concat(&prefix.inverse()).free_reduce(), w.free_reduce());
    }

    #[test]
    fn area_invariant_under_rotation_and_inversion(w in g1_trivial(), k in 0usize..16) {
        let (core, _) = w.cyclic_reduce();
        let base = g1_area(&core);
        prop_assume!(base.is_some());
        let k = if core.is_empty() { 0 } else { k % core.len() };
        prop_assert_eq!(g1_area(&core.rotate(k)), base);
        prop_assert_eq!(g1_area(&core.inverse()), base);
        prop_assert!(base.unwrap() <= 1);
    }

    #[test]
    fn heis_certificates_verify(u in word(3, 6), w in word(3, 6)) {
        let h = Heis::new();
        let v = w.concat(&u).concat(&w.inverse()).free_reduce();
        let cert = heis_conjugator(&u, &v).expect("conjugate by construction");
        let p = h.presentation();
        prop_assert!(cert.verify(p, &|x| h.is_identity(&h.eval_word(x))));
        let back = ConjugacyCertificate::from_text(p, &cert.to_text(p)).unwrap();
        prop_assert!(back.verify(p, &|x| h.is_identity(&h.eval_word(x))));
    }

    #[test]
    fn normal_forms_evaluate_back(w in word(3, 16), x in word(2, 16)) {
        let h = Heis::new();
        let g = h.eval_word(&w);
        prop_assert_eq!(h.eval_word(&h.element_to_word(&g)), g);
        let b = Bs12::new();
        let g = b.eval_word(&x);
        prop_assert_eq!(b.eval_word(&b.element_to_word(&g)), g);
    }

    #[test]
    fn g4_retracts_are_multiplicative(u in word(5, 12), v in word(5, 12)) {
        for which in [Retract::Heis, Retract::D1, Retract::A, Retract::B] {
            let lhs = retract(&u.concat(&v), which);
            prop_assert_eq!(lhs, retract(&u, which).concat(&retract(&v, which)).free_reduce());
        }
        prop_assert!(g4_is_identity(&u.concat(&v).concat(&u.concat(&v).inverse())));
    }

    #[test]
    fn closure_is_minimal(t in prop::collection::vec(0i64..200, 1..=16)) {
        let t: Vec<BigInt> = t.into_iter().map(BigInt::from).collect();
        let g = subnegative_closure(&t);
        prop_assert_eq!(subnegative_closure(&g), g.clone());
        for n in 0..t.len() {
            prop_assert!(g[n] >= t[n]);
            // every value is attained by the input or by a split
            let split = (1..n).any(|k| &g[k] + &g[n - k] == g[n]);
            prop_assert!(g[n] == t[n] || split);
        }
    }

    #[test]
    fn tables_round_trip(vals in prop::collection::vec(0u64..1_000_000, 1..10), tsv in prop::bool::ANY) {
        let mut t = GrowthTable::new("G1", fillfn_core::survey::Function::Area);
        for (n, v) in vals.iter().enumerate() {
            t.push(n, *v, fillfn_core::survey::Kind::Exact);
        }
        let f = if tsv { TableFormat::Tsv } else { TableFormat::Csv };
        let text = t.to_delimited(f);
        prop_assert_eq!(GrowthTable::from_delimited(&text).unwrap().to_delimited(f), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn surveys_do_not_depend_on_thread_count(threads in 2usize..5, n in 3usize..6) {
        let g = lookup("BS12").unwrap();
        let one = with_threads(1, || survey_cl(g.as_ref(), n, 10).unwrap());
        let many = with_threads(threads, || survey_cl(g.as_ref(), n, 10).unwrap());
        prop_assert_eq!(one.to_delimited(TableFormat::Csv), many.to_delimited(TableFormat::Csv));
    }
}
