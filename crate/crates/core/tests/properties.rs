use novikov_core::families::{corpus, enumerate_novikov, CorpusKind};
use novikov_core::quasiregular::{left_inverse_series, qr_solve, QrKind};
use novikov_core::radicals::{baer_radical, is_nilpotent, is_right_nilpotent, is_solvable};
use novikov_core::structure::{andrunakievich_radical, enumerate_ideals, heart};
use novikov_core::subspaces::{p_ideal, product_space, t_ideal};
use novikov_core::{Algebra, FieldSpec, Subspace};
use proptest::prelude::*;
use std::sync::OnceLock;

fn f3_dim2() -> &'static [Algebra] {
    static TABLES: OnceLock<Vec<Algebra>> = OnceLock::new();
    TABLES.get_or_init(|| enumerate_novikov(FieldSpec::prime(3).unwrap(), 2, false).unwrap().collect())
}

fn pick() -> impl Strategy<Value = &'static Algebra> {
    (0..f3_dim2().len()).prop_map(|i| &f3_dim2()[i])
}

fn full(a: &Algebra) -> Subspace {
    Subspace::full(a.field(), a.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radical_of_sum_is_sum_of_radicals(a in pick(), b in pick()) {
        let sum = a.direct_sum(b).unwrap();
        let ra = baer_radical(a, 6);
        let rb = baer_radical(b, 6);
        let rs = baer_radical(&sum, 6);
        prop_assert!(ra.certified && rb.certified && rs.certified);
        let expected = sum.coordinate_block(0, 2).embed(&ra.radical)
            .sum(&sum.coordinate_block(2, 2).embed(&rb.radical)).unwrap();
        prop_assert_eq!(rs.radical, expected);
    }

    #[test]
    fn solvability_characterisations_agree(a in pick(), b in pick()) {
        let sum = a.direct_sum(b).unwrap();
        let f = full(&sum);
        let square = product_space(&sum, &f, &f).unwrap();
        let solvable = is_solvable(&sum, &f).unwrap();
        prop_assert_eq!(solvable, is_right_nilpotent(&sum, &f).unwrap());
        prop_assert_eq!(solvable, is_nilpotent(&sum, &square).unwrap());
    }

    #[test]
    fn quotient_by_radical_has_zero_radical(a in pick(), b in pick()) {
        let sum = a.direct_sum(b).unwrap();
        let r = andrunakievich_radical(&sum, 6).unwrap();
        let (q, _) = sum.quotient(&r).unwrap();
        prop_assert!(andrunakievich_radical(&q, 6).unwrap().is_zero());
    }

    #[test]
    fn t_and_p_are_sandwiched(a in pick(), b in pick()) {
        let sum = a.direct_sum(b).unwrap();
        for i in enumerate_ideals(&sum, 6).unwrap().ideals {
            let t = t_ideal(&sum, &i).unwrap();
            let p = p_ideal(&sum, &i).unwrap();
            prop_assert!(p.contains(&t).unwrap());
            prop_assert!(t.contains(&product_space(&sum, &p, &p).unwrap()).unwrap());
        }
    }

    #[test]
    fn series_inverse_agrees_with_solver(a in pick(), coeffs in prop::collection::vec(0i64..3, 2)) {
        let f = full(a);
        prop_assume!(is_right_nilpotent(a, &f).unwrap());
        let z = a.element_from_ints(&coeffs).unwrap();
        let series = left_inverse_series(a, &z).unwrap();
        prop_assert!(series.is_some());
        prop_assert_eq!(series, qr_solve(a, &z, QrKind::Left).unwrap().y);
    }
}

#[test]
fn heart_is_inside_every_nonzero_ideal() {
    for entry in corpus(CorpusKind::All) {
        let alg = &entry.algebra;
        if !alg.field().is_finite() || alg.dim() == 0 {
            continue;
        }
        let h = heart(alg, 6).unwrap();
        for i in enumerate_ideals(alg, 6).unwrap().nonzero() {
            assert!(i.contains(&h).unwrap(), "{}", entry.name);
        }
    }
}
