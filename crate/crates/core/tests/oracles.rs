//! Solver outputs against brute force over every element of small algebras.

use novikov_core::families::{corpus, CorpusKind};
use novikov_core::quasiregular::{qr_solve, QrKind};
use novikov_core::structure::enumerate_ideals;
use novikov_core::subspaces::{left_annihilator, nucleus, right_annihilator, two_sided_annihilator};
use novikov_core::{Algebra, Element, Subspace};

fn small_finite() -> Vec<(String, Algebra)> {
    corpus(CorpusKind::All)
        .into_iter()
        .filter(|e| e.algebra.field().is_finite() && e.algebra.dim() <= 3)
        .map(|e| (e.name, e.algebra))
        .collect()
}

fn all_elements(alg: &Algebra) -> Vec<Element> {
    Subspace::full(alg.field(), alg.dim())
        .elements()
        .unwrap()
        .map(|v| alg.element(v).unwrap())
        .collect()
}

fn members(alg: &Algebra, s: &Subspace) -> Vec<Element> {
    all_elements(alg).into_iter().filter(|x| s.contains_vector(x.coeffs())).collect()
}

#[test]
fn nucleus_matches_element_scan() {
    for (name, alg) in small_finite() {
        let everything = all_elements(&alg);
        let in_nucleus = |n: &Element| {
            everything.iter().all(|x| {
                everything.iter().all(|y| {
                    alg.associator(n, x, y).unwrap().is_zero()
                        && alg.associator(x, n, y).unwrap().is_zero()
                        && alg.associator(x, y, n).unwrap().is_zero()
                })
            })
        };
        let expected: Vec<Element> = everything.iter().filter(|n| in_nucleus(n)).cloned().collect();
        assert_eq!(members(&alg, &nucleus(&alg)), expected, "{name}");
    }
}

#[test]
fn annihilators_match_element_scan() {
    for (name, alg) in small_finite() {
        let everything = all_elements(&alg);
        for ideal in enumerate_ideals(&alg, 6).unwrap().ideals {
            let inside = members(&alg, &ideal);
            let kills_left = |a: &Element| inside.iter().all(|m| alg.multiply(a, m).unwrap().is_zero());
            let kills_right = |a: &Element| inside.iter().all(|m| alg.multiply(m, a).unwrap().is_zero());
            let left: Vec<_> = everything.iter().filter(|a| kills_left(a)).cloned().collect();
            let right: Vec<_> = everything.iter().filter(|a| kills_right(a)).cloned().collect();
            assert_eq!(members(&alg, &left_annihilator(&alg, &ideal).unwrap()), left, "{name}");
            assert_eq!(members(&alg, &right_annihilator(&alg, &ideal).unwrap()), right, "{name}");
        }
        let full = Subspace::full(alg.field(), alg.dim());
        let both: Vec<_> = everything
            .iter()
            .filter(|a| everything.iter().all(|x| alg.multiply(a, x).unwrap().is_zero() && alg.multiply(x, a).unwrap().is_zero()))
            .cloned()
            .collect();
        assert_eq!(members(&alg, &two_sided_annihilator(&alg)), both, "{name}");
        assert_eq!(two_sided_annihilator(&alg), left_annihilator(&alg, &full).unwrap().intersect(&right_annihilator(&alg, &full).unwrap()).unwrap());
    }
}

#[test]
fn ideal_inventory_matches_element_closure() {
    for (name, alg) in small_finite() {
        let basis = alg.basis();
        let inventory = enumerate_ideals(&alg, 6).unwrap().ideals;
        let mut expected = Vec::new();
        for s in novikov_core::subspaces::enumerate_subspaces(alg.field(), alg.dim()).unwrap() {
            let closed = members(&alg, &s).iter().all(|x| {
                basis.iter().all(|e| {
                    s.contains_vector(alg.multiply(x, e).unwrap().coeffs()) && s.contains_vector(alg.multiply(e, x).unwrap().coeffs())
                })
            });
            if closed {
                expected.push(s);
            }
        }
        expected.sort();
        assert_eq!(inventory, expected, "{name}");
    }
}

#[test]
fn qr_solver_matches_candidate_scan() {
    for (name, alg) in small_finite() {
        let everything = all_elements(&alg);
        for x in &everything {
            for kind in [QrKind::Left, QrKind::Right, QrKind::TwoSided] {
                let sum = |y: &Element| x.add(y);
                let works = |y: &Element| match kind {
                    QrKind::Left => alg.multiply(y, x).unwrap() == sum(y),
                    QrKind::Right => alg.multiply(x, y).unwrap() == sum(y),
                    QrKind::TwoSided => alg.multiply(y, x).unwrap() == sum(y) && alg.multiply(x, y).unwrap() == sum(y),
                };
                let brute = everything.iter().any(works);
                let solved = qr_solve(&alg, x, kind).unwrap();
                assert_eq!(solved.y.is_some(), brute, "{name} {kind:?} {x:?}");
            }
        }
    }
}
