use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::envelope::random::random_module;
use crate::envelope::{build_vl, free_cover, is_projective_vl, ModuleMode, SuperModule};
use crate::gf2la::{vector, Elem, Field, Matrix};
use crate::liesuper::fixtures::{a1, a2, a3, a4, e2};
use crate::liesuper::random::random_restricted;
use crate::liesuper::LieSuperAlgebra;

fn pts(set: &PointSet) -> Vec<Vec<Elem>> {
    set.points.clone()
}

fn trivial(l: &LieSuperAlgebra, mode: ModuleMode) -> SuperModule {
    SuperModule::trivial(l, mode)
}

/// Freeness over `k[z]/(z^2)` for homogeneous `z`, decided by restricting to a
/// one-dimensional algebra and asking for a projective section.
fn oracle_free_at(m: &SuperModule, z: &[Elem], odd: bool) -> bool {
    let f = m.field();
    let line = if odd {
        LieSuperAlgebra::new(f, 0, 1).with_zero_two_map()
    } else {
        LieSuperAlgebra::new(f, 1, 0).with_zero_two_map()
    };
    let v = build_vl(&line).unwrap();
    let r = SuperModule::new(f, m.parities().to_vec(), vec![m.rho(z)], ModuleMode::V).unwrap();
    is_projective_vl(&v, &r).unwrap()
}

fn sample_algebras(rng: &mut ChaCha8Rng, count: usize) -> Vec<LieSuperAlgebra> {
    let mut out: Vec<LieSuperAlgebra> = crate::liesuper::fixtures::all().into_iter().map(|(_, l)| l).collect();
    while out.len() < count {
        out.push(random_restricted(rng, Field::gf2(), 2, 2));
    }
    out
}

#[test]
fn nullcone_examples() {
    assert_eq!(pts(&restricted_nullcone(&a2(), 1).unwrap()), vec![vec![0, 0], vec![1, 0]]);
    assert_eq!(pts(&restricted_nullcone(&a4(), 1).unwrap()), vec![vec![0, 0], vec![0, 1]]);
    assert_eq!(pts(&odd_nullcone(&a2(), 1).unwrap()), vec![vec![0, 0]]);
    assert_eq!(pts(&odd_nullcone(&a4(), 1).unwrap()), vec![vec![0, 0], vec![0, 1]]);
    assert_eq!(odd_nullcone(&a1(), 2).unwrap().len(), 4);
    // over GF(4) only the line through x survives in A2
    let big = restricted_nullcone(&a2(), 2).unwrap();
    assert_eq!(pts(&big), vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0]]);
    // abelian with zero q and 2-map: every point
    let ab = LieSuperAlgebra::new(Field::gf2(), 2, 1).with_zero_two_map();
    assert_eq!(restricted_nullcone(&ab, 2).unwrap().len(), 64);
    // A3 has x^[2] = x
    assert!(restricted_nullcone(&a3(), 3).unwrap().is_trivial());
    assert!(restricted_nullcone(&e2(), 1).unwrap().len() == 4);
}

#[test]
fn nullcone_errors() {
    assert!(matches!(restricted_nullcone(&a2().without_two_map(), 1), Err(crate::Error::MissingRestrictedData)));
    assert!(matches!(restricted_nullcone_capped(&a2(), 3, 63), Err(crate::Error::LimitExceeded { .. })));
    let over4 = a2().extend_to(Field::new(2).unwrap()).unwrap();
    assert!(matches!(restricted_nullcone(&over4, 3), Err(crate::Error::IncompatibleInputs(_))));
}

#[test]
fn nullcone_invariants_on_random_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for l in sample_algebras(&mut rng, 60) {
        for e in [1, 2] {
            let full = restricted_nullcone(&l, e).unwrap();
            let odd = odd_nullcone(&l, e).unwrap();
            assert!(odd.is_subset(&full), "{l:?}");
            assert!(full.is_scale_invariant() && odd.is_scale_invariant());
            assert!(full.contains(&vec![0; l.dim()]));
            let le = l.extend_to(full.field).unwrap();
            assert_eq!(restricted_nullcone_split(&le, DEFAULT_POINT_CAP).unwrap(), full);
        }
    }
}

#[test]
fn vl_support_examples() {
    let l = a2();
    let v = build_vl(&l).unwrap();
    assert!(support_points_vl(&l, &SuperModule::regular(&v), 2).unwrap().is_trivial());
    assert_eq!(support_points_vl(&l, &trivial(&l, ModuleMode::V), 1).unwrap(), restricted_nullcone(&l, 1).unwrap());
    // y acts by a rank-one odd map, x acts by zero
    let f = Field::gf2();
    let rho_y = Matrix::from_rows(f, 2, &[vec![0, 0], vec![1, 0]]);
    let m = SuperModule::new(f, vec![0, 1], vec![Matrix::zeros(f, 2, 2), rho_y], ModuleMode::V).unwrap();
    assert_eq!(pts(&support_points_vl(&l, &m, 1).unwrap()), vec![vec![0, 0], vec![1, 0]]);
}

#[test]
fn ul_support_examples() {
    let l = a1();
    assert_eq!(support_points_ul(&l, &trivial(&l, ModuleMode::U), 2).unwrap(), odd_nullcone(&l, 2).unwrap());
    let reg = SuperModule::regular(&build_vl(&l).unwrap()).with_mode(ModuleMode::U);
    assert!(support_points_ul(&l, &reg, 2).unwrap().is_trivial());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v2 = build_vl(&a2()).unwrap();
    for _ in 0..10 {
        let m = random_module(&v2, &mut rng, 8).with_mode(ModuleMode::U);
        assert!(support_points_ul(&a2(), &m, 2).unwrap().is_trivial());
    }
}

#[test]
fn freeness_test_matches_restriction_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for l in sample_algebras(&mut rng, 25) {
        let v = build_vl(&l).unwrap();
        for _ in 0..4 {
            let m = random_module(&v, &mut rng, 8);
            for z in restricted_nullcone(&l, 1).unwrap().nonzero() {
                let odd = vector::is_zero(&l.even_part(z));
                if !odd && !vector::is_zero(&l.odd_part(z)) {
                    continue;
                }
                assert_eq!(is_free_at(&m, z), oracle_free_at(&m, z, odd));
            }
        }
    }
}

#[test]
fn projectivity_is_trivial_support() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for l in sample_algebras(&mut rng, 30) {
        let v = build_vl(&l).unwrap();
        for _ in 0..4 {
            let m = random_module(&v, &mut rng, 8);
            let projective = is_projective_vl(&v, &m).unwrap();
            let found = detect_non_free_point(&l, &m, 1).unwrap();
            assert_eq!(projective, found.is_none(), "{l:?}");
            if projective {
                assert!(support_points_vl(&l, &m, 2).unwrap().is_trivial());
            }
        }
    }
}

#[test]
fn syzygy_preserves_freeness_pointwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for l in sample_algebras(&mut rng, 15) {
        let v = build_vl(&l).unwrap();
        let m = random_module(&v, &mut rng, 6);
        let omega = free_cover(&v, &m).unwrap().syzygy;
        for z in restricted_nullcone(&l, 2).unwrap().nonzero() {
            let z = z.clone();
            let (me, oe) = (m.extend_to(Field::new(2).unwrap()).unwrap(), omega.extend_to(Field::new(2).unwrap()).unwrap());
            assert_eq!(is_free_at(&me, &z), is_free_at(&oe, &z));
        }
    }
}

#[test]
fn tensor_examples() {
    let l = a1();
    let v = build_vl(&l).unwrap();
    let reg = SuperModule::regular(&v);
    for mode in [ModuleMode::V, ModuleMode::U] {
        let rep = tensor_property_check(&l, &reg, &reg, 2, mode).unwrap();
        assert!(rep.holds() && rep.tensor_support.is_trivial());
        let k = trivial(&l, mode);
        let rep = tensor_property_check(&l, &reg, &k, 1, mode).unwrap();
        assert!(rep.holds());
    }
}

#[test]
fn tensor_property_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for l in sample_algebras(&mut rng, 20) {
        let v = build_vl(&l).unwrap();
        for _ in 0..2 {
            let m = random_module(&v, &mut rng, 4);
            let n = random_module(&v, &mut rng, 4);
            for mode in [ModuleMode::V, ModuleMode::U] {
                let rep = tensor_property_check(&l, &m, &n, 1 + rng.gen_range(0..2), mode).unwrap();
                assert!(rep.holds(), "{:?}", rep.counterexample);
            }
        }
    }
}

#[test]
fn datum_examples() {
    let l = a2();
    let v = build_vl(&l).unwrap();
    let k = trivial(&l, ModuleMode::V);
    let omega = free_cover(&v, &k).unwrap().syzygy;
    assert_eq!(omega.dim(), 3);
    let x = vec![vec![1, 0]];
    assert_eq!(pts(&punctured_support(&l, &omega, 1).unwrap()), x);
    assert_eq!(pts(&punctured_support(&l, &k, 1).unwrap()), x);
    let rep = support_datum_suite(&l, &[k, SuperModule::regular(&v)], 1).unwrap();
    assert!(rep.holds(), "{:?}", rep.failures);
    assert_eq!(rep.checked, [3, 2, 4, 2, 2]);
}

#[test]
fn datum_suite_on_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for l in sample_algebras(&mut rng, 12) {
        let v = build_vl(&l).unwrap();
        let samples: Vec<SuperModule> = (0..3).map(|_| random_module(&v, &mut rng, 5)).collect();
        let rep = support_datum_suite(&l, &samples, 1).unwrap();
        assert!(rep.holds(), "{:?}", rep.failures);
        assert!(DatumAxiom::ALL.iter().all(|&a| rep.holds_for(a)));
    }
}

#[test]
fn projdim_examples() {
    assert!(!finite_projdim_ul(&a1(), &trivial(&a1(), ModuleMode::U), 1).unwrap().finite);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let v2 = build_vl(&a2()).unwrap();
    for _ in 0..10 {
        let m = random_module(&v2, &mut rng, 8);
        assert!(finite_projdim_ul(&a2(), &m, 2).unwrap().finite);
    }
    for l in [a3(), e2()] {
        let v = build_vl(&l).unwrap();
        for _ in 0..5 {
            let m = random_module(&v, &mut rng, 8);
            assert!(finite_projdim_ul(&l, &m, 3).unwrap().finite);
        }
    }
}

#[test]
fn central_extension_adds_square_of_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for l in sample_algebras(&mut rng, 15) {
        let form: Vec<Elem> = (0..l.dim()).map(|_| rng.gen_range(0..2)).collect();
        let ext = central_extension(&l, &form).unwrap();
        assert!(crate::liesuper::validate_all(&ext).unwrap().is_valid());
        let a = l.even_dim();
        for z in 0..(1u32 << l.dim()) {
            let z: Vec<Elem> = (0..l.dim()).map(|i| (z >> i) & 1).collect();
            let mut lifted = z[..a].to_vec();
            lifted.push(0);
            lifted.extend_from_slice(&z[a..]);
            let got = ext.two_op(&lifted).unwrap();
            let mut want = l.two_op(&z).unwrap();
            want.insert(a, Field::gf2().square(vector::dot(&Field::gf2(), &form, &z)));
            assert_eq!(got, want);
        }
    }
}

#[test]
fn carlson_worked_examples() {
    // constant form: the module vanishes
    let cm = carlson_module(&a2(), &FormProduct::one(), ModuleMode::V).unwrap();
    assert_eq!(cm.module.dim(), 0);
    assert!(check_zero_locus(&cm, 1).unwrap().matches());

    // A1 with the odd coordinate: Ω^2 k is one-dimensional and maps onto k
    let cm = carlson_module(&a1(), &FormProduct::new(vec![vec![1]]), ModuleMode::U).unwrap();
    assert_eq!((cm.degree, cm.omega_dim, cm.module.dim()), (2, 1, 0));
    assert!(!cm.class_is_zero);
    let check = check_zero_locus(&cm, 2).unwrap();
    assert!(check.matches() && check.zero_locus.is_empty());

    // A2 with the even coordinate: projective module
    let l = a2();
    let cm = carlson_module(&l, &FormProduct::new(vec![vec![1, 0]]), ModuleMode::V).unwrap();
    assert!(is_projective_vl(&build_vl(&l).unwrap(), &cm.module).unwrap());
    for e in [1, 2] {
        let check = check_zero_locus(&cm, e).unwrap();
        assert!(check.matches() && check.support.is_empty());
    }
}

#[test]
fn carlson_realizes_hyperplane_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let fixtures = [a1(), a2(), a4(), e2(), LieSuperAlgebra::new(Field::gf2(), 1, 1).with_zero_two_map()];
    let mut nontrivial = 0;
    for round in 0..24 {
        let l = &fixtures[round % fixtures.len()];
        let degree = 1 + rng.gen_range(0..2);
        let mut factors = Vec::new();
        while factors.len() < degree {
            let form: Vec<Elem> = (0..l.dim()).map(|_| rng.gen_range(0..2)).collect();
            if !vector::is_zero(&form) {
                factors.push(form);
            }
        }
        let cm = carlson_module(l, &FormProduct::new(factors), ModuleMode::V).unwrap();
        for e in [1, 2] {
            let check = check_zero_locus(&cm, e).unwrap();
            assert!(check.matches(), "{l:?} {:?} e={e}: {:?}", cm.forms, check.mismatch);
            nontrivial += usize::from(!check.zero_locus.is_empty());
        }
    }
    assert!(nontrivial > 0);
}

#[test]
fn carlson_rejects_bad_forms() {
    assert!(carlson_module(&a2(), &FormProduct::new(vec![vec![1]]), ModuleMode::V).is_err());
    assert!(carlson_module(&a2(), &FormProduct::new(vec![vec![0, 0]]), ModuleMode::V).is_err());
    assert!(carlson_module(&a2(), &FormProduct::new(vec![vec![1, 1]]), ModuleMode::U).is_err());
}
