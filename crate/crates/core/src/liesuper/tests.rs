use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fixtures::{a1, a2, a3, a4, e2};
use super::random::random_restricted;
use super::*;
use crate::gf2la::{vector, Elem, Field};

/// Oracle for the flattened 2-operation: quadratic extension of hand-given
/// basis values `e_i^{2}` using the bracket on off-diagonal pairs.
fn oracle_two_op(l: &LieSuperAlgebra, basis_values: &[Vec<Elem>], z: &[Elem]) -> Vec<Elem> {
    let f = l.field();
    let mut out = l.zero();
    for i in 0..l.dim() {
        vector::axpy(&f, &mut out, f.square(z[i]), &basis_values[i]);
        for j in i + 1..l.dim() {
            vector::axpy(&f, &mut out, f.mul(z[i], z[j]), l.bracket_basis(i, j));
        }
    }
    out
}

#[test]
fn fixtures_validate() {
    for (name, l) in fixtures::all() {
        let rep = validate_all(&l).unwrap();
        assert!(rep.is_valid(), "{name}: {:?}", rep.violations().collect::<Vec<_>>());
    }
}

#[test]
fn restricted_validation_needs_two_map() {
    let l = LieSuperAlgebra::new(Field::gf2(), 1, 0);
    assert!(matches!(validate_restricted(&l), Err(crate::Error::MissingRestrictedData)));
}

#[test]
fn semilinearity_is_vacuous_over_gf2() {
    let rep = validate_restricted(&a3()).unwrap();
    assert_eq!(rep.status(Axiom::Semilinear), Some(Status::Vacuous));
}

#[test]
fn injected_odd_square_is_reported() {
    let mut l = a2();
    l.set_bracket(1, 1, &[1, 0]);
    let rep = validate_superalgebra(&l);
    assert_eq!(rep.status(Axiom::OddSquare), Some(Status::Fail));
    let w = rep.checks.iter().find(|c| c.axiom == Axiom::OddSquare).unwrap().witness.clone().unwrap();
    assert_eq!(w.basis, vec![1, 1]);
}

#[test]
fn fake_even_square_fails() {
    let mut l = a3();
    l.set_bracket(0, 0, &[1]);
    assert_eq!(validate_superalgebra(&l).status(Axiom::EvenSquare), Some(Status::Fail));
}

#[test]
fn every_single_bracket_corruption_is_caught() {
    for (name, l) in fixtures::all() {
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut bad = l.clone();
                    bad.set_bracket_entry(i, j, k, l.bracket_basis(i, j)[k] ^ 1);
                    let rep = validate_all(&bad).unwrap();
                    let v: Vec<_> = rep.violations().collect();
                    assert!(!v.is_empty(), "{name}: corruption at ({i},{j},{k}) undetected");
                    assert!(v.iter().all(|c| c.witness.is_some()));
                }
            }
        }
    }
}

#[test]
fn q_and_two_map_corruptions() {
    // A4 with q(y) = x breaks ad(y)^2 = ad(q(y))
    let mut l = a4();
    l.set_q(0, &[1, 0]);
    assert_eq!(validate_superalgebra(&l).status(Axiom::QAdjoint), Some(Status::Fail));
    // A4 with x^[2] = 0 breaks ad(x^[2]) = ad(x)^2
    let mut l = a4();
    l.set_two_map(0, &[0, 0]);
    assert_eq!(validate_restricted(&l).unwrap().status(Axiom::TwoMapAdjoint), Some(Status::Fail));
    // odd components of q or of the 2-map break the grading
    let mut l = a1();
    l.set_q(0, &[1]);
    assert_eq!(validate_superalgebra(&l).status(Axiom::Parity), Some(Status::Fail));
    let mut l = a2();
    l.set_two_map(0, &[0, 1]);
    assert_eq!(validate_superalgebra(&l).status(Axiom::Parity), Some(Status::Fail));
    // A2 with q(y) = 0 is the abelian algebra with q = 0, still valid
    let mut l = a2();
    l.set_q(0, &[0, 0]);
    assert!(validate_all(&l).unwrap().is_valid());
}

#[test]
fn flattening_examples() {
    let fl = flatten_to_restricted(&a2()).unwrap();
    assert_eq!(fl.two_op(&[1, 1]), vec![1, 0]);
    assert_eq!(oracle_two_op(&a2(), &[vec![0, 0], vec![1, 0]], &[1, 1]), vec![1, 0]);
    let fl = flatten_to_restricted(&a4()).unwrap();
    assert_eq!(fl.two_op(&[1, 1]), vec![1, 1]);
    assert_eq!(oracle_two_op(&a4(), &[vec![1, 0], vec![0, 0]], &[1, 1]), vec![1, 1]);
    for l in [a1(), a2(), a3(), a4(), e2()] {
        let fl = flatten_to_restricted(&l).unwrap();
        assert!(fl.report().is_valid());
        assert_eq!(fl.two_op(&l.zero()), l.zero());
    }
}

#[test]
fn flattened_algebra_is_even_and_valid() {
    let fl = flatten_to_restricted(&a4()).unwrap();
    let even = fl.as_even_algebra();
    assert_eq!((even.even_dim(), even.odd_dim()), (2, 0));
    assert!(validate_all(&even).unwrap().is_valid());
}

#[test]
fn random_algebras_satisfy_two_op_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for e in [1, 2] {
        let field = Field::new(e).unwrap();
        for _ in 0..40 {
            let l = random_restricted(&mut rng, field, 2, 2);
            let fl = flatten_to_restricted(&l).unwrap();
            assert!(fl.report().is_valid());
            let basis: Vec<Vec<Elem>> = (0..l.dim()).map(|i| fl.two_op(&l.basis_vector(i))).collect();
            for _ in 0..10 {
                let z = validate::random_element(&l, &mut rng, 0..l.dim());
                let w = validate::random_element(&l, &mut rng, 0..l.dim());
                assert_eq!(fl.two_op(&z), oracle_two_op(&l, &basis, &z));
                let mut rhs = vector::add(&fl.two_op(&z), &fl.two_op(&w));
                vector::add_assign(&mut rhs, &l.bracket(&w, &z));
                assert_eq!(fl.two_op(&vector::add(&z, &w)), rhs);
                let ad = l.ad(&z);
                assert_eq!(ad.mul(&ad), l.ad(&fl.two_op(&z)));
                let (u, v) = (l.odd_part(&z), l.odd_part(&w));
                let mut qs = vector::add(&l.q(&u), &l.q(&v));
                vector::add_assign(&mut qs, &l.bracket(&u, &v));
                assert_eq!(l.q(&vector::add(&u, &v)), qs);
            }
        }
    }
}

#[test]
fn random_generator_produces_nonabelian_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let algs: Vec<_> = (0..60).map(|_| random_restricted(&mut rng, Field::gf2(), 2, 2)).collect();
    assert!(algs.iter().any(|l| !l.is_abelian()));
    assert!(algs.iter().any(|l| l.odd_dim() == 2));
    assert!(algs.iter().all(|l| l.even_dim() <= 2 && l.odd_dim() <= 2 && l.dim() > 0));
}
