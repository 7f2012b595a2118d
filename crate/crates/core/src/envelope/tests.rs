use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random::random_module;
use super::*;
use crate::gf2la::{Elem, Field, Matrix};
use crate::liesuper::fixtures::{a1, a2, a3, a4, e2};
use crate::liesuper::random::random_restricted;
use crate::liesuper::{adjoint_module, flatten_to_restricted, LieSuperAlgebra};

fn unit(d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn trivial_v(l: &LieSuperAlgebra) -> SuperModule {
    SuperModule::trivial(l, ModuleMode::V)
}

#[test]
fn a3_square_is_x() {
    let v = build_vl(&a3()).unwrap();
    assert_eq!(v.mul(&unit(2, 1), &unit(2, 1)), unit(2, 1));
}

#[test]
fn a2_is_truncated_polynomial_ring() {
    // oracle: k[t]/(t^4) with 1, t, t^2, t^3 <-> 1, y, x, x*y (bit 0 = x, bit 1 = y)
    let v = build_vl(&a2()).unwrap();
    let to_mask = [0b00, 0b10, 0b01, 0b11];
    for a in 0..4 {
        for b in 0..4 {
            let got = v.mul(&unit(4, to_mask[a]), &unit(4, to_mask[b]));
            let want = if a + b < 4 { unit(4, to_mask[a + b]) } else { vec![0; 4] };
            assert_eq!(got, want, "t^{a} * t^{b}");
        }
    }
}

#[test]
fn a4_swap_introduces_bracket() {
    let v = build_vl(&a4()).unwrap();
    // y * x = x*y + y
    assert_eq!(v.mul(&unit(4, 0b10), &unit(4, 0b01)), vec![0, 0, 1, 1]);
}

#[test]
fn pbw_dimension_and_flattened_tables_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut algs: Vec<LieSuperAlgebra> = crate::liesuper::fixtures::all().into_iter().map(|(_, l)| l).collect();
    for e in [1, 2] {
        for _ in 0..15 {
            algs.push(random_restricted(&mut rng, Field::new(e).unwrap(), 2, 2));
        }
    }
    for l in algs {
        let v = build_vl(&l).unwrap();
        assert_eq!(v.dim(), 1 << l.dim());
        let flat = flatten_to_restricted(&l).unwrap().as_even_algebra();
        let w = build_vl(&flat).unwrap();
        assert_eq!(v.mult_table(), w.mult_table());
    }
}

#[test]
fn module_validation_examples() {
    for l in [a1(), a2(), a3(), a4(), e2()] {
        assert!(validate_module(&l, &trivial_v(&l)).unwrap().is_valid());
        assert!(validate_module(&l, &adjoint_module(&l)).unwrap().is_valid());
    }
    // A2 on k^2 with y a Jordan block, x acting by y^2 = 0
    let l = a2();
    let f = l.field();
    let y = Matrix::from_rows(f, 2, &[vec![0, 1], vec![0, 0]]);
    let m = SuperModule::new(f, vec![0, 1], vec![Matrix::zeros(f, 2, 2), y], ModuleMode::V).unwrap();
    assert!(validate_module(&l, &m).unwrap().is_valid());
    // A1 regular
    let reg = SuperModule::regular(&build_vl(&a1()).unwrap());
    assert!(validate_module(&a1(), &reg).unwrap().is_valid());
    // wrong square is reported
    let zero_action = SuperModule::new(f, vec![0, 1], vec![Matrix::zeros(f, 2, 2), Matrix::zeros(f, 2, 2)], ModuleMode::V).unwrap();
    let x_identity = SuperModule::new(f, vec![0, 0], vec![Matrix::identity(f, 2), Matrix::zeros(f, 2, 2)], ModuleMode::V).unwrap();
    assert!(validate_module(&l, &zero_action).unwrap().is_valid());
    assert_eq!(validate_module(&l, &x_identity).unwrap().status(ModuleRelation::TwoMap), Some(crate::liesuper::Status::Fail));
}

#[test]
fn tensor_and_dual() {
    let l = a1();
    let v = build_vl(&l).unwrap();
    let reg = SuperModule::regular(&v);
    let k = trivial_v(&l);
    let km = module_tensor(&l, &k, &reg).unwrap();
    assert_eq!(km.actions(), reg.actions());
    let rr = module_tensor(&l, &reg, &reg).unwrap();
    assert_eq!(rr.dim(), 4);
    assert_eq!(rr.action(0).rank(), 2);
    assert!(validate_module(&l, &rr).unwrap().is_valid());
    let d = module_dual(&l, &reg).unwrap();
    assert!(validate_module(&l, &d).unwrap().is_valid());
    let other = trivial_v(&a2());
    assert!(matches!(module_tensor(&l, &reg, &other), Err(crate::Error::IncompatibleInputs(_))));
}

#[test]
fn free_cover_dimensions() {
    for l in [a1(), a2(), a4()] {
        let v = build_vl(&l).unwrap();
        let reg = SuperModule::regular(&v);
        let cov = free_cover(&v, &reg).unwrap();
        let d = v.dim();
        assert_eq!(cov.syzygy.dim(), d * (d - 1));
        assert!(validate_module(&l, &cov.syzygy).unwrap().is_valid());
    }
    let v = build_vl(&a1()).unwrap();
    assert_eq!(free_cover(&v, &trivial_v(&a1())).unwrap().syzygy.dim(), 1);
    let v = build_vl(&a2()).unwrap();
    assert_eq!(free_cover(&v, &trivial_v(&a2())).unwrap().syzygy.dim(), 3);
}

#[test]
fn projectivity_examples() {
    for l in [a1(), a2(), a3(), a4()] {
        let v = build_vl(&l).unwrap();
        assert!(is_projective_vl(&v, &SuperModule::regular(&v)).unwrap());
    }
    let v = build_vl(&a2()).unwrap();
    assert!(!is_projective_vl(&v, &trivial_v(&a2())).unwrap());
    let v = build_vl(&a3()).unwrap();
    assert!(is_projective_vl(&v, &trivial_v(&a3())).unwrap());
}

#[test]
fn ext_examples() {
    let v = build_vl(&a2()).unwrap();
    let k = trivial_v(&a2());
    assert_eq!(ext_dims_vl(&v, &k, &k, 6).unwrap(), vec![1; 7]);
    let v = build_vl(&a3()).unwrap();
    let k = trivial_v(&a3());
    assert_eq!(ext_dims_vl(&v, &k, &k, 4).unwrap(), vec![1, 0, 0, 0, 0]);
    let v = build_vl(&a1()).unwrap();
    let k = trivial_v(&a1());
    assert_eq!(ext_dims_vl(&v, &k, &k, 5).unwrap(), vec![1; 6]);
    assert!(matches!(ext_dims_vl(&v, &k, &k, 13), Err(crate::Error::LimitExceeded { .. })));
}

#[test]
fn random_module_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for round in 0..30 {
        let l = random_restricted(&mut rng, Field::gf2(), 2, 2);
        let v = build_vl(&l).unwrap();
        let m = random_module(&v, &mut rng, 8);
        assert!(validate_module(&l, &m).unwrap().is_valid(), "round {round}");
        let reg = SuperModule::regular(&v);
        let p = is_projective_vl(&v, &m).unwrap();
        assert_eq!(is_projective_vl(&v, &m.direct_sum(&reg).unwrap()).unwrap(), p);
        let n = random_module(&v, &mut rng, 4);
        let ext = ext_dims_vl(&v, &m, &n, 1).unwrap();
        assert_eq!(ext[0], hom_space(&m, &n).unwrap().len());
        if v.dim() <= 8 {
            let e = ext_dims_vl(&v, &m, &reg, 3).unwrap();
            assert_eq!(&e[1..], &[0, 0, 0], "V(L) is self-injective");
        }
    }
}
