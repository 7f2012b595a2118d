//! Exact arithmetic over GF(2^e) and dense linear algebra.

mod field;
mod matrix;
mod subspace;

pub use field::{is_irreducible, Elem, Field, MAX_DEGREE};
pub use matrix::{Matrix, PackedRows};
pub use subspace::Subspace;

/// Free-standing field operation, mostly for callers that dispatch on an opcode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
}

pub fn field_arith(field: &Field, a: Elem, b: Elem, op: FieldOp) -> crate::Result<Elem> {
    match op {
        FieldOp::Add => Ok(field.add(a, b)),
        FieldOp::Mul => Ok(field.mul(a, b)),
        FieldOp::Inv => field.inv(a),
    }
}

/// Vector helpers over a field; vectors are plain coefficient slices.
pub mod vector {
    use super::{Elem, Field};

    pub fn zero(n: usize) -> Vec<Elem> {
        vec![0; n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Elem> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    pub fn is_zero(v: &[Elem]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    pub fn add(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(x, y)| x ^ y).collect()
    }

    pub fn add_assign(a: &mut [Elem], b: &[Elem]) {
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    pub fn axpy(f: &Field, a: &mut [Elem], s: Elem, b: &[Elem]) {
        if s == 0 {
            return;
        }
        for (x, &y) in a.iter_mut().zip(b) {
            *x ^= f.mul(s, y);
        }
    }

    pub fn scale(f: &Field, s: Elem, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&x| f.mul(s, x)).collect()
    }

    pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| acc ^ f.mul(x, y))
    }
}
