//! PBW straightening shared by the universal and restricted enveloping algebras.
//!
//! Left multiplication by a generator on an ordered monomial is computed
//! recursively and memoized:
//!
//! * `i` below the first letter: prepend;
//! * `i` equal to the first letter: odd squares become `q`, even squares
//!   become the 2-map in the restricted case and raise the exponent otherwise;
//! * `i` above the first letter `j`: `e_i e_j = e_j e_i + [e_i, e_j]`.
//!
//! Every rewrite either keeps the degree and moves toward ordered form or
//! lowers the degree, so the recursion terminates.

use std::collections::{BTreeMap, HashMap};

use crate::gf2la::Elem;
use crate::liesuper::LieSuperAlgebra;

/// Exponent vector over the basis of the Lie superalgebra.
pub type Monomial = Vec<u16>;

/// Linear combination of ordered monomials.
pub type Poly = BTreeMap<Monomial, Elem>;

pub fn poly_add_scaled(field: &crate::gf2la::Field, target: &mut Poly, coef: Elem, source: &Poly) {
    if coef == 0 {
        return;
    }
    for (m, &c) in source {
        let v = field.mul(coef, c);
        let entry = target.entry(m.clone()).or_insert(0);
        *entry ^= v;
        if *entry == 0 {
            target.remove(m);
        }
    }
}

pub fn monomial_degree(m: &Monomial) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

pub struct Straightener<'a> {
    alg: &'a LieSuperAlgebra,
    restricted: bool,
    squares: Vec<Vec<Elem>>,
    memo: HashMap<(usize, Monomial), Poly>,
}

impl<'a> Straightener<'a> {
    /// `restricted` selects V(L) (even squares reduce via the 2-map) over U(L).
    pub fn new(alg: &'a LieSuperAlgebra, restricted: bool) -> Self {
        let squares = (0..alg.dim())
            .map(|i| {
                if alg.is_odd(i) {
                    alg.q(&alg.basis_vector(i))
                } else if restricted {
                    alg.two_map(&alg.basis_vector(i)).expect("restricted straightening needs a 2-map")
                } else {
                    Vec::new()
                }
            })
            .collect();
        Straightener { alg, restricted, squares, memo: HashMap::new() }
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        self.alg
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    pub fn one(&self) -> Monomial {
        vec![0; self.alg.dim()]
    }

    pub fn generator(&self, i: usize) -> Monomial {
        let mut m = self.one();
        m[i] = 1;
        m
    }

    /// `e_i * m` in ordered form.
    pub fn left_gen(&mut self, i: usize, m: &Monomial) -> Poly {
        if let Some(p) = self.memo.get(&(i, m.clone())) {
            return p.clone();
        }
        let p = self.compute_left_gen(i, m);
        self.memo.insert((i, m.clone()), p.clone());
        p
    }

    fn compute_left_gen(&mut self, i: usize, m: &Monomial) -> Poly {
        let f = self.alg.field();
        let first = m.iter().position(|&e| e > 0);
        let mut out = Poly::new();
        match first {
            Some(j) if i == j => {
                if self.alg.is_odd(i) || self.restricted {
                    let mut rest = m.clone();
                    rest[i] -= 1;
                    let sq = self.squares[i].clone();
                    for (g, &c) in sq.iter().enumerate() {
                        if c != 0 {
                            let t = self.left_gen(g, &rest);
                            poly_add_scaled(&f, &mut out, c, &t);
                        }
                    }
                } else {
                    let mut up = m.clone();
                    up[i] += 1;
                    out.insert(up, 1);
                }
            }
            Some(j) if i > j => {
                let mut rest = m.clone();
                rest[j] -= 1;
                let swapped = self.left_gen(i, &rest);
                for (mono, &c) in &swapped {
                    let t = self.left_gen(j, mono);
                    poly_add_scaled(&f, &mut out, c, &t);
                }
                let br = self.alg.bracket_basis(i, j).to_vec();
                for (g, &c) in br.iter().enumerate() {
                    if c != 0 {
                        let t = self.left_gen(g, &rest);
                        poly_add_scaled(&f, &mut out, c, &t);
                    }
                }
            }
            _ => {
                let mut up = m.clone();
                up[i] += 1;
                out.insert(up, 1);
            }
        }
        out
    }

    pub fn left_gen_poly(&mut self, i: usize, p: &Poly) -> Poly {
        let f = self.alg.field();
        let mut out = Poly::new();
        for (m, &c) in p {
            let t = self.left_gen(i, m);
            poly_add_scaled(&f, &mut out, c, &t);
        }
        out
    }

    /// `m * p` for an ordered monomial `m`, applying its letters right to left.
    pub fn mul_monomial(&mut self, m: &Monomial, p: &Poly) -> Poly {
        let mut acc = p.clone();
        for i in (0..m.len()).rev() {
            for _ in 0..m[i] {
                acc = self.left_gen_poly(i, &acc);
            }
        }
        acc
    }

    pub fn mul(&mut self, a: &Poly, b: &Poly) -> Poly {
        let f = self.alg.field();
        let mut out = Poly::new();
        for (m, &c) in a {
            let t = self.mul_monomial(m, b);
            poly_add_scaled(&f, &mut out, c, &t);
        }
        out
    }

    pub fn monomial_poly(m: Monomial) -> Poly {
        let mut p = Poly::new();
        p.insert(m, 1);
        p
    }
}
