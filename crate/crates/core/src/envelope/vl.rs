use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::pbw::{Monomial, Straightener};
use crate::error::{Error, Result};
use crate::gf2la::{Elem, Field, Matrix};
use crate::liesuper::{validate_all, LieSuperAlgebra};

/// Largest Lie superalgebra dimension for which V(L) is materialized.
pub const MAX_VL_GENERATORS: usize = 8;
const EXHAUSTIVE_ASSOCIATIVITY: usize = 6;
const SAMPLED_TRIPLES: usize = 1000;

/// The restricted enveloping algebra as a concrete `2^n`-dimensional algebra.
///
/// Basis element `m` (a bitmask) is the ordered square-free monomial whose
/// letters are the set bits of `m`; bit `i` is the `i`-th basis element of L.
#[derive(Clone, Debug)]
pub struct PbwAlgebra {
    source: LieSuperAlgebra,
    n: usize,
    table: Vec<Vec<(u32, Elem)>>,
}

pub fn mask_to_monomial(mask: usize, n: usize) -> Monomial {
    (0..n).map(|i| ((mask >> i) & 1) as u16).collect()
}

fn monomial_to_mask(m: &Monomial) -> usize {
    debug_assert!(m.iter().all(|&e| e <= 1));
    m.iter().enumerate().fold(0, |acc, (i, &e)| acc | ((e as usize) << i))
}

impl PbwAlgebra {
    pub fn source(&self) -> &LieSuperAlgebra {
        &self.source
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Parity of a basis monomial: number of odd letters mod 2.
    pub fn parity(&self, mask: usize) -> u8 {
        let odd_mask = ((1usize << self.n) - 1) & !((1usize << self.source.even_dim()) - 1);
        ((mask & odd_mask).count_ones() & 1) as u8
    }

    pub fn generator_mask(&self, i: usize) -> usize {
        1 << i
    }

    /// Product of two basis monomials as sparse `(mask, coefficient)` pairs.
    pub fn mul_basis(&self, a: usize, b: usize) -> &[(u32, Elem)] {
        &self.table[a * self.dim() + b]
    }

    pub fn mul(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut out = vec![0; self.dim()];
        for (a, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in v.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let s = f.mul(x, y);
                for &(m, c) in self.mul_basis(a, b) {
                    out[m as usize] ^= f.mul(s, c);
                }
            }
        }
        out
    }

    /// Dense multiplication table: entry `[a][b]` is the coefficient vector of `a * b`.
    pub fn mult_table(&self) -> Vec<Vec<Vec<Elem>>> {
        let d = self.dim();
        (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        let mut v = vec![0; d];
                        for &(m, c) in self.mul_basis(a, b) {
                            v[m as usize] = c;
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of left multiplication by the basis monomial `a`.
    pub fn left_matrix(&self, a: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for b in 0..d {
            for &(r, c) in self.mul_basis(a, b) {
                m.set(r as usize, b, c);
            }
        }
        m
    }

    /// First basis triple violating associativity, if any.
    ///
    /// Exhaustive for at most six generators, otherwise a fixed-seed sample.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let check = |a: usize, b: usize, c: usize| {
            let mut ab = vec![0; d];
            for &(m, x) in self.mul_basis(a, b) {
                ab[m as usize] = x;
            }
            let mut bc = vec![0; d];
            for &(m, x) in self.mul_basis(b, c) {
                bc[m as usize] = x;
            }
            let mut ea = vec![0; d];
            ea[a] = 1;
            let mut ec = vec![0; d];
            ec[c] = 1;
            self.mul(&ab, &ec) == self.mul(&ea, &bc)
        };
        if self.n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        if !check(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xa550c);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .find(|&(a, b, c)| !check(a, b, c))
        }
    }

    pub fn format_monomial(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..self.n).filter(|i| mask >> i & 1 == 1).map(|i| self.source.name(i)).collect::<Vec<_>>().join("*")
    }
}

/// Builds V(L) by PBW straightening and checks associativity.
pub fn build_vl(l: &LieSuperAlgebra) -> Result<PbwAlgebra> {
    let rep = validate_all(l)?;
    if let Some(v) = rep.violations().next() {
        return Err(Error::MalformedInput(format!("algebra fails {}", v.axiom)));
    }
    build_vl_unchecked(l)
}

/// Builds V(L) without re-running the axiom checks (associativity is still verified).
pub fn build_vl_unchecked(l: &LieSuperAlgebra) -> Result<PbwAlgebra> {
    let n = l.dim();
    if n > MAX_VL_GENERATORS {
        return Err(Error::LimitExceeded { what: "generators of V(L)".into(), limit: MAX_VL_GENERATORS as u64 });
    }
    if !l.is_restricted() {
        return Err(Error::MissingRestrictedData);
    }
    let d = 1usize << n;
    let mut st = Straightener::new(l, true);
    let mut table = Vec::with_capacity(d * d);
    for a in 0..d {
        let ma = mask_to_monomial(a, n);
        for b in 0..d {
            let p = st.mul_monomial(&ma, &Straightener::monomial_poly(mask_to_monomial(b, n)));
            table.push(p.iter().map(|(m, &c)| (monomial_to_mask(m) as u32, c)).collect());
        }
    }
    let alg = PbwAlgebra { source: l.clone(), n, table };
    if let Some((a, b, c)) = alg.associativity_violation() {
        return Err(Error::MalformedInput(format!(
            "straightened product is not associative on ({}, {}, {})",
            alg.format_monomial(a),
            alg.format_monomial(b),
            alg.format_monomial(c)
        )));
    }
    Ok(alg)
}
