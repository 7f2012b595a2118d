use std::fmt::Write as _;

use crate::error::{malformed, Error, Result};
use crate::gf2la::{vector, Elem, Field, Matrix};

/// A finite-dimensional Lie superalgebra over GF(2^e).
///
/// Basis indices `0..even_dim` are even, `even_dim..dim` are odd. Elements
/// are coefficient vectors of length `dim`. The quadratic map and the 2-map
/// are stored on basis elements only; their values on general elements are
/// forced by quadraticity and computed on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    field: Field,
    even_dim: usize,
    odd_dim: usize,
    names: Vec<String>,
    bracket: Vec<Elem>,
    q_diag: Vec<Vec<Elem>>,
    two_map: Option<Vec<Vec<Elem>>>,
}

impl LieSuperAlgebra {
    /// Abelian algebra with `q = 0` and no 2-map.
    pub fn new(field: Field, even_dim: usize, odd_dim: usize) -> Self {
        let n = even_dim + odd_dim;
        let names = (0..even_dim)
            .map(|i| format!("x{}", i + 1))
            .chain((0..odd_dim).map(|j| format!("y{}", j + 1)))
            .collect();
        LieSuperAlgebra {
            field,
            even_dim,
            odd_dim,
            names,
            bracket: vec![0; n * n * n],
            q_diag: vec![vec![0; n]; odd_dim],
            two_map: None,
        }
    }

    /// Builds an algebra from raw arrays. `bracket` is indexed `(i * n + j) * n + k`.
    pub fn from_parts(
        field: Field,
        even_dim: usize,
        odd_dim: usize,
        bracket: Vec<Elem>,
        q_diag: Vec<Vec<Elem>>,
        two_map: Option<Vec<Vec<Elem>>>,
    ) -> Result<Self> {
        let n = even_dim + odd_dim;
        if bracket.len() != n * n * n {
            return Err(malformed(format!("bracket table has {} entries, expected {}", bracket.len(), n * n * n)));
        }
        if q_diag.len() != odd_dim || q_diag.iter().any(|v| v.len() != n) {
            return Err(malformed("q table has wrong shape"));
        }
        if let Some(t) = &two_map {
            if t.len() != even_dim || t.iter().any(|v| v.len() != n) {
                return Err(malformed("2-map table has wrong shape"));
            }
        }
        let all = bracket.iter().chain(q_diag.iter().flatten()).chain(two_map.iter().flatten().flatten());
        if let Some(bad) = all.copied().find(|&c| !field.contains(c)) {
            return Err(malformed(format!("coefficient {bad} is not an element of GF(2^{})", field.degree())));
        }
        let mut alg = Self::new(field, even_dim, odd_dim);
        alg.bracket = bracket;
        alg.q_diag = q_diag;
        alg.two_map = two_map;
        Ok(alg)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(malformed("wrong number of basis names"));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(malformed("basis names are not unique"));
        }
        self.names = names;
        Ok(self)
    }

    /// Installs a zero 2-map if none is present.
    pub fn with_zero_two_map(mut self) -> Self {
        if self.two_map.is_none() {
            self.two_map = Some(vec![vec![0; self.dim()]; self.even_dim]);
        }
        self
    }

    pub fn without_two_map(mut self) -> Self {
        self.two_map = None;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.even_dim
    }

    pub fn parity(&self, i: usize) -> u8 {
        u8::from(self.is_odd(i))
    }

    pub fn is_restricted(&self) -> bool {
        self.two_map.is_some()
    }

    pub fn odd_indices(&self) -> std::ops::Range<usize> {
        self.even_dim..self.dim()
    }

    pub fn even_indices(&self) -> std::ops::Range<usize> {
        0..self.even_dim
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![0; self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        vector::unit(self.dim(), i)
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        (i * self.dim() + j) * self.dim()
    }

    /// `[e_i, e_j]` as stored (no symmetrization).
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Elem] {
        let s = self.idx(i, j);
        &self.bracket[s..s + self.dim()]
    }

    /// Sets `[e_i, e_j]` and `[e_j, e_i]` to `v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[Elem]) {
        assert_eq!(v.len(), self.dim());
        for (a, b) in [(i, j), (j, i)] {
            let s = self.idx(a, b);
            self.bracket[s..s + v.len()].copy_from_slice(v);
        }
    }

    /// Overwrites a single coefficient of `[e_i, e_j]` without touching `[e_j, e_i]`.
    pub fn set_bracket_entry(&mut self, i: usize, j: usize, k: usize, c: Elem) {
        let s = self.idx(i, j);
        self.bracket[s + k] = c;
    }

    pub fn raw_bracket(&self) -> &[Elem] {
        &self.bracket
    }

    /// `q(y_j)` for the `j`-th odd basis element (local odd index).
    pub fn q_basis(&self, j: usize) -> &[Elem] {
        &self.q_diag[j]
    }

    pub fn set_q(&mut self, j: usize, v: &[Elem]) {
        assert_eq!(v.len(), self.dim());
        self.q_diag[j] = v.to_vec();
    }

    /// `x_i^[2]` for the `i`-th even basis element.
    pub fn two_map_basis(&self, i: usize) -> Option<&[Elem]> {
        self.two_map.as_ref().map(|t| t[i].as_slice())
    }

    pub fn set_two_map(&mut self, i: usize, v: &[Elem]) {
        assert_eq!(v.len(), self.dim());
        let n = self.dim();
        let t = self.two_map.get_or_insert_with(|| vec![vec![0; n]; self.even_dim]);
        t[i] = v.to_vec();
    }

    pub fn bracket(&self, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let mut out = self.zero();
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                vector::axpy(&f, &mut out, f.mul(a, b), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `ad(u)`: column `j` is `[u, e_j]`.
    pub fn ad(&self, u: &[Elem]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Elem>> = (0..n).map(|j| self.bracket(u, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Elem>> = (0..n).map(|j| self.bracket_basis(i, j).to_vec()).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn even_part(&self, z: &[Elem]) -> Vec<Elem> {
        let mut v = z.to_vec();
        v[self.even_dim..].iter_mut().for_each(|c| *c = 0);
        v
    }

    pub fn odd_part(&self, z: &[Elem]) -> Vec<Elem> {
        let mut v = z.to_vec();
        v[..self.even_dim].iter_mut().for_each(|c| *c = 0);
        v
    }

    /// Quadratic extension of basis values: `Σ c_i² base(i) + Σ_{i<j} c_i c_j [e_i, e_j]`
    /// over the indices in `range`.
    fn quadratic(&self, z: &[Elem], range: std::ops::Range<usize>, base: impl Fn(usize) -> Vec<Elem>) -> Vec<Elem> {
        let f = self.field;
        let mut out = self.zero();
        let support: Vec<usize> = range.filter(|&i| z[i] != 0).collect();
        for (a, &i) in support.iter().enumerate() {
            vector::axpy(&f, &mut out, f.square(z[i]), &base(i));
            for &j in &support[a + 1..] {
                vector::axpy(&f, &mut out, f.mul(z[i], z[j]), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// `q` on the odd part of `y`.
    pub fn q(&self, y: &[Elem]) -> Vec<Elem> {
        let e = self.even_dim;
        self.quadratic(y, self.odd_indices(), |i| self.q_diag[i - e].clone())
    }

    /// The 2-map on the even part of `x`.
    pub fn two_map(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        let t = self.two_map.as_ref().ok_or(Error::MissingRestrictedData)?;
        Ok(self.quadratic(x, self.even_indices(), |i| t[i].clone()))
    }

    /// The 2-operation on the whole space: `z0^[2] + q(z1) + [z1, z0]`.
    pub fn two_op(&self, z: &[Elem]) -> Result<Vec<Elem>> {
        let z0 = self.even_part(z);
        let z1 = self.odd_part(z);
        let mut out = self.two_map(&z0)?;
        vector::add_assign(&mut out, &self.q(&z1));
        vector::add_assign(&mut out, &self.bracket(&z1, &z0));
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|&c| c == 0)
    }

    /// The same structure constants over `field`; only the prime field embeds.
    pub fn extend_to(&self, field: Field) -> Result<LieSuperAlgebra> {
        if field == self.field {
            return Ok(self.clone());
        }
        if !self.field.is_prime_field() {
            return Err(Error::IncompatibleInputs(format!(
                "cannot move an algebra over GF(2^{}) to GF(2^{})",
                self.field.degree(),
                field.degree()
            )));
        }
        let mut out = self.clone();
        out.field = field;
        Ok(out)
    }

    /// Human-readable linear combination, e.g. `x + 3*y1`.
    pub fn format_element(&self, v: &[Elem]) -> String {
        let mut s = String::new();
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            if c != 1 {
                let _ = write!(s, "{c}*");
            }
            s.push_str(&self.names[i]);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Direct sum; the basis of `self` comes first within each parity.
    pub fn direct_sum(&self, other: &LieSuperAlgebra) -> Result<LieSuperAlgebra> {
        if self.field != other.field {
            return Err(Error::IncompatibleInputs("direct sum over different fields".into()));
        }
        let (a1, b1, a2, b2) = (self.even_dim, self.odd_dim, other.even_dim, other.odd_dim);
        let mut out = LieSuperAlgebra::new(self.field, a1 + a2, b1 + b2);
        let left = |i: usize| if i < a1 { i } else { i - a1 + a1 + a2 };
        let right = |i: usize| if i < a2 { a1 + i } else { i - a2 + a1 + a2 + b1 };
        let n = out.dim();
        let embed = |v: &[Elem], map: &dyn Fn(usize) -> usize| {
            let mut w = vec![0; n];
            for (i, &c) in v.iter().enumerate() {
                w[map(i)] = c;
            }
            w
        };
        for (alg, map) in [(self, &left as &dyn Fn(usize) -> usize), (other, &right)] {
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let v = embed(alg.bracket_basis(i, j), map);
                    let s = out.idx(map(i), map(j));
                    out.bracket[s..s + n].copy_from_slice(&v);
                }
            }
            for j in 0..alg.odd_dim {
                let target = map(alg.even_dim + j) - out.even_dim;
                out.q_diag[target] = embed(&alg.q_diag[j], map);
            }
        }
        if self.is_restricted() || other.is_restricted() {
            let mut t = vec![vec![0; n]; a1 + a2];
            for (alg, map) in [(self, &left as &dyn Fn(usize) -> usize), (other, &right)] {
                if let Some(tm) = &alg.two_map {
                    for (i, v) in tm.iter().enumerate() {
                        t[map(i)] = embed(v, map);
                    }
                }
            }
            out.two_map = Some(t);
        }
        Ok(out)
    }

    /// Re-expresses the algebra in the basis `f_i = Σ_k p[k][i] e_k`.
    ///
    /// `p` must be invertible and parity-preserving.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieSuperAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n || p.rank() != n {
            return Err(malformed("change of basis must be an invertible square matrix"));
        }
        for r in 0..n {
            for c in 0..n {
                if p.get(r, c) != 0 && self.is_odd(r) != self.is_odd(c) {
                    return Err(malformed("change of basis must preserve parity"));
                }
            }
        }
        let f = self.field;
        let new_basis: Vec<Vec<Elem>> = (0..n).map(|i| p.column(i)).collect();
        let to_new = |v: &[Elem]| p.solve(v).expect("invertible");
        let mut out = LieSuperAlgebra::new(f, self.even_dim, self.odd_dim);
        out.names = self.names.clone();
        for i in 0..n {
            for j in 0..n {
                let v = to_new(&self.bracket(&new_basis[i], &new_basis[j]));
                let s = out.idx(i, j);
                out.bracket[s..s + n].copy_from_slice(&v);
            }
        }
        for j in 0..self.odd_dim {
            out.q_diag[j] = to_new(&self.q(&new_basis[self.even_dim + j]));
        }
        if self.is_restricted() {
            out.two_map = Some(
                (0..self.even_dim).map(|i| to_new(&self.two_map(&new_basis[i]).expect("restricted"))).collect(),
            );
        }
        Ok(out)
    }
}
