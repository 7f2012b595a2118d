use std::fmt;

use super::vl::PbwAlgebra;
use crate::error::{malformed, Error, Result};
use crate::gf2la::{vector, Elem, Field, Matrix, Subspace};
use crate::liesuper::{validate::witness, LieSuperAlgebra, Report};

/// Which enveloping algebra a module is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleMode {
    /// Module over U(L): no relation on even squares.
    U,
    /// Module over V(L): even squares act through the 2-map.
    V,
}

impl fmt::Display for ModuleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleMode::U => "U",
            ModuleMode::V => "V",
        })
    }
}

/// A finite-dimensional supermodule given by the action of each basis element of L.
///
/// Every basis vector of the module is homogeneous; `parities[k]` is its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    field: Field,
    parities: Vec<u8>,
    action: Vec<Matrix>,
    mode: ModuleMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleRelation {
    /// Even generators preserve parity, odd generators swap it.
    Parity,
    /// `ρ(a)ρ(b) + ρ(b)ρ(a) = ρ([a, b])`.
    Commutator,
    /// `ρ(y)^2 = ρ(q(y))`.
    OddSquare,
    /// `ρ(x)^2 = ρ(x^[2])`, V-modules only.
    TwoMap,
}

impl ModuleRelation {
    pub fn label(self) -> &'static str {
        match self {
            ModuleRelation::Parity => "parity",
            ModuleRelation::Commutator => "commutator",
            ModuleRelation::OddSquare => "odd-square",
            ModuleRelation::TwoMap => "two-map",
        }
    }
}

impl fmt::Display for ModuleRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub type ModuleReport = Report<ModuleRelation>;

impl SuperModule {
    pub fn new(field: Field, parities: Vec<u8>, action: Vec<Matrix>, mode: ModuleMode) -> Result<Self> {
        let d = parities.len();
        if parities.iter().any(|&p| p > 1) {
            return Err(malformed("parity must be 0 or 1"));
        }
        for m in &action {
            if m.rows() != d || m.cols() != d {
                return Err(malformed(format!("action matrix is {}x{}, module has dimension {d}", m.rows(), m.cols())));
            }
            if m.field() != field {
                return Err(malformed("action matrix over a different field"));
            }
        }
        Ok(SuperModule { field, parities, action, mode })
    }

    /// The trivial module `k` (even, zero action).
    pub fn trivial(l: &LieSuperAlgebra, mode: ModuleMode) -> Self {
        Self::zero_action(l, vec![0], mode)
    }

    /// Zero action on a space with the given parities.
    pub fn zero_action(l: &LieSuperAlgebra, parities: Vec<u8>, mode: ModuleMode) -> Self {
        let d = parities.len();
        let action = (0..l.dim()).map(|_| Matrix::zeros(l.field(), d, d)).collect();
        SuperModule { field: l.field(), parities, action, mode }
    }

    /// V(L) acting on itself by left multiplication.
    pub fn regular(v: &PbwAlgebra) -> Self {
        let n = v.generators();
        let parities = (0..v.dim()).map(|m| v.parity(m)).collect();
        let action = (0..n).map(|i| v.left_matrix(v.generator_mask(i))).collect();
        SuperModule { field: v.field(), parities, action, mode: ModuleMode::V }
    }

    /// `d` copies of the regular module; copy `k` is shifted by `shifts[k]`.
    pub fn free(v: &PbwAlgebra, shifts: &[u8]) -> Self {
        let reg = Self::regular(v);
        let n = v.generators();
        let mut out = SuperModule { action: (0..n).map(|_| Matrix::zeros(v.field(), 0, 0)).collect(), parities: vec![], ..reg.clone() };
        for &s in shifts {
            let mut shifted = reg.clone();
            shifted.parities.iter_mut().for_each(|p| *p ^= s);
            out = out.direct_sum_unchecked(&shifted);
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The same action over `field`; only the prime field embeds.
    pub fn extend_to(&self, field: Field) -> Result<SuperModule> {
        if field == self.field {
            return Ok(self.clone());
        }
        if !self.field.is_prime_field() {
            return Err(Error::IncompatibleInputs("only modules over GF(2) can be extended".into()));
        }
        let action = self
            .action
            .iter()
            .map(|a| {
                let rows: Vec<Vec<Elem>> = (0..a.rows()).map(|r| a.row(r).to_vec()).collect();
                Matrix::from_rows(field, a.cols(), &rows)
            })
            .collect();
        Ok(SuperModule { field, action, ..self.clone() })
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 0).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn mode(&self) -> ModuleMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: ModuleMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn generators(&self) -> usize {
        self.action.len()
    }

    /// `ρ(e_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(z)` for an element `z` of L.
    pub fn rho(&self, z: &[Elem]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for (i, &c) in z.iter().enumerate() {
            out.add_assign_scaled(c, &self.action[i]);
        }
        out
    }

    /// Actions of all basis monomials of V(L), indexed by bitmask.
    pub fn monomial_actions(&self) -> Vec<Matrix> {
        let n = self.action.len();
        let mut out = vec![Matrix::identity(self.field, self.dim())];
        for mask in 1usize..(1 << n) {
            // letters in increasing order; peel off the first one
            let i = mask.trailing_zeros() as usize;
            let rest = &out[mask & (mask - 1)];
            out.push(self.action[i].mul(rest));
        }
        out
    }

    /// `ρ(a)` for an element `a` of V(L) given in the monomial basis.
    pub fn rho_v(&self, a: &[Elem], monomials: &[Matrix]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for (m, &c) in a.iter().enumerate() {
            out.add_assign_scaled(c, &monomials[m]);
        }
        out
    }

    fn check_compatible(&self, other: &SuperModule) -> Result<()> {
        if self.field != other.field || self.action.len() != other.action.len() {
            return Err(Error::IncompatibleInputs("modules over different algebras".into()));
        }
        Ok(())
    }

    fn direct_sum_unchecked(&self, other: &SuperModule) -> SuperModule {
        let (d1, d2) = (self.dim(), other.dim());
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(self.field, d1 + d2, d1 + d2);
                m.set_block(0, 0, a);
                m.set_block(d1, d1, b);
                m
            })
            .collect();
        let parities = self.parities.iter().chain(&other.parities).copied().collect();
        let mode = if self.mode == ModuleMode::V && other.mode == ModuleMode::V { ModuleMode::V } else { ModuleMode::U };
        SuperModule { field: self.field, parities, action, mode }
    }

    pub fn direct_sum(&self, other: &SuperModule) -> Result<SuperModule> {
        self.check_compatible(other)?;
        Ok(self.direct_sum_unchecked(other))
    }

    /// Parity shift.
    pub fn shift(&self) -> SuperModule {
        let mut m = self.clone();
        m.parities.iter_mut().for_each(|p| *p ^= 1);
        m
    }

    /// Submodule spanned by the rows of a subspace that is invariant and graded.
    ///
    /// The basis of the result is the echelon basis of `sub`.
    pub fn submodule(&self, sub: &Subspace) -> Result<SuperModule> {
        let mut parities = Vec::with_capacity(sub.dim());
        for row in sub.basis() {
            parities.push(homogeneous_parity(&self.parities, row).ok_or_else(|| malformed("subspace is not graded"))?);
        }
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let cols: Vec<Vec<Elem>> = sub
                .basis()
                .iter()
                .map(|v| sub.coords(&a.mul_vec(v)).ok_or_else(|| malformed("subspace is not invariant")))
                .collect::<Result<_>>()?;
            action.push(Matrix::from_columns(self.field, sub.dim(), &cols));
        }
        Ok(SuperModule { field: self.field, parities, action, mode: self.mode })
    }

    /// Quotient by an invariant graded subspace; basis = standard vectors at non-pivot positions.
    pub fn quotient(&self, sub: &Subspace) -> Result<SuperModule> {
        let mut is_pivot = vec![false; self.dim()];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        for row in sub.basis() {
            if homogeneous_parity(&self.parities, row).is_none() {
                return Err(malformed("subspace is not graded"));
            }
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| !is_pivot[i]).collect();
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            for row in sub.basis() {
                if !sub.contains(&a.mul_vec(row)) {
                    return Err(malformed("subspace is not invariant"));
                }
            }
            let cols: Vec<Vec<Elem>> = keep
                .iter()
                .map(|&c| {
                    let r = sub.reduce(&a.column(c));
                    keep.iter().map(|&k| r[k]).collect()
                })
                .collect();
            action.push(Matrix::from_columns(self.field, keep.len(), &cols));
        }
        let parities = keep.iter().map(|&k| self.parities[k]).collect();
        Ok(SuperModule { field: self.field, parities, action, mode: self.mode })
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn generated_subspace<'a>(&self, vectors: impl IntoIterator<Item = &'a Vec<Elem>>) -> Subspace {
        let mut sub = Subspace::zero(self.field, self.dim());
        let mut queue: Vec<Vec<Elem>> = Vec::new();
        for v in vectors {
            if sub.insert(v) {
                queue.push(v.clone());
            }
        }
        self.close_under_action(&mut sub, queue);
        sub
    }

    /// Extends `sub` by the orbit of the queued vectors.
    pub fn close_under_action(&self, sub: &mut Subspace, mut queue: Vec<Vec<Elem>>) {
        while let Some(v) = queue.pop() {
            for a in &self.action {
                let w = a.mul_vec(&v);
                if sub.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
}

/// Parity of a homogeneous vector (zero vectors count as even).
pub fn homogeneous_parity(parities: &[u8], v: &[Elem]) -> Option<u8> {
    let mut seen = None;
    for (k, &c) in v.iter().enumerate() {
        if c != 0 {
            match seen {
                None => seen = Some(parities[k]),
                Some(p) if p != parities[k] => return None,
                _ => {}
            }
        }
    }
    Some(seen.unwrap_or(0))
}

/// Checks the defining relations of U(L) or V(L) on `m`.
pub fn validate_module(l: &LieSuperAlgebra, m: &SuperModule) -> Result<ModuleReport> {
    if m.generators() != l.dim() {
        return Err(malformed(format!("module has {} action matrices, algebra has dimension {}", m.generators(), l.dim())));
    }
    if m.field() != l.field() {
        return Err(Error::IncompatibleInputs("module and algebra over different fields".into()));
    }
    let n = l.dim();
    let mut rep = ModuleReport::default();

    let mut par = None;
    'par: for g in 0..n {
        let a = m.action(g);
        for r in 0..m.dim() {
            for c in 0..m.dim() {
                if a.get(r, c) != 0 && m.parities[r] != m.parities[c] ^ l.parity(g) {
                    par = witness(vec![g, r, c], format!("action of {} maps basis vector {c} to a vector of the wrong parity", l.name(g)));
                    break 'par;
                }
            }
        }
    }
    rep.record(ModuleRelation::Parity, par);

    let mut comm = None;
    'comm: for a in 0..n {
        for b in a + 1..n {
            let lhs = m.action(a).mul(m.action(b)).add(&m.action(b).mul(m.action(a)));
            if lhs != m.rho(l.bracket_basis(a, b)) {
                comm = witness(vec![a, b], format!("ρ({0})ρ({1}) + ρ({1})ρ({0}) != ρ([{0},{1}])", l.name(a), l.name(b)));
                break 'comm;
            }
        }
    }
    rep.record(ModuleRelation::Commutator, comm);

    let odd = l
        .odd_indices()
        .find(|&y| m.action(y).mul(m.action(y)) != m.rho(&l.q(&l.basis_vector(y))))
        .and_then(|y| witness(vec![y], format!("ρ({0})^2 != ρ(q({0}))", l.name(y))));
    rep.record(ModuleRelation::OddSquare, odd);

    if m.mode() == ModuleMode::V {
        if !l.is_restricted() {
            return Err(Error::MissingRestrictedData);
        }
        let two = l
            .even_indices()
            .find(|&x| m.action(x).mul(m.action(x)) != m.rho(&l.two_map(&l.basis_vector(x)).expect("restricted")))
            .and_then(|x| witness(vec![x], format!("ρ({0})^2 != ρ({0}^[2])", l.name(x))));
        rep.record(ModuleRelation::TwoMap, two);
    } else {
        rep.record_vacuous(ModuleRelation::TwoMap);
    }
    Ok(rep)
}

fn require_valid(l: &LieSuperAlgebra, m: &SuperModule) -> Result<()> {
    let rep = validate_module(l, m)?;
    let first = rep.violations().next().map(|c| c.axiom);
    match first {
        None => Ok(()),
        Some(a) => Err(Error::MalformedInput(format!("module fails the {a} relation"))),
    }
}

/// `M ⊗ N` with `g` acting as `g ⊗ 1 + 1 ⊗ g`; basis `m_i ⊗ n_j` at index `i * dim N + j`.
pub fn module_tensor(l: &LieSuperAlgebra, m: &SuperModule, n: &SuperModule) -> Result<SuperModule> {
    m.check_compatible(n)?;
    if m.generators() != l.dim() {
        return Err(Error::IncompatibleInputs("module does not match the algebra".into()));
    }
    require_valid(l, m)?;
    require_valid(l, n)?;
    Ok(tensor_unchecked(m, n))
}

pub(crate) fn tensor_unchecked(m: &SuperModule, n: &SuperModule) -> SuperModule {
    let f = m.field;
    let (im, inn) = (Matrix::identity(f, m.dim()), Matrix::identity(f, n.dim()));
    let action = m.action.iter().zip(&n.action).map(|(a, b)| a.kron(&inn).add(&im.kron(b))).collect();
    let parities = m.parities.iter().flat_map(|&p| n.parities.iter().map(move |&q| p ^ q)).collect();
    let mode = if m.mode == ModuleMode::V && n.mode == ModuleMode::V { ModuleMode::V } else { ModuleMode::U };
    SuperModule { field: f, parities, action, mode }
}

/// Dual module: `g` acts by the transpose of its action (no signs in characteristic 2).
pub fn module_dual(l: &LieSuperAlgebra, m: &SuperModule) -> Result<SuperModule> {
    require_valid(l, m)?;
    Ok(dual_unchecked(m))
}

pub(crate) fn dual_unchecked(m: &SuperModule) -> SuperModule {
    SuperModule { action: m.action.iter().map(|a| a.transpose()).collect(), ..m.clone() }
}

/// Sum of the vectors `v_k` weighted by `coefs`.
pub(crate) fn combine(field: &Field, dim: usize, vs: &[Vec<Elem>], coefs: &[Elem]) -> Vec<Elem> {
    let mut out = vector::zero(dim);
    for (v, &c) in vs.iter().zip(coefs) {
        vector::axpy(field, &mut out, c, v);
    }
    out
}
