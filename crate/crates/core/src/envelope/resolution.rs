use super::module::{homogeneous_parity, validate_module, ModuleMode, SuperModule};
use super::vl::PbwAlgebra;
use crate::error::{malformed, Error, Result};
use crate::gf2la::{vector, Elem, Matrix, Subspace};

/// Largest cohomological degree for Ext over V(L).
pub const MAX_EXT_DEGREE: usize = 12;

/// A surjection from a free V(L)-module onto `M` and its kernel.
#[derive(Clone, Debug)]
pub struct FreeCover {
    /// Images in `M` of the free generators (homogeneous vectors).
    pub generators: Vec<Vec<Elem>>,
    /// The free module; copy `k` of V(L) is shifted by the parity of generator `k`.
    pub cover: SuperModule,
    /// `dim M x dim cover` matrix of `a ⊗ g_k ↦ a · m_k`; column `k * 2^n + a`.
    pub projection: Matrix,
    /// Kernel of the projection inside the cover, as an echelon subspace.
    pub kernel: Subspace,
    /// The kernel as a module, in the echelon basis of `kernel`.
    pub syzygy: SuperModule,
}

fn require_v_module(v: &PbwAlgebra, m: &SuperModule) -> Result<()> {
    if m.mode() != ModuleMode::V {
        return Err(Error::IncompatibleInputs("a V(L)-module is required".into()));
    }
    let rep = validate_module(v.source(), m)?;
    let first = rep.violations().next().map(|c| c.axiom);
    match first {
        None => Ok(()),
        Some(a) => Err(Error::MalformedInput(format!("module fails the {a} relation"))),
    }
}

/// Cover with the given homogeneous generators; they need not generate, but
/// then the projection is not onto.
pub fn cover_from_generators(v: &PbwAlgebra, m: &SuperModule, generators: Vec<Vec<Elem>>) -> Result<FreeCover> {
    let f = m.field();
    let dv = v.dim();
    let monos = m.monomial_actions();
    let mut shifts = Vec::with_capacity(generators.len());
    for g in &generators {
        shifts.push(homogeneous_parity(m.parities(), g).ok_or_else(|| malformed("cover generator is not homogeneous"))?);
    }
    let cover = SuperModule::free(v, &shifts);
    let mut projection = Matrix::zeros(f, m.dim(), generators.len() * dv);
    for (k, g) in generators.iter().enumerate() {
        for (a, mono) in monos.iter().enumerate() {
            for (r, &c) in mono.mul_vec(g).iter().enumerate() {
                projection.set(r, k * dv + a, c);
            }
        }
    }
    let kernel = graded_kernel(&projection, cover.parities());
    let syzygy = cover.submodule(&kernel)?;
    Ok(FreeCover { generators, cover, projection, kernel, syzygy })
}

/// Kernel of an even map, spanned by homogeneous vectors.
pub fn graded_kernel(map: &Matrix, parities: &[u8]) -> Subspace {
    let f = map.field();
    let mut sub = Subspace::zero(f, map.cols());
    for p in 0..2u8 {
        let cols: Vec<usize> = (0..map.cols()).filter(|&c| parities[c] == p).collect();
        let restricted = Matrix::from_columns(f, map.rows(), &cols.iter().map(|&c| map.column(c)).collect::<Vec<_>>());
        for k in restricted.kernel() {
            let mut v = vec![0; map.cols()];
            for (&c, &x) in cols.iter().zip(&k) {
                v[c] = x;
            }
            sub.insert(&v);
        }
    }
    sub
}

/// Cover with one generator per basis vector of `M`.
pub fn free_cover(v: &PbwAlgebra, m: &SuperModule) -> Result<FreeCover> {
    require_v_module(v, m)?;
    let gens = (0..m.dim()).map(|k| vector::unit(m.dim(), k)).collect();
    cover_from_generators(v, m, gens)
}

/// Cover by basis vectors of `M` chosen left to right, skipping those already
/// in the submodule generated so far.
pub fn greedy_cover(v: &PbwAlgebra, m: &SuperModule) -> Result<FreeCover> {
    require_v_module(v, m)?;
    cover_from_generators(v, m, greedy_generators(m))
}

pub fn greedy_generators(m: &SuperModule) -> Vec<Vec<Elem>> {
    let mut sub = Subspace::zero(m.field(), m.dim());
    let mut gens = Vec::new();
    for k in 0..m.dim() {
        let e = vector::unit(m.dim(), k);
        if sub.contains(&e) {
            continue;
        }
        sub.insert(&e);
        m.close_under_action(&mut sub, vec![e.clone()]);
        gens.push(e);
    }
    gens
}

/// Constraint matrix on `F` (`dst x src`, row-major unknowns) for
/// `ρ_dst(g) F = F ρ_src(g)` over all generators `g`.
pub fn equivariance_system(dst: &SuperModule, src: &SuperModule) -> Matrix {
    let (dn, sn) = (dst.dim(), src.dim());
    let f = dst.field();
    let g = dst.generators();
    let mut sys = Matrix::zeros(f, g * dn * sn, dn * sn);
    for gi in 0..g {
        let a = dst.action(gi);
        let b = src.action(gi);
        for r in 0..dn {
            for c in 0..sn {
                let row = (gi * dn + r) * sn + c;
                for s in 0..dn {
                    let x = a.get(r, s);
                    if x != 0 {
                        sys.add_to(row, s * sn + c, x);
                    }
                }
                for s in 0..sn {
                    let x = b.get(s, c);
                    if x != 0 {
                        sys.add_to(row, r * sn + s, x);
                    }
                }
            }
        }
    }
    sys
}

/// Basis of the module homomorphisms `M -> N` (ungraded).
pub fn hom_space(m: &SuperModule, n: &SuperModule) -> Result<Vec<Matrix>> {
    if m.field() != n.field() || m.generators() != n.generators() {
        return Err(Error::IncompatibleInputs("modules over different algebras".into()));
    }
    let sys = equivariance_system(n, m);
    Ok(sys
        .kernel()
        .into_iter()
        .map(|v| {
            let rows: Vec<Vec<Elem>> = v.chunks(m.dim().max(1)).map(|c| c.to_vec()).collect();
            if m.dim() == 0 {
                Matrix::zeros(m.field(), n.dim(), 0)
            } else {
                Matrix::from_rows(m.field(), m.dim(), &rows)
            }
        })
        .collect())
}

/// Whether the greedy cover `P -> M` admits a module section.
pub fn is_projective_vl(v: &PbwAlgebra, m: &SuperModule) -> Result<bool> {
    let cov = greedy_cover(v, m)?;
    let (pn, mn) = (cov.cover.dim(), m.dim());
    if mn == 0 {
        return Ok(true);
    }
    let f = m.field();
    let eq = equivariance_system(&cov.cover, m);
    let mut sys = Matrix::zeros(f, eq.rows() + mn * mn, pn * mn);
    sys.set_block(0, 0, &eq);
    // (Π S)[r][c] = Σ_s Π[r][s] S[s][c] = δ_rc
    let mut rhs = vec![0; eq.rows() + mn * mn];
    for r in 0..mn {
        for c in 0..mn {
            let row = eq.rows() + r * mn + c;
            for s in 0..pn {
                let x = cov.projection.get(r, s);
                if x != 0 {
                    sys.set(row, s * mn + c, x);
                }
            }
            if r == c {
                rhs[row] = 1;
            }
        }
    }
    Ok(sys.solve(&rhs).is_some())
}

/// A free resolution `P_n -> ... -> P_0 -> M` built from greedy covers.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `covers[i]` covers the `i`-th syzygy (`covers[0]` covers `M`).
    pub covers: Vec<FreeCover>,
    /// `boundaries[i]` lists, for each generator of `P_{i+1}`, its image in `P_i`.
    pub boundaries: Vec<Vec<Vec<Elem>>>,
}

impl Resolution {
    /// Number of free generators of `P_i`.
    pub fn rank(&self, i: usize) -> usize {
        self.covers[i].generators.len()
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }
}

/// Resolves `M` through `P_len-1`.
pub fn resolve(v: &PbwAlgebra, m: &SuperModule, len: usize) -> Result<Resolution> {
    require_v_module(v, m)?;
    let mut covers: Vec<FreeCover> = Vec::with_capacity(len);
    let mut boundaries = Vec::with_capacity(len.saturating_sub(1));
    let mut current = m.clone();
    for i in 0..len {
        let cov = cover_from_generators(v, &current, greedy_generators(&current))?;
        if i > 0 {
            let prev = &covers[i - 1];
            let images = cov
                .generators
                .iter()
                .map(|g| super::module::combine(&m.field(), prev.cover.dim(), prev.kernel.basis(), g))
                .collect();
            boundaries.push(images);
        }
        current = cov.syzygy.clone();
        covers.push(cov);
    }
    Ok(Resolution { covers, boundaries })
}

/// Coboundary `Hom(P_i, N) -> Hom(P_{i+1}, N)`, both identified with `N^{rank}`.
pub fn hom_coboundary(v: &PbwAlgebra, res: &Resolution, i: usize, n: &SuperModule, monos: &[Matrix]) -> Matrix {
    let dv = v.dim();
    let dn = n.dim();
    let (src, dst) = (res.rank(i), res.rank(i + 1));
    let mut delta = Matrix::zeros(n.field(), dst * dn, src * dn);
    for (k, image) in res.boundaries[i].iter().enumerate() {
        for l in 0..src {
            let a = &image[l * dv..(l + 1) * dv];
            if vector::is_zero(a) {
                continue;
            }
            delta.set_block(k * dn, l * dn, &n.rho_v(a, monos));
        }
    }
    delta
}

/// `dim Ext^i_{V(L)}(M, N)` for `0 <= i <= nmax`.
pub fn ext_dims_vl(v: &PbwAlgebra, m: &SuperModule, n: &SuperModule, nmax: usize) -> Result<Vec<usize>> {
    if nmax > MAX_EXT_DEGREE {
        return Err(Error::LimitExceeded { what: "Ext degree".into(), limit: MAX_EXT_DEGREE as u64 });
    }
    require_v_module(v, n)?;
    let res = resolve(v, m, nmax + 2)?;
    let monos = n.monomial_actions();
    let ranks: Vec<usize> = (0..=nmax).map(|i| hom_coboundary(v, &res, i, n, &monos).rank()).collect();
    Ok((0..=nmax)
        .map(|i| res.rank(i) * n.dim() - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect())
}
