use std::collections::BTreeMap;

use super::complex::{KoszulComplex, YBar};
use crate::envelope::{validate_module, ModuleMode, SuperModule};
use crate::error::{Error, Result};
use crate::gf2la::{vector, Elem, Matrix, Subspace};
use crate::liesuper::LieSuperAlgebra;

/// Largest cohomological degree handled by the Koszul engine.
pub const MAX_KOSZUL_DEGREE: usize = 16;

/// Polynomial in the odd dual coordinates: exponent vector over the odd basis -> coefficient.
pub type OddPoly = BTreeMap<Vec<u16>, Elem>;

/// Matrix of `C^n -> C^{n+1}` on `Hom_k(Ȳ_n ⊗ M, N)`.
///
/// A cochain is stored as one `dim N x dim M` block per basis element of
/// `Ȳ_n`, row-major, blocks in basis order.
pub fn cochain_differential(cx: &KoszulComplex, m: &SuperModule, n_mod: &SuperModule, n: usize) -> Matrix {
    let f = m.field();
    let (dm, dn) = (m.dim(), n_mod.dim());
    let block = dm * dn;
    let src = cx.basis(n).len();
    let dst = cx.basis(n + 1).len();
    let mut out = Matrix::zeros(f, dst * block, src * block);
    for k in 0..dst {
        for &(c, g, t) in cx.terms(n + 1, k) {
            // contribution to block k from block t: c·F, or c·(ρ_N(z) F + F ρ_M(z))
            for r in 0..dn {
                for col in 0..dm {
                    let row = k * block + r * dm + col;
                    match g {
                        None => out.add_to(row, t * block + r * dm + col, c),
                        Some(z) => {
                            let (an, am) = (n_mod.action(z), m.action(z));
                            for s in 0..dn {
                                let x = an.get(r, s);
                                if x != 0 {
                                    out.add_to(row, t * block + s * dm + col, f.mul(c, x));
                                }
                            }
                            for s in 0..dm {
                                let x = am.get(s, col);
                                if x != 0 {
                                    out.add_to(row, t * block + r * dm + s, f.mul(c, x));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn require_u_module(l: &LieSuperAlgebra, m: &SuperModule) -> Result<()> {
    let m = m.clone().with_mode(ModuleMode::U);
    let rep = validate_module(l, &m)?;
    let first = rep.violations().next().map(|c| c.axiom);
    match first {
        None => Ok(()),
        Some(a) => Err(Error::MalformedInput(format!("module fails the {a} relation"))),
    }
}

/// `dim Ext^i_{U(L)}(M, N)` for `0 <= i <= nmax`.
pub fn cohomology_dims_u(l: &LieSuperAlgebra, m: &SuperModule, n: &SuperModule, nmax: usize) -> Result<Vec<usize>> {
    if nmax > MAX_KOSZUL_DEGREE {
        return Err(Error::LimitExceeded { what: "Koszul cohomology degree".into(), limit: MAX_KOSZUL_DEGREE as u64 });
    }
    require_u_module(l, m)?;
    require_u_module(l, n)?;
    let cx = KoszulComplex::new(l, nmax + 1);
    let ranks: Vec<usize> = (0..=nmax).map(|i| cochain_differential(&cx, m, n, i).rank()).collect();
    let block = m.dim() * n.dim();
    Ok((0..=nmax).map(|i| cx.basis(i).len() * block - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 }).collect())
}

/// Cochains with trivial coefficients on a fixed algebra, up to a degree.
#[derive(Clone, Debug)]
pub struct TrivialCochains {
    cx: KoszulComplex,
    deltas: Vec<Matrix>,
}

impl TrivialCochains {
    pub fn new(l: &LieSuperAlgebra, max_degree: usize) -> Self {
        let cx = KoszulComplex::new(l, max_degree + 1);
        let k = SuperModule::trivial(l, ModuleMode::U);
        let deltas = (0..=max_degree).map(|n| cochain_differential(&cx, &k, &k, n)).collect();
        TrivialCochains { cx, deltas }
    }

    pub fn complex(&self) -> &KoszulComplex {
        &self.cx
    }

    pub fn max_degree(&self) -> usize {
        self.deltas.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.cx.basis(n).len()
    }

    pub fn coboundary(&self, n: usize, c: &[Elem]) -> Vec<Elem> {
        self.deltas[n].mul_vec(c)
    }

    pub fn is_cocycle(&self, n: usize, c: &[Elem]) -> bool {
        vector::is_zero(&self.coboundary(n, c))
    }

    /// Basis of the cocycles in degree `n`.
    pub fn cocycles(&self, n: usize) -> Vec<Vec<Elem>> {
        self.deltas[n].kernel()
    }

    /// Span of the coboundaries in degree `n`.
    pub fn coboundaries(&self, n: usize) -> Subspace {
        let f = self.cx.source().field();
        let mut s = Subspace::zero(f, self.dim(n));
        if n > 0 {
            let d = &self.deltas[n - 1];
            for c in 0..d.cols() {
                s.insert(&d.column(c));
            }
        }
        s
    }

    pub fn is_coboundary(&self, n: usize, c: &[Elem]) -> bool {
        self.coboundaries(n).contains(c)
    }

    /// Product in `Λ(L0*) ⊗ S(L1*)` on the dual basis.
    pub fn product(&self, m: usize, a: &[Elem], n: usize, b: &[Elem]) -> Vec<Elem> {
        let f = self.cx.source().field();
        let mut out = vec![0; self.dim(m + n)];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let ya = &self.cx.basis(m)[i];
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let yb = &self.cx.basis(n)[j];
                if ya.even.iter().any(|e| yb.even.contains(e)) {
                    continue;
                }
                let mut even: Vec<usize> = ya.even.iter().chain(&yb.even).copied().collect();
                even.sort_unstable();
                let odd = ya.odd.iter().zip(&yb.odd).map(|(p, q)| p + q).collect();
                let k = self.cx.index_of(m + n, &YBar { even, odd }).expect("degree matches");
                out[k] ^= f.mul(x, y);
            }
        }
        out
    }

    /// Cochain `Σ c · (∅, 2a)^*` for `f = Σ c ξ^a`, homogeneous of degree `r`.
    pub fn phi_cochain(&self, f: &OddPoly) -> Result<(usize, Vec<Elem>)> {
        let degrees: Vec<usize> = f.keys().map(|a| a.iter().map(|&e| e as usize).sum()).collect();
        let l = self.cx.source();
        if f.keys().any(|a| a.len() != l.odd_dim()) {
            return Err(Error::MalformedInput("polynomial has the wrong number of variables".into()));
        }
        let r = degrees.first().copied().unwrap_or(0);
        if degrees.iter().any(|&d| d != r) {
            return Err(Error::MalformedInput("polynomial is not homogeneous".into()));
        }
        if 2 * r > self.max_degree() {
            return Err(Error::LimitExceeded { what: "cochain degree".into(), limit: self.max_degree() as u64 });
        }
        let mut out = vec![0; self.dim(2 * r)];
        for (a, &c) in f {
            let doubled = YBar { even: vec![], odd: a.iter().map(|&e| 2 * e).collect() };
            out[self.cx.index_of(2 * r, &doubled).expect("in basis")] ^= c;
        }
        Ok((2 * r, out))
    }
}

/// Cup product of two cocycles with trivial coefficients.
pub fn cup_product(cochains: &TrivialCochains, m: usize, a: &[Elem], n: usize, b: &[Elem]) -> Result<Vec<Elem>> {
    if m + n > cochains.max_degree() {
        return Err(Error::LimitExceeded { what: "cochain degree".into(), limit: cochains.max_degree() as u64 });
    }
    if a.len() != cochains.dim(m) || b.len() != cochains.dim(n) {
        return Err(Error::MalformedInput("cochain has the wrong length".into()));
    }
    if !cochains.is_cocycle(m, a) || !cochains.is_cocycle(n, b) {
        return Err(Error::NotACocycle);
    }
    Ok(cochains.product(m, a, n, b))
}

/// Cohomology class of `φ(f)`: its degree, cocycle representative, and
/// whether the class vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiClass {
    pub degree: usize,
    pub cocycle: Vec<Elem>,
    pub is_zero: bool,
}

pub fn phi_map(cochains: &TrivialCochains, f: &OddPoly) -> Result<PhiClass> {
    let (degree, cocycle) = cochains.phi_cochain(f)?;
    if !cochains.is_cocycle(degree, &cocycle) {
        return Err(Error::NotACocycle);
    }
    let is_zero = cochains.is_coboundary(degree, &cocycle);
    Ok(PhiClass { degree, cocycle, is_zero })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    Pass,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    /// `dim H^n / (ideal generated by the image of φ)_n` for `n <= D`.
    pub window_dims: Vec<usize>,
    pub cohomology_dims: Vec<usize>,
    pub verdict: ProbeVerdict,
}

/// Quotients of `H^n` by the ideal generated by `φ` of the odd coordinates.
pub fn finite_generation_probe(l: &LieSuperAlgebra, max_degree: usize) -> Result<ProbeReport> {
    if max_degree > MAX_KOSZUL_DEGREE {
        return Err(Error::LimitExceeded { what: "probe degree".into(), limit: MAX_KOSZUL_DEGREE as u64 });
    }
    let co = TrivialCochains::new(l, max_degree);
    let gens: Vec<Vec<Elem>> = (0..l.odd_dim())
        .map(|j| {
            let mut a = vec![0u16; l.odd_dim()];
            a[j] = 1;
            let mut p = OddPoly::new();
            p.insert(a, 1);
            phi_map(&co, &p).map(|c| c.cocycle)
        })
        .collect::<Result<_>>()?;
    let mut window = Vec::with_capacity(max_degree + 1);
    let mut hdims = Vec::with_capacity(max_degree + 1);
    let cocycles: Vec<Vec<Vec<Elem>>> = (0..=max_degree).map(|n| co.cocycles(n)).collect();
    for n in 0..=max_degree {
        let z = &cocycles[n];
        let mut sub = co.coboundaries(n);
        let b = sub.dim();
        hdims.push(z.len() - b);
        if n >= 2 {
            for g in &gens {
                for c in &cocycles[n - 2] {
                    sub.insert(&co.product(2, g, n - 2, c));
                }
            }
        }
        window.push(z.len() - sub.dim());
    }
    let top = max_degree.div_ceil(2);
    let verdict = if window[top..].iter().all(|&d| d == 0) { ProbeVerdict::Pass } else { ProbeVerdict::Inconclusive };
    Ok(ProbeReport { window_dims: window, cohomology_dims: hdims, verdict })
}

/// Restriction to the subalgebra spanned by a set of odd basis elements on
/// which bracket and `q` vanish.
#[derive(Clone, Debug)]
pub struct OddAbelianRestriction {
    pub odd_subset: Vec<usize>,
    pub sub: LieSuperAlgebra,
}

impl OddAbelianRestriction {
    /// `odd_subset` holds local odd indices.
    pub fn new(l: &LieSuperAlgebra, odd_subset: Vec<usize>) -> Result<Self> {
        let e = l.even_dim();
        for &a in &odd_subset {
            if a >= l.odd_dim() {
                return Err(Error::MalformedInput("odd index out of range".into()));
            }
            if !vector::is_zero(l.q_basis(a)) {
                return Err(Error::IncompatibleInputs("q does not vanish on the subset".into()));
            }
            for &b in &odd_subset {
                if !vector::is_zero(l.bracket_basis(e + a, e + b)) {
                    return Err(Error::IncompatibleInputs("subset does not span an abelian subalgebra".into()));
                }
            }
        }
        let names = odd_subset.iter().map(|&a| l.name(e + a).to_string()).collect();
        let sub = LieSuperAlgebra::new(l.field(), 0, odd_subset.len()).with_names(names)?;
        Ok(OddAbelianRestriction { odd_subset, sub })
    }

    fn embed(&self, a: &[u16], total: usize) -> Vec<u16> {
        let mut v = vec![0; total];
        for (k, &j) in self.odd_subset.iter().enumerate() {
            v[j] = a[k];
        }
        v
    }

    /// Restriction of cochains from L to the subalgebra in degree `n`.
    pub fn restrict_cochain(&self, big: &TrivialCochains, small: &TrivialCochains, n: usize, c: &[Elem]) -> Vec<Elem> {
        let total = big.complex().source().odd_dim();
        small
            .complex()
            .basis(n)
            .iter()
            .map(|y| {
                let k = big.complex().index_of(n, &YBar { even: vec![], odd: self.embed(&y.odd, total) }).expect("in basis");
                c[k]
            })
            .collect()
    }

    /// Sets the odd coordinates outside the subset to zero.
    pub fn restrict_poly(&self, f: &OddPoly) -> OddPoly {
        let mut out = OddPoly::new();
        for (a, &c) in f {
            let outside = a.iter().enumerate().any(|(j, &e)| e > 0 && !self.odd_subset.contains(&j));
            if !outside {
                out.insert(self.odd_subset.iter().map(|&j| a[j]).collect(), c);
            }
        }
        out
    }
}

/// Checks that restriction commutes with the coboundary and with `φ` in degrees up to `max_degree`.
pub fn phi_naturality(l: &LieSuperAlgebra, odd_subset: Vec<usize>, polys: &[OddPoly], max_degree: usize) -> Result<bool> {
    let res = OddAbelianRestriction::new(l, odd_subset)?;
    let big = TrivialCochains::new(l, max_degree);
    let small = TrivialCochains::new(&res.sub, max_degree);
    for n in 0..max_degree {
        for k in 0..big.dim(n) {
            let c = vector::unit(big.dim(n), k);
            let lhs = res.restrict_cochain(&big, &small, n + 1, &big.coboundary(n, &c));
            let rhs = small.coboundary(n, &res.restrict_cochain(&big, &small, n, &c));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    for f in polys {
        let (deg, c) = big.phi_cochain(f)?;
        let restricted = res.restrict_cochain(&big, &small, deg, &c);
        let g = res.restrict_poly(f);
        let expected = if g.is_empty() { vec![0; small.dim(deg)] } else { small.phi_cochain(&g)?.1 };
        if restricted != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
