use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::points::{odd_nullcone, restricted_nullcone, PointSet};
use super::support::{first_difference, punctured_support, support_points_ul};
use crate::envelope::{build_vl, graded_kernel, resolve, ModuleMode, PbwAlgebra, SuperModule};
use crate::error::{malformed, Error, Result};
use crate::gf2la::{vector, Elem, Field, Matrix};
use crate::liesuper::{random::attach_random_two_map, LieSuperAlgebra};

/// A product of linear forms on L, each given by its coordinates on the basis.
/// The empty product is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormProduct {
    pub factors: Vec<Vec<Elem>>,
}

impl FormProduct {
    pub fn new(factors: Vec<Vec<Elem>>) -> Self {
        FormProduct { factors }
    }

    pub fn one() -> Self {
        FormProduct { factors: vec![] }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Plain evaluation at `z`; the Frobenius twist is not undone.
    pub fn evaluate(&self, field: &Field, z: &[Elem]) -> Elem {
        self.factors.iter().fold(1, |acc, form| field.mul(acc, vector::dot(field, form, z)))
    }

    fn check(&self, l: &LieSuperAlgebra, mode: ModuleMode) -> Result<()> {
        for form in &self.factors {
            if form.len() != l.dim() {
                return Err(malformed(format!("linear form has {} coordinates, expected {}", form.len(), l.dim())));
            }
            if let Some(&c) = form.iter().find(|&&c| !l.field().contains(c)) {
                return Err(malformed(format!("coefficient {c} is not in the field of the algebra")));
            }
            if vector::is_zero(form) {
                return Err(malformed("a linear form is zero"));
            }
            if mode == ModuleMode::U && form[..l.even_dim()].iter().any(|&c| c != 0) {
                return Err(malformed("forms must vanish on the even part for U(L)"));
            }
        }
        Ok(())
    }
}

/// Adjoins an even central `c` (index `even_dim`) with `c^[2] = 0` and adds
/// `λ_i^2 c` to the 2-map and `q` on each basis element. On any `z`, the new
/// `z^{2}` is the old one plus `λ(z)^2 c`.
pub fn central_extension(l: &LieSuperAlgebra, form: &[Elem]) -> Result<LieSuperAlgebra> {
    let (a, n) = (l.even_dim(), l.dim());
    let f = l.field();
    let idx = |i: usize| if i < a { i } else { i + 1 };
    let embed = |v: &[Elem], extra: Elem| {
        let mut out = vec![0; n + 1];
        for (i, &c) in v.iter().enumerate() {
            out[idx(i)] = c;
        }
        out[a] = extra;
        out
    };
    let mut e = LieSuperAlgebra::new(f, a + 1, l.odd_dim()).with_zero_two_map();
    for i in 0..n {
        for j in 0..n {
            for (k, &c) in l.bracket_basis(i, j).iter().enumerate() {
                e.set_bracket_entry(idx(i), idx(j), idx(k), c);
            }
        }
    }
    for i in 0..a {
        let base = l.two_map_basis(i).ok_or(Error::MissingRestrictedData)?;
        e.set_two_map(i, &embed(base, f.square(form[i])));
    }
    for j in 0..l.odd_dim() {
        e.set_q(j, &embed(l.q_basis(j), f.square(form[a + j])));
    }
    Ok(e)
}

/// Normalized bar 2-cocycle of a central extension: `f(a, b)` is the
/// coefficient of `c` in the product of the lifts of monomials `a, b`.
/// Returned as a `dim V(L) x dim V(L)` table indexed by masks.
pub fn extension_cocycle(l: &LieSuperAlgebra, ext: &PbwAlgebra) -> Vec<Elem> {
    let a = l.even_dim();
    let d = 1usize << l.dim();
    let lift = |m: usize| (m & ((1 << a) - 1)) | ((m >> a) << (a + 1));
    let c_mask = 1u32 << a;
    let mut table = vec![0; d * d];
    for x in 1..d {
        for y in 1..d {
            if let Some(&(_, c)) = ext.mul_basis(lift(x), lift(y)).iter().find(|(m, _)| *m == c_mask) {
                table[x * d + y] = c;
            }
        }
    }
    table
}

type BarChain = BTreeMap<Vec<u16>, Elem>;

/// A Carlson module together with the data used to build it.
#[derive(Clone, Debug)]
pub struct CarlsonModule {
    pub mode: ModuleMode,
    pub forms: FormProduct,
    /// Cohomological degree, twice the number of forms.
    pub degree: usize,
    /// The algebra whose enveloping algebra was used (a 2-map may have been attached).
    pub algebra: LieSuperAlgebra,
    pub omega_dim: usize,
    /// Whether the cocycle is a coboundary; then the module is all of `Ω^n k`.
    pub class_is_zero: bool,
    pub module: SuperModule,
}

/// Builds `L_ζ = ker(Ω^n k -> k)` for `ζ` the product of the classes of the
/// forms. In U mode the forms live on the odd part and the module is pulled
/// back from V(L) for a restricted structure on L.
pub fn carlson_module(l: &LieSuperAlgebra, forms: &FormProduct, mode: ModuleMode) -> Result<CarlsonModule> {
    forms.check(l, mode)?;
    let alg = if l.is_restricted() {
        l.clone()
    } else if mode == ModuleMode::U {
        attach_random_two_map(l, &mut ChaCha8Rng::seed_from_u64(0)).ok_or(Error::MissingRestrictedData)?
    } else {
        return Err(Error::MissingRestrictedData);
    };
    let f = alg.field();
    let v = build_vl(&alg)?;
    let dv = v.dim();
    let cocycles: Vec<Vec<Elem>> = forms
        .factors
        .iter()
        .map(|form| Ok(extension_cocycle(&alg, &build_vl(&central_extension(&alg, form)?)?)))
        .collect::<Result<_>>()?;
    let n = 2 * forms.degree();
    let k = SuperModule::trivial(&alg, ModuleMode::V);
    let res = resolve(&v, &k, n + 2)?;

    // chain map from the resolution to the normalized bar resolution
    let mut alpha: Vec<BarChain> =
        res.covers[0].generators.iter().map(|g| BarChain::from([(vec![], g[0])])).collect();
    for i in 1..=n {
        alpha = res.boundaries[i - 1]
            .iter()
            .map(|img| {
                let mut out = BarChain::new();
                for (l_idx, prev) in alpha.iter().enumerate() {
                    for u in 1..dv {
                        let c = img[l_idx * dv + u];
                        if c == 0 {
                            continue;
                        }
                        for (t, &coef) in prev {
                            let mut key = Vec::with_capacity(t.len() + 1);
                            key.push(u as u16);
                            key.extend_from_slice(t);
                            let e = out.entry(key).or_insert(0);
                            *e ^= f.mul(c, coef);
                        }
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            })
            .collect();
    }
    let g: Vec<Elem> = alpha
        .iter()
        .map(|chain| {
            chain.iter().fold(0, |acc, (t, &coef)| {
                let val = cocycles.iter().enumerate().fold(coef, |p, (i, table)| {
                    f.mul(p, table[t[2 * i] as usize * dv + t[2 * i + 1] as usize])
                });
                acc ^ val
            })
        })
        .collect();

    let augment = |img: &[Elem], rank: usize| (0..rank).map(|l| img[l * dv]).collect::<Vec<Elem>>();
    for img in &res.boundaries[n] {
        if vector::dot(&f, &augment(img, res.rank(n)), &g) != 0 {
            return Err(Error::NotACocycle);
        }
    }
    let class_is_zero = if n == 0 {
        vector::is_zero(&g)
    } else {
        let rows: Vec<Vec<Elem>> = res.boundaries[n - 1].iter().map(|img| augment(img, res.rank(n - 1))).collect();
        Matrix::from_rows(f, res.rank(n - 1), &rows).solve(&g).is_some()
    };

    let omega = if n == 0 { k } else { res.covers[n - 1].syzygy.clone() };
    let proj = &res.covers[n].projection;
    let mut g_lin = vec![0; proj.cols()];
    for (l_idx, &c) in g.iter().enumerate() {
        g_lin[l_idx * dv] = c;
    }
    let r = proj.transpose().solve(&g_lin).ok_or(Error::NotACocycle)?;
    if r.iter().zip(omega.parities()).any(|(&c, &p)| c != 0 && p == 1) {
        return Err(malformed("the induced map on the syzygy is not even"));
    }
    let kernel = graded_kernel(&Matrix::from_rows(f, omega.dim(), &[r]), omega.parities());
    let module = omega.submodule(&kernel)?.with_mode(mode);
    Ok(CarlsonModule {
        mode,
        forms: forms.clone(),
        degree: n,
        algebra: alg,
        omega_dim: omega.dim(),
        class_is_zero,
        module,
    })
}

/// Pointwise comparison of the punctured support of a Carlson module with the
/// punctured zero locus of its forms on the relevant nullcone.
#[derive(Clone, Debug)]
pub struct ZeroLocusCheck {
    pub e: u32,
    pub support: PointSet,
    pub zero_locus: PointSet,
    pub mismatch: Option<Vec<Elem>>,
}

impl ZeroLocusCheck {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn check_zero_locus(cm: &CarlsonModule, e: u32) -> Result<ZeroLocusCheck> {
    let l = &cm.algebra;
    let (cone, support) = match cm.mode {
        ModuleMode::V => (restricted_nullcone(l, e)?, punctured_support(l, &cm.module, e)?),
        ModuleMode::U => {
            let s = support_points_ul(l, &cm.module, e)?;
            (odd_nullcone(l, e)?, s.filter(|z| !vector::is_zero(z)))
        }
    };
    let field = cone.field;
    let zero_locus = cone.filter(|z| !vector::is_zero(z) && cm.forms.evaluate(&field, z) == 0);
    let mismatch = first_difference(&support, &zero_locus);
    Ok(ZeroLocusCheck { e, support, zero_locus, mismatch })
}
