use rayon::prelude::*;

use super::points::{odd_nullcone, point_field, restricted_nullcone, PointSet};
use crate::envelope::{
    build_vl, free_cover, is_projective_vl, module_dual, module_tensor, validate_module, ModuleMode, SuperModule,
};
use crate::error::{Error, Result};
use crate::gf2la::{vector, Elem};
use crate::liesuper::LieSuperAlgebra;

/// Largest degree tried when searching for a rational point of a support.
pub const MAX_DETECTION_DEGREE: u32 = 4;

/// Whether `M` is free over `k[z]/(z^2)`, given that `ρ(z)` squares to zero.
pub fn is_free_at(m: &SuperModule, z: &[Elem]) -> bool {
    m.dim() % 2 == 0 && 2 * m.rho(z).rank() == m.dim()
}

fn check_module(l: &LieSuperAlgebra, m: &SuperModule, mode: ModuleMode) -> Result<()> {
    if m.generators() != l.dim() || m.field() != l.field() && !m.field().is_prime_field() {
        return Err(Error::IncompatibleInputs("module does not match the algebra".into()));
    }
    if mode == ModuleMode::V && m.mode() != ModuleMode::V {
        return Err(Error::IncompatibleInputs("a V(L)-module is required".into()));
    }
    Ok(())
}

fn non_free_points(cone: PointSet, m: &SuperModule) -> Result<PointSet> {
    let me = m.extend_to(cone.field)?;
    Ok(cone.filter(|z| vector::is_zero(z) || !is_free_at(&me, z)))
}

/// `{0}` together with the points of the restricted nullcone over GF(2^e) at
/// which `M` is not free.
pub fn support_points_vl(l: &LieSuperAlgebra, m: &SuperModule, e: u32) -> Result<PointSet> {
    check_module(l, m, ModuleMode::V)?;
    non_free_points(restricted_nullcone(l, e)?, m)
}

/// The same over the odd nullcone, for U(L)-modules.
pub fn support_points_ul(l: &LieSuperAlgebra, m: &SuperModule, e: u32) -> Result<PointSet> {
    check_module(l, m, ModuleMode::U)?;
    non_free_points(odd_nullcone(l, e)?, m)
}

pub fn support_points(l: &LieSuperAlgebra, m: &SuperModule, e: u32, mode: ModuleMode) -> Result<PointSet> {
    match mode {
        ModuleMode::V => support_points_vl(l, m, e),
        ModuleMode::U => support_points_ul(l, m, e),
    }
}

/// Outcome of comparing the support of `M ⊗ N` with the intersection of supports.
#[derive(Clone, Debug)]
pub struct TensorReport {
    pub mode: ModuleMode,
    pub e: u32,
    pub tensor_support: PointSet,
    pub intersection: PointSet,
    /// A point lying in exactly one of the two sets.
    pub counterexample: Option<Vec<Elem>>,
}

impl TensorReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// First point in the symmetric difference of two sets.
pub fn first_difference(a: &PointSet, b: &PointSet) -> Option<Vec<Elem>> {
    let only_a = a.points.iter().find(|z| !b.contains(z));
    only_a.or_else(|| b.points.iter().find(|z| !a.contains(z))).cloned()
}

pub fn tensor_property_check(
    l: &LieSuperAlgebra,
    m: &SuperModule,
    n: &SuperModule,
    e: u32,
    mode: ModuleMode,
) -> Result<TensorReport> {
    let (m, n) = (m.clone().with_mode(mode), n.clone().with_mode(mode));
    let mn = module_tensor(l, &m, &n)?;
    let tensor_support = support_points(l, &mn, e, mode)?;
    let intersection = support_points(l, &m, e, mode)?.intersection(&support_points(l, &n, e, mode)?);
    let counterexample = first_difference(&tensor_support, &intersection);
    Ok(TensorReport { mode, e, tensor_support, intersection, counterexample })
}

/// Point-level laws checked by [`support_datum_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DatumAxiom {
    /// The support of a direct sum is the union of the supports.
    DirectSum,
    /// Syzygies have the same support.
    Syzygy,
    /// In a short exact sequence each term lies in the union of the other two.
    ShortExact,
    /// Duals have the same support.
    Dual,
    /// Empty support exactly for projective modules.
    Detection,
}

impl DatumAxiom {
    pub const ALL: [DatumAxiom; 5] =
        [DatumAxiom::DirectSum, DatumAxiom::Syzygy, DatumAxiom::ShortExact, DatumAxiom::Dual, DatumAxiom::Detection];

    pub fn label(self) -> &'static str {
        match self {
            DatumAxiom::DirectSum => "direct-sum",
            DatumAxiom::Syzygy => "syzygy",
            DatumAxiom::ShortExact => "short-exact",
            DatumAxiom::Dual => "dual",
            DatumAxiom::Detection => "detection",
        }
    }
}

impl std::fmt::Display for DatumAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumFailure {
    pub axiom: DatumAxiom,
    /// Indices of the sample modules involved.
    pub modules: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct DatumReport {
    pub e: u32,
    /// Number of instances checked per law, in the order of [`DatumAxiom::ALL`].
    pub checked: [usize; 5],
    pub failures: Vec<DatumFailure>,
}

impl DatumReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn holds_for(&self, axiom: DatumAxiom) -> bool {
        self.failures.iter().all(|f| f.axiom != axiom)
    }
}

/// Support without the origin.
pub fn punctured_support(l: &LieSuperAlgebra, m: &SuperModule, e: u32) -> Result<PointSet> {
    let s = support_points_vl(l, m, e)?;
    Ok(s.filter(|z| !vector::is_zero(z)))
}

fn differ(a: &PointSet, b: &PointSet) -> Option<String> {
    first_difference(a, b).map(|z| format!("point {z:?} lies in only one support"))
}

/// Checks the point-level support laws on every sample module and pair of samples.
pub fn support_datum_suite(l: &LieSuperAlgebra, samples: &[SuperModule], e: u32) -> Result<DatumReport> {
    let v = build_vl(l)?;
    for m in samples {
        check_module(l, m, ModuleMode::V)?;
        if validate_module(l, m)?.violations().next().is_some() {
            return Err(Error::MalformedInput("sample module is not a valid V(L)-module".into()));
        }
    }
    let field = point_field(l, e)?;
    let supports: Vec<PointSet> = samples.iter().map(|m| punctured_support(l, m, e)).collect::<Result<_>>()?;
    let mut checked = [0usize; 5];
    let mut failures = Vec::new();
    let mut fail = |axiom, modules: Vec<usize>, detail: Option<String>| {
        if let Some(detail) = detail {
            failures.push(DatumFailure { axiom, modules, detail });
        }
    };

    for i in 0..samples.len() {
        for j in i..samples.len() {
            let sum = samples[i].direct_sum(&samples[j])?;
            checked[0] += 1;
            fail(DatumAxiom::DirectSum, vec![i, j], differ(&punctured_support(l, &sum, e)?, &supports[i].union(&supports[j])));
        }
    }

    for (i, m) in samples.iter().enumerate() {
        let cover = free_cover(&v, m)?;
        let omega = &cover.syzygy;
        let s_omega = punctured_support(l, omega, e)?;
        checked[1] += 1;
        fail(DatumAxiom::Syzygy, vec![i], differ(&s_omega, &supports[i]));

        // 0 -> ΩM -> P -> M -> 0 and 0 -> N -> M -> M/N -> 0 for a cyclic N
        let mut sequences = vec![(s_omega, punctured_support(l, &cover.cover, e)?, supports[i].clone())];
        if m.dim() > 0 {
            let sub = m.generated_subspace(&[vector::unit(m.dim(), 0)]);
            let s_sub = punctured_support(l, &m.submodule(&sub)?, e)?;
            let s_quot = punctured_support(l, &m.quotient(&sub)?, e)?;
            sequences.push((s_sub, supports[i].clone(), s_quot));
        }
        for (a, b, c) in &sequences {
            checked[2] += 1;
            let rotations = [(a, b.union(c)), (b, a.union(c)), (c, a.union(b))];
            let bad = rotations.iter().find_map(|(x, rest)| x.points.iter().find(|z| !rest.contains(z)));
            fail(DatumAxiom::ShortExact, vec![i], bad.map(|z| format!("point {z:?} is in one term only")));
        }

        let dual = module_dual(l, m)?;
        checked[3] += 1;
        fail(DatumAxiom::Dual, vec![i], differ(&punctured_support(l, &dual, e)?, &supports[i]));

        checked[4] += 1;
        let projective = is_projective_vl(&v, m)?;
        let detail = if projective {
            (!supports[i].is_empty()).then(|| "projective module with a non-free point".to_string())
        } else {
            match detect_non_free_point(l, m, field.degree())? {
                Some(_) => None,
                None => Some(format!("non-projective module free at every point up to degree {MAX_DETECTION_DEGREE}")),
            }
        };
        fail(DatumAxiom::Detection, vec![i], detail);
    }
    Ok(DatumReport { e, checked, failures })
}

/// Searches GF(2^e), GF(2^(e+1)), ... up to [`MAX_DETECTION_DEGREE`] for a
/// nonzero nullcone point at which `M` is not free. Stops quietly at the
/// enumeration cap.
pub fn detect_non_free_point(l: &LieSuperAlgebra, m: &SuperModule, from: u32) -> Result<Option<(u32, Vec<Elem>)>> {
    let fields: Vec<u32> = if l.field().is_prime_field() {
        (from..=MAX_DETECTION_DEGREE.max(from)).collect()
    } else {
        vec![l.field().degree()]
    };
    for e in fields {
        match punctured_support(l, m, e) {
            Ok(s) => {
                if let Some(z) = s.points.first() {
                    return Ok(Some((e, z.clone())));
                }
            }
            Err(Error::LimitExceeded { .. }) => break,
            Err(err) => return Err(err),
        }
    }
    Ok(None)
}

/// Verdict of the finite projective dimension test over U(L).
#[derive(Clone, Debug)]
pub struct ProjdimReport {
    pub e: u32,
    pub finite: bool,
    pub support: PointSet,
}

/// True iff the U(L)-support over GF(2^e) is `{0}`. Only rational points over
/// GF(2^e) are searched.
pub fn finite_projdim_ul(l: &LieSuperAlgebra, m: &SuperModule, e: u32) -> Result<ProjdimReport> {
    let m = m.clone().with_mode(ModuleMode::U);
    let support = support_points_ul(l, &m, e)?;
    Ok(ProjdimReport { e, finite: support.is_trivial(), support })
}

/// Supports of many modules at once, in parallel.
pub fn supports_vl(l: &LieSuperAlgebra, modules: &[SuperModule], e: u32) -> Result<Vec<PointSet>> {
    modules.par_iter().map(|m| support_points_vl(l, m, e)).collect()
}
