use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2la::{vector, Elem, Field};
use crate::liesuper::LieSuperAlgebra;

/// Default bound on the number of enumerated points.
pub const DEFAULT_POINT_CAP: u64 = 1 << 24;

/// Rational points of a subset of L over GF(2^e), in lexicographic coordinate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub field: Field,
    pub even_dim: usize,
    pub points: Vec<Vec<Elem>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, z: &[Elem]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(z)).is_ok()
    }

    pub fn even_part<'a>(&self, z: &'a [Elem]) -> &'a [Elem] {
        &z[..self.even_dim]
    }

    pub fn odd_part<'a>(&self, z: &'a [Elem]) -> &'a [Elem] {
        &z[self.even_dim..]
    }

    /// Points other than zero.
    pub fn nonzero(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.points.iter().filter(|p| !vector::is_zero(p))
    }

    pub fn is_trivial(&self) -> bool {
        self.nonzero().next().is_none()
    }

    /// Whether `λ z` lies in the set for every member `z` and unit `λ`.
    pub fn is_scale_invariant(&self) -> bool {
        let f = self.field;
        self.points.iter().all(|z| (1..f.order()).all(|s| self.contains(&vector::scale(&f, s, z))))
    }

    fn from_unsorted(field: Field, even_dim: usize, mut points: Vec<Vec<Elem>>) -> Self {
        points.sort();
        points.dedup();
        PointSet { field, even_dim, points }
    }

    pub fn filter(&self, keep: impl Fn(&[Elem]) -> bool + Sync) -> PointSet {
        let points = self.points.par_iter().filter(|z| keep(z)).cloned().collect();
        PointSet { points, ..self.clone() }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        self.filter(|z| other.contains(z))
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let pts = self.points.iter().chain(&other.points).cloned().collect();
        Self::from_unsorted(self.field, self.even_dim, pts)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|z| other.contains(z))
    }
}

/// The field GF(2^e) on which points of `l` are taken.
pub fn point_field(l: &LieSuperAlgebra, e: u32) -> Result<Field> {
    if l.field().degree() == e {
        return Ok(l.field());
    }
    if !l.field().is_prime_field() {
        return Err(Error::IncompatibleInputs(format!(
            "algebra is defined over GF(2^{}); points over GF(2^{e}) are not supported",
            l.field().degree()
        )));
    }
    Field::new(e)
}

/// All points `z` with coordinates in `coords` (others zero) satisfying `keep`.
pub fn enumerate(
    field: Field,
    dim: usize,
    even_dim: usize,
    coords: std::ops::Range<usize>,
    cap: u64,
    keep: impl Fn(&[Elem]) -> bool + Sync,
) -> Result<PointSet> {
    let q = field.order() as u64;
    let free = coords.len() as u32;
    let total = q.checked_pow(free).filter(|&t| t <= cap).ok_or(Error::LimitExceeded { what: "points to enumerate".into(), limit: cap })?;
    let points: Vec<Vec<Elem>> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut z = vec![0; dim];
            for c in coords.clone().rev() {
                z[c] = (idx % q) as Elem;
                idx /= q;
            }
            keep(&z).then_some(z)
        })
        .collect();
    Ok(PointSet { field, even_dim, points })
}

/// `{z : z^{2} = 0}` over GF(2^e), using the flattened 2-operation.
pub fn restricted_nullcone(l: &LieSuperAlgebra, e: u32) -> Result<PointSet> {
    restricted_nullcone_capped(l, e, DEFAULT_POINT_CAP)
}

pub fn restricted_nullcone_capped(l: &LieSuperAlgebra, e: u32, cap: u64) -> Result<PointSet> {
    if !l.is_restricted() {
        return Err(Error::MissingRestrictedData);
    }
    let f = point_field(l, e)?;
    let le = l.extend_to(f)?;
    let set = enumerate(f, le.dim(), le.even_dim(), 0..le.dim(), cap, |z| {
        vector::is_zero(&le.two_op(z).expect("restricted"))
    })?;
    debug_assert_eq!(set, restricted_nullcone_split(&le, cap)?);
    Ok(set)
}

/// The same set from the two conditions `z0^[2] + q(z1) = 0` and `[z1, z0] = 0`.
pub fn restricted_nullcone_split(l: &LieSuperAlgebra, cap: u64) -> Result<PointSet> {
    enumerate(l.field(), l.dim(), l.even_dim(), 0..l.dim(), cap, |z| {
        let z0 = l.even_part(z);
        let z1 = l.odd_part(z);
        let mut a = l.two_map(&z0).expect("restricted");
        vector::add_assign(&mut a, &l.q(&z1));
        vector::is_zero(&a) && vector::is_zero(&l.bracket(&z1, &z0))
    })
}

/// `{y ∈ L1 : q(y) = 0}` over GF(2^e).
pub fn odd_nullcone(l: &LieSuperAlgebra, e: u32) -> Result<PointSet> {
    odd_nullcone_capped(l, e, DEFAULT_POINT_CAP)
}

pub fn odd_nullcone_capped(l: &LieSuperAlgebra, e: u32, cap: u64) -> Result<PointSet> {
    let f = point_field(l, e)?;
    let le = l.extend_to(f)?;
    enumerate(f, le.dim(), le.even_dim(), le.odd_indices(), cap, |z| vector::is_zero(&le.q(z)))
}
