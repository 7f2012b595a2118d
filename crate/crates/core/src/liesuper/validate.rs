use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LieSuperAlgebra;
use crate::error::{Error, Result};
use crate::gf2la::{vector, Elem, Matrix};

const SAMPLE_SEED: u64 = 0x5eed_2024;
const SAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Bracket, q and 2-map respect the parity grading.
    Parity,
    /// `[a, b] = [b, a]`.
    Symmetry,
    /// Sign-free Jacobi identity on basis triples.
    Jacobi,
    /// `[x, x] = 0` for even `x`.
    EvenSquare,
    /// `[y, [y, y]] = 0` for odd `y`.
    OddCube,
    /// `[y, y] = 0` for odd `y`.
    OddSquare,
    /// `ad(y)^2 = ad(q(y))` for odd `y`.
    QAdjoint,
    /// `(a x)^[2] = a^2 x^[2]`.
    Semilinear,
    /// `ad(x^[2]) = ad(x)^2`.
    TwoMapAdjoint,
    /// `(x + w)^[2] = x^[2] + w^[2] + [w, x]`.
    TwoMapAdditive,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Parity => "parity",
            Axiom::Symmetry => "symmetry",
            Axiom::Jacobi => "jacobi",
            Axiom::EvenSquare => "even-square",
            Axiom::OddCube => "odd-cube",
            Axiom::OddSquare => "odd-square",
            Axiom::QAdjoint => "q-adjoint",
            Axiom::Semilinear => "semilinear",
            Axiom::TwoMapAdjoint => "two-map-adjoint",
            Axiom::TwoMapAdditive => "two-map-additive",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Holds trivially, e.g. semilinearity over the prime field.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices involved; empty for random-element witnesses.
    pub basis: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<A> {
    pub axiom: A,
    pub status: Status,
    pub witness: Option<Witness>,
}

/// Outcome of a list of axiom checks; `A` names the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<A> {
    pub checks: Vec<Check<A>>,
}

pub type AxiomCheck = Check<Axiom>;
pub type ValidationReport = Report<Axiom>;

impl<A> Default for Report<A> {
    fn default() -> Self {
        Report { checks: Vec::new() }
    }
}

impl<A: Copy + PartialEq> Report<A> {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check<A>> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn status(&self, axiom: A) -> Option<Status> {
        self.checks.iter().find(|c| c.axiom == axiom).map(|c| c.status)
    }

    pub fn merge(mut self, other: Report<A>) -> Report<A> {
        self.checks.extend(other.checks);
        self
    }

    pub fn record(&mut self, axiom: A, witness: Option<Witness>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.checks.push(Check { axiom, status, witness });
    }

    pub fn record_vacuous(&mut self, axiom: A) {
        self.checks.push(Check { axiom, status: Status::Vacuous, witness: None });
    }
}

pub(crate) fn witness(basis: Vec<usize>, detail: String) -> Option<Witness> {
    Some(Witness { basis, detail })
}

pub(crate) fn random_element(l: &LieSuperAlgebra, rng: &mut impl Rng, range: std::ops::Range<usize>) -> Vec<Elem> {
    let order = l.field().order();
    let mut v = l.zero();
    for i in range {
        v[i] = rng.gen_range(0..order);
    }
    v
}

/// Checks the Lie superalgebra axioms in their characteristic-2 form.
pub fn validate_superalgebra(l: &LieSuperAlgebra) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let n = l.dim();

    rep.record(Axiom::Parity, parity_violation(l));

    let sym = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| l.bracket_basis(i, j) != l.bracket_basis(j, i))
        .and_then(|(i, j)| {
            witness(
                vec![i, j],
                format!(
                    "[{a},{b}] = {} but [{b},{a}] = {}",
                    l.format_element(l.bracket_basis(i, j)),
                    l.format_element(l.bracket_basis(j, i)),
                    a = l.name(i),
                    b = l.name(j)
                ),
            )
        });
    rep.record(Axiom::Symmetry, sym);

    let mut jac = None;
    'outer: for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (a, b, c) = (l.basis_vector(i), l.basis_vector(j), l.basis_vector(k));
                let mut s = l.bracket(&a, &l.bracket(&b, &c));
                vector::add_assign(&mut s, &l.bracket(&b, &l.bracket(&c, &a)));
                vector::add_assign(&mut s, &l.bracket(&c, &l.bracket(&a, &b)));
                if !vector::is_zero(&s) {
                    jac = witness(
                        vec![i, j, k],
                        format!("cyclic sum over ({}, {}, {}) = {}", l.name(i), l.name(j), l.name(k), l.format_element(&s)),
                    );
                    break 'outer;
                }
            }
        }
    }
    rep.record(Axiom::Jacobi, jac);

    let square = |range: std::ops::Range<usize>| {
        range.clone().find(|&i| !vector::is_zero(l.bracket_basis(i, i))).and_then(|i| {
            witness(vec![i, i], format!("[{0},{0}] = {1}", l.name(i), l.format_element(l.bracket_basis(i, i))))
        })
    };
    rep.record(Axiom::EvenSquare, square(l.even_indices()));
    rep.record(Axiom::OddSquare, square(l.odd_indices()));

    let cube = l
        .odd_indices()
        .map(|i| (i, l.bracket(&l.basis_vector(i), l.bracket_basis(i, i))))
        .find(|(_, v)| !vector::is_zero(v))
        .and_then(|(i, v)| witness(vec![i, i, i], format!("[{0},[{0},{0}]] = {1}", l.name(i), l.format_element(&v))));
    rep.record(Axiom::OddCube, cube);

    let ad_sq_mismatch = |y: &[Elem]| {
        let a = l.ad(y);
        a.mul(&a) != l.ad(&l.q(y))
    };
    let mut qadj = None;
    'basis: for i in l.odd_indices() {
        for j in i..n {
            if !l.is_odd(j) {
                continue;
            }
            let mut y = l.basis_vector(i);
            y[j] = 1;
            if ad_sq_mismatch(&y) {
                let detail = if i == j {
                    format!("ad({0})^2 != ad(q({0})) with q({0}) = {1}", l.name(i), l.format_element(&l.q(&y)))
                } else {
                    format!("ad({0}+{1})^2 != ad(q({0}+{1}))", l.name(i), l.name(j))
                };
                qadj = witness(if i == j { vec![i] } else { vec![i, j] }, detail);
                break 'basis;
            }
        }
    }
    if qadj.is_none() && l.odd_dim() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLES {
            let y = random_element(l, &mut rng, l.odd_indices());
            if ad_sq_mismatch(&y) {
                qadj = witness(vec![], format!("ad(y)^2 != ad(q(y)) for y = {}", l.format_element(&y)));
                break;
            }
        }
    }
    rep.record(Axiom::QAdjoint, qadj);
    rep
}

fn parity_violation(l: &LieSuperAlgebra) -> Option<Witness> {
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let v = l.bracket_basis(i, j);
            if let Some(k) = (0..n).find(|&k| v[k] != 0 && l.parity(k) != l.parity(i) ^ l.parity(j)) {
                return witness(
                    vec![i, j, k],
                    format!("[{},{}] has a component along {} of the wrong parity", l.name(i), l.name(j), l.name(k)),
                );
            }
        }
    }
    for j in 0..l.odd_dim() {
        let v = l.q_basis(j);
        if let Some(k) = l.odd_indices().find(|&k| v[k] != 0) {
            let y = l.even_dim() + j;
            return witness(vec![y, k], format!("q({}) has an odd component along {}", l.name(y), l.name(k)));
        }
    }
    for i in l.even_indices() {
        if let Some(v) = l.two_map_basis(i) {
            if let Some(k) = l.odd_indices().find(|&k| v[k] != 0) {
                return witness(vec![i, k], format!("{}^[2] has an odd component along {}", l.name(i), l.name(k)));
            }
        }
    }
    None
}

/// Checks the restricted-structure axioms for the stored 2-map.
pub fn validate_restricted(l: &LieSuperAlgebra) -> Result<ValidationReport> {
    if !l.is_restricted() {
        return Err(Error::MissingRestrictedData);
    }
    let mut rep = ValidationReport::default();
    let f = l.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);

    if f.is_prime_field() {
        rep.record_vacuous(Axiom::Semilinear);
    } else {
        let mut bad = None;
        for i in l.even_indices() {
            let a = rng.gen_range(1..f.order());
            let lhs = l.two_map(&vector::scale(&f, a, &l.basis_vector(i)))?;
            let rhs = vector::scale(&f, f.square(a), &l.two_map(&l.basis_vector(i))?);
            if lhs != rhs {
                bad = witness(vec![i], format!("({a}*{0})^[2] != {a}^2 * {0}^[2]", l.name(i)));
                break;
            }
        }
        rep.record(Axiom::Semilinear, bad);
    }

    let adj_mismatch = |x: &[Elem]| -> Result<bool> {
        let a = l.ad(x);
        Ok(a.mul(&a) != l.ad(&l.two_map(x)?))
    };
    let mut adj = None;
    for i in l.even_indices() {
        if adj_mismatch(&l.basis_vector(i))? {
            adj = witness(
                vec![i],
                format!(
                    "ad({0}^[2]) != ad({0})^2 with {0}^[2] = {1}",
                    l.name(i),
                    l.format_element(&l.two_map(&l.basis_vector(i))?)
                ),
            );
            break;
        }
    }
    if adj.is_none() && l.even_dim() > 0 {
        for _ in 0..SAMPLES {
            let x = random_element(l, &mut rng, l.even_indices());
            if adj_mismatch(&x)? {
                adj = witness(vec![], format!("ad(x^[2]) != ad(x)^2 for x = {}", l.format_element(&x)));
                break;
            }
        }
    }
    rep.record(Axiom::TwoMapAdjoint, adj);

    let mut add = None;
    'pairs: for i in l.even_indices() {
        for j in l.even_indices() {
            if i == j {
                continue;
            }
            let (x, w) = (l.basis_vector(i), l.basis_vector(j));
            let lhs = l.two_map(&vector::add(&x, &w))?;
            let mut rhs = vector::add(&l.two_map(&x)?, &l.two_map(&w)?);
            vector::add_assign(&mut rhs, &l.bracket(&w, &x));
            if lhs != rhs {
                add = witness(vec![i, j], format!("({0}+{1})^[2] != {0}^[2] + {1}^[2] + [{1},{0}]", l.name(i), l.name(j)));
                break 'pairs;
            }
        }
    }
    rep.record(Axiom::TwoMapAdditive, add);
    Ok(rep)
}

/// Both validators; the algebra must be restricted.
pub fn validate_all(l: &LieSuperAlgebra) -> Result<ValidationReport> {
    Ok(validate_superalgebra(l).merge(validate_restricted(l)?))
}

/// A restricted Lie superalgebra viewed as an ordinary restricted Lie algebra
/// on the same space, with the 2-operation `z0^[2] + q(z1) + [z1, z0]`.
#[derive(Clone, Debug)]
pub struct RestrictedFlattening {
    base: LieSuperAlgebra,
    report: ValidationReport,
}

impl RestrictedFlattening {
    pub fn base(&self) -> &LieSuperAlgebra {
        &self.base
    }

    /// Results of the axiom checks on the full space.
    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn two_op(&self, z: &[Elem]) -> Vec<Elem> {
        self.base.two_op(z).expect("validated restricted algebra")
    }

    /// The flattened structure as a purely even restricted algebra, same ordered basis.
    pub fn as_even_algebra(&self) -> LieSuperAlgebra {
        let l = &self.base;
        let n = l.dim();
        let two: Vec<Vec<Elem>> = (0..n).map(|i| self.two_op(&l.basis_vector(i))).collect();
        LieSuperAlgebra::from_parts(l.field(), n, 0, l.raw_bracket().to_vec(), vec![], Some(two))
            .expect("shapes agree")
            .with_names(l.names().to_vec())
            .expect("names unique")
    }
}

/// Validates `l` and re-checks the restricted axioms for the 2-operation on
/// the whole space, mixed-parity elements included.
pub fn flatten_to_restricted(l: &LieSuperAlgebra) -> Result<RestrictedFlattening> {
    let pre = validate_all(l)?;
    if let Some(v) = pre.violations().next() {
        return Err(Error::MalformedInput(format!(
            "algebra fails {}: {}",
            v.axiom,
            v.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("")
        )));
    }
    let f = l.field();
    let n = l.dim();
    let op = |z: &[Elem]| l.two_op(z).expect("restricted");
    let mut rep = ValidationReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 1);
    let mut samples: Vec<Vec<Elem>> = (0..n).map(|i| l.basis_vector(i)).collect();
    for _ in 0..SAMPLES {
        samples.push(random_element(l, &mut rng, 0..n));
    }

    if f.is_prime_field() {
        rep.record_vacuous(Axiom::Semilinear);
    } else {
        let bad = samples.iter().find_map(|z| {
            let a = rng.gen_range(1..f.order());
            (op(&vector::scale(&f, a, z)) != vector::scale(&f, f.square(a), &op(z)))
                .then(|| Witness { basis: vec![], detail: format!("(a z)^{{2}} != a^2 z^{{2}} for z = {}", l.format_element(z)) })
        });
        rep.record(Axiom::Semilinear, bad);
    }

    let bad = samples.iter().find_map(|z| {
        let a: Matrix = l.ad(z);
        (a.mul(&a) != l.ad(&op(z)))
            .then(|| Witness { basis: vec![], detail: format!("ad(z^{{2}}) != ad(z)^2 for z = {}", l.format_element(z)) })
    });
    rep.record(Axiom::TwoMapAdjoint, bad);

    let mut bad = None;
    'pairs: for (a, z) in samples.iter().enumerate() {
        for w in &samples[a + 1..] {
            let mut rhs = vector::add(&op(z), &op(w));
            vector::add_assign(&mut rhs, &l.bracket(w, z));
            if op(&vector::add(z, w)) != rhs {
                bad = witness(
                    vec![],
                    format!("additivity fails for z = {}, w = {}", l.format_element(z), l.format_element(w)),
                );
                break 'pairs;
            }
        }
    }
    rep.record(Axiom::TwoMapAdditive, bad);
    Ok(RestrictedFlattening { base: l.clone(), report: rep })
}
