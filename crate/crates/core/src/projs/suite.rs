use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ideal::{bihomogeneous_part, is_s_prime, radical_capped, s_radical, zs_compare, Ideal, ZsRelation};
use super::monomial::{monomial_lattice, monomials_up_to, proper_prime_masks, MonomialIdeal};
use super::poly::BigradedRing;
use crate::error::{malformed, Result};

/// Properties of the zero-set topology on bi-homogeneous s-primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZsProperty {
    /// `Z(I) ∪ Z(J) = Z(IJ)`.
    ProductZeroSet,
    /// `Z(I) ∩ Z(J) = Z(I + J)`.
    SumZeroSet,
    /// The bi-homogeneous part of a homogeneous prime is an s-prime.
    PrimeRestriction,
    /// `I ⊆ p_s` iff `I ⊆ p` for bi-homogeneous `I`.
    PreimageOfZeroSet,
    /// The radical of an s-prime is a homogeneous prime.
    RadicalIsPrime,
    /// The bi-homogeneous part of the radical of an s-prime is itself.
    RootSection,
    /// `Z(I) = Z(s-radical of I)`.
    RadicalZeroSet,
    /// `I ⊆ J` implies `Z(I) ⊇ Z(J)`.
    Antitone,
    /// `Z(I) ⊆ Z(J)` implies the s-radical of `I` contains that of `J`.
    ZeroSetToRadical,
    /// Descending chains of zero sets stabilize.
    Noetherian,
    /// Irreducible closed sets have a unique generic point.
    ZariskiSpace,
}

impl ZsProperty {
    pub const ALL: [ZsProperty; 11] = [
        ZsProperty::ProductZeroSet,
        ZsProperty::SumZeroSet,
        ZsProperty::PrimeRestriction,
        ZsProperty::PreimageOfZeroSet,
        ZsProperty::RadicalIsPrime,
        ZsProperty::RootSection,
        ZsProperty::RadicalZeroSet,
        ZsProperty::Antitone,
        ZsProperty::ZeroSetToRadical,
        ZsProperty::Noetherian,
        ZsProperty::ZariskiSpace,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ZsProperty::ProductZeroSet => "product-zero-set",
            ZsProperty::SumZeroSet => "sum-zero-set",
            ZsProperty::PrimeRestriction => "prime-restriction",
            ZsProperty::PreimageOfZeroSet => "preimage-of-zero-set",
            ZsProperty::RadicalIsPrime => "radical-is-prime",
            ZsProperty::RootSection => "root-section",
            ZsProperty::RadicalZeroSet => "radical-zero-set",
            ZsProperty::Antitone => "antitone",
            ZsProperty::ZeroSetToRadical => "zero-set-to-radical",
            ZsProperty::Noetherian => "noetherian",
            ZsProperty::ZariskiSpace => "zariski-space",
        }
    }
}

impl std::fmt::Display for ZsProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub property: ZsProperty,
    pub checked: usize,
    pub failure: Option<String>,
}

impl PropertyOutcome {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl Default for SuiteReport {
    fn default() -> Self {
        SuiteReport {
            outcomes: ZsProperty::ALL.iter().map(|&property| PropertyOutcome { property, checked: 0, failure: None }).collect(),
        }
    }
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::holds)
    }

    pub fn outcome(&self, p: ZsProperty) -> &PropertyOutcome {
        self.outcomes.iter().find(|o| o.property == p).expect("every property listed")
    }

    fn record(&mut self, p: ZsProperty, ok: bool, detail: impl FnOnce() -> String) {
        let o = self.outcomes.iter_mut().find(|o| o.property == p).expect("every property listed");
        o.checked += 1;
        if !ok && o.failure.is_none() {
            o.failure = Some(detail());
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for (a, b) in self.outcomes.iter_mut().zip(other.outcomes) {
            a.checked += b.checked;
            if a.failure.is_none() {
                a.failure = b.failure;
            }
        }
    }
}

fn fmt_mono_ideal(ring: &BigradedRing, i: &MonomialIdeal) -> String {
    let parts: Vec<String> = i.generators().iter().map(|m| ring.format_mono(m)).collect();
    format!("({})", parts.join(", "))
}

/// Checks every property on all proper monomial ideals generated in degree at
/// most `max_degree`, with the variable-subset primes as the space of points.
/// The Gröbner engine is cross-checked against the combinatorial answers.
pub fn monomial_lattice_suite(ring: &BigradedRing, max_degree: u32, seed: u64) -> Result<SuiteReport> {
    let n = ring.nvars();
    if n == 0 || n > 3 {
        return Err(malformed("the monomial lattice suite takes one to three variables"));
    }
    let lattice = monomial_lattice(n, max_degree);
    let zs: Vec<BTreeSet<u32>> = lattice.iter().map(MonomialIdeal::zero_set).collect();
    let radicals: Vec<MonomialIdeal> = lattice.iter().map(MonomialIdeal::radical).collect();
    let fmt = |i: &MonomialIdeal| fmt_mono_ideal(ring, i);

    let pair_reports: Vec<SuiteReport> = (0..lattice.len())
        .into_par_iter()
        .map(|a| {
            let mut rep = SuiteReport::default();
            for b in 0..lattice.len() {
                let (i, j) = (&lattice[a], &lattice[b]);
                let union: BTreeSet<u32> = zs[a].union(&zs[b]).copied().collect();
                rep.record(ZsProperty::ProductZeroSet, i.product(j).zero_set() == union, || format!("{} and {}", fmt(i), fmt(j)));
                let inter: BTreeSet<u32> = zs[a].intersection(&zs[b]).copied().collect();
                rep.record(ZsProperty::SumZeroSet, i.sum(j).zero_set() == inter, || format!("{} and {}", fmt(i), fmt(j)));
                if j.contains(i) {
                    rep.record(ZsProperty::Antitone, zs[b].is_subset(&zs[a]), || format!("{} in {}", fmt(i), fmt(j)));
                }
                if zs[a].is_subset(&zs[b]) {
                    rep.record(ZsProperty::ZeroSetToRadical, radicals[a].contains(&radicals[b]), || {
                        format!("{} and {}", fmt(i), fmt(j))
                    });
                }
            }
            rep
        })
        .collect();
    let mut rep = SuiteReport::default();
    for r in pair_reports {
        rep.merge(r);
    }

    // the Gröbner-side comparison agrees with the zero sets on a sample of pairs
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let (a, b) = (rng.gen_range(0..lattice.len()), rng.gen_range(0..lattice.len()));
        let want = match (zs[a].is_subset(&zs[b]), zs[b].is_subset(&zs[a])) {
            (true, true) => ZsRelation::Equal,
            (true, false) => ZsRelation::FirstInSecond,
            (false, true) => ZsRelation::SecondInFirst,
            (false, false) => ZsRelation::Incomparable,
        };
        let got = zs_compare(&lattice[a].to_ideal(ring), &lattice[b].to_ideal(ring), max_degree)?;
        rep.record(ZsProperty::ZeroSetToRadical, got == want, || {
            format!("comparison of {} and {} gave {}", fmt(&lattice[a]), fmt(&lattice[b]), got.label())
        });
    }

    for (k, i) in lattice.iter().enumerate() {
        rep.record(ZsProperty::RadicalZeroSet, radicals[k].zero_set() == zs[k], || fmt(i));
        let engine = MonomialIdeal::from_ideal(&s_radical(&i.to_ideal(ring), max_degree)?);
        rep.record(ZsProperty::RadicalZeroSet, engine.as_ref() == Some(&radicals[k]), || format!("engine radical of {}", fmt(i)));

        // irreducible iff the zero set has one minimal point, which is then the radical
        if !zs[k].is_empty() {
            let minimal: Vec<u32> = zs[k].iter().copied().filter(|&s| !zs[k].iter().any(|&t| t != s && t & s == t)).collect();
            let irreducible = minimal.len() == 1;
            let point = radicals[k].prime_mask();
            let generic = point.filter(|&s| s != (1 << n) - 1);
            let ok = irreducible == generic.is_some()
                && generic.is_none_or(|s| minimal == [s] && MonomialIdeal::variables(n, s).zero_set() == zs[k]);
            rep.record(ZsProperty::ZariskiSpace, ok, || fmt(i));
        }
    }

    // points: every variable prime (the maximal one included) is an s-prime
    let all_masks: Vec<u32> = (0..1u32 << n).collect();
    for &s in &all_masks {
        let p = MonomialIdeal::variables(n, s);
        let ideal = p.to_ideal(ring);
        let verdict = is_s_prime(&ideal, max_degree)?;
        let capped = super::ideal::is_s_prime_capped(&ideal, 2)?;
        let part = bihomogeneous_part(&ideal, max_degree.max(3)).ideal;
        rep.record(ZsProperty::PrimeRestriction, verdict.holds() && capped.holds() && part == ideal, || fmt(&p));
        let root = radical_capped(&ideal, max_degree)?;
        rep.record(ZsProperty::RadicalIsPrime, root == ideal && root.is_linear() && root.is_homogeneous(), || fmt(&p));
        rep.record(ZsProperty::RootSection, s_radical(&root, max_degree)? == ideal, || fmt(&p));
        if s == (1 << n) - 1 {
            continue;
        }
        for i in &lattice {
            let gi = i.to_ideal(ring);
            rep.record(ZsProperty::PreimageOfZeroSet, part.contains_ideal(&gi) == ideal.contains_ideal(&gi), || {
                format!("{} against {}", fmt(i), fmt(&p))
            });
        }
    }

    // non-primes are caught by both tests
    for i in lattice.iter().filter(|i| !i.is_prime()) {
        let gi = i.to_ideal(ring);
        let ok = !is_s_prime(&gi, max_degree)?.holds() && !super::ideal::is_s_prime_capped(&gi, max_degree.min(2))?.holds();
        rep.record(ZsProperty::PrimeRestriction, ok, || format!("{} reported s-prime", fmt(i)));
    }

    // ascending chains of ideals give descending chains of zero sets
    let pool = monomials_up_to(n, max_degree);
    let points = proper_prime_masks(n).count();
    for _ in 0..50 {
        let mut cur = MonomialIdeal::zero(n);
        let mut z = cur.zero_set();
        let mut drops = 0;
        for _ in 0..3 * pool.len() {
            let m = pool[rng.gen_range(0..pool.len())].clone();
            cur = cur.sum(&MonomialIdeal::new(n, [m]));
            let next = cur.zero_set();
            if !next.is_subset(&z) {
                drops = usize::MAX;
                break;
            }
            drops += usize::from(next != z);
            z = next;
        }
        rep.record(ZsProperty::Noetherian, drops <= points, || format!("chain with {drops} strict steps"));
    }
    Ok(rep)
}

/// Checks the properties on bi-homogeneous ideals and homogeneous primes of a
/// general ring, with degree cap `cap`. The space of points is the variable
/// primes together with the bi-homogeneous parts of the given primes.
/// Properties quantifying over all points are not checked here.
pub fn projs_property_suite(ring: &BigradedRing, ideals: &[Ideal], primes: &[Ideal], cap: u32) -> Result<SuiteReport> {
    let n = ring.nvars();
    if ideals.iter().any(|i| !i.is_bihomogeneous()) {
        return Err(malformed("sample ideals must be bi-homogeneous"));
    }
    let maximal = Ideal::maximal(ring);
    let mut rep = SuiteReport::default();
    let mut points: Vec<Ideal> = proper_prime_masks(n).map(|s| MonomialIdeal::variables(n, s).to_ideal(ring)).collect();

    for p in primes {
        if !p.is_homogeneous() || !p.is_linear() || p.contains_ideal(&maximal) {
            return Err(malformed(format!("{} is not a proper homogeneous linear prime", p.format())));
        }
        let part = bihomogeneous_part(p, cap);
        let ps = part.ideal.clone();
        let verdict = is_s_prime(&ps, cap)?;
        let proper = !ps.contains_ideal(&maximal);
        rep.record(ZsProperty::PrimeRestriction, part.stabilized && verdict.holds() && proper, || {
            format!("{} restricts to {} ({verdict:?})", p.format(), ps.format())
        });
        for i in ideals {
            rep.record(ZsProperty::PreimageOfZeroSet, ps.contains_ideal(i) == p.contains_ideal(i), || {
                format!("{} against {}", i.format(), p.format())
            });
        }
        let root = radical_capped(&ps, cap)?;
        rep.record(ZsProperty::RadicalIsPrime, root.is_linear() && root.is_homogeneous() && !root.contains_ideal(&maximal), || {
            format!("radical of {} is {}", ps.format(), root.format())
        });
        rep.record(ZsProperty::RootSection, bihomogeneous_part(&root, cap).ideal == ps, || {
            format!("bi-homogeneous part of {} differs from {}", root.format(), ps.format())
        });
        rep.record(ZsProperty::ZariskiSpace, s_radical(&ps, cap)? == ps, || format!("{} is not s-radical", ps.format()));
        points.push(ps);
    }

    let zero_set = |i: &Ideal| -> Vec<bool> { points.iter().map(|q| q.contains_ideal(i)).collect() };
    let zs: Vec<Vec<bool>> = ideals.iter().map(zero_set).collect();
    for (a, i) in ideals.iter().enumerate() {
        let root = s_radical(i, cap)?;
        rep.record(ZsProperty::RadicalZeroSet, zero_set(&root) == zs[a], || i.format());
        for (b, j) in ideals.iter().enumerate() {
            let union: Vec<bool> = zs[a].iter().zip(&zs[b]).map(|(x, y)| *x || *y).collect();
            rep.record(ZsProperty::ProductZeroSet, zero_set(&i.product(j)) == union, || format!("{} and {}", i.format(), j.format()));
            let inter: Vec<bool> = zs[a].iter().zip(&zs[b]).map(|(x, y)| *x && *y).collect();
            rep.record(ZsProperty::SumZeroSet, zero_set(&i.sum(j)) == inter, || format!("{} and {}", i.format(), j.format()));
            if j.contains_ideal(i) {
                let ok = zs[b].iter().zip(&zs[a]).all(|(x, y)| !*x || *y);
                rep.record(ZsProperty::Antitone, ok, || format!("{} in {}", i.format(), j.format()));
            }
        }
    }
    Ok(rep)
}

/// `GF(2)[a, b]` with `a` even and `b` odd, both of degree one, and the prime `(a + b)`.
pub fn sum_fixture() -> (BigradedRing, Ideal) {
    let ring = BigradedRing::standard(&[0, 1]);
    let p = Ideal::parse(&ring, &["a + b"]).expect("valid fixture");
    (ring, p)
}
