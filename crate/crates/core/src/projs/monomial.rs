use std::collections::BTreeSet;

use super::ideal::Ideal;
use super::poly::{BigradedRing, Mono, Poly};

/// A monomial ideal by its minimal generators, handled combinatorially.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Mono>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, monos: impl IntoIterator<Item = Mono>) -> Self {
        let mut all: Vec<Mono> = monos.into_iter().collect();
        all.sort();
        all.dedup();
        let gens = all.iter().filter(|m| !all.iter().any(|d| d != *m && d.divides(m))).cloned().collect();
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![] }
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, [Mono::one(nvars)])
    }

    /// The prime generated by the variables in `mask`.
    pub fn variables(nvars: usize, mask: u32) -> Self {
        Self::new(nvars, (0..nvars).filter(|i| mask >> i & 1 == 1).map(|i| Mono::var(nvars, i)))
    }

    pub fn generators(&self) -> &[Mono] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Mono::is_one)
    }

    pub fn contains_mono(&self, m: &Mono) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains_mono(m))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))))
    }

    pub fn radical(&self) -> Self {
        Self::new(self.nvars, self.gens.iter().map(Mono::support))
    }

    /// Generated by variables (the zero ideal included).
    pub fn is_prime(&self) -> bool {
        self.gens.iter().all(|g| g.total_degree() == 1)
    }

    /// Mask of the variables of a prime.
    pub fn prime_mask(&self) -> Option<u32> {
        self.is_prime().then(|| self.gens.iter().map(|g| 1u32 << g.variables().next().expect("variable")).sum())
    }

    /// Contained in the prime generated by the variables in `mask`?
    pub fn in_prime(&self, mask: u32) -> bool {
        self.gens.iter().all(|g| g.variables().any(|i| mask >> i & 1 == 1))
    }

    /// Variable primes other than the maximal ideal that contain this ideal.
    pub fn zero_set(&self) -> BTreeSet<u32> {
        proper_prime_masks(self.nvars).filter(|&s| self.in_prime(s)).collect()
    }

    pub fn to_ideal(&self, ring: &BigradedRing) -> Ideal {
        Ideal::new(ring, self.gens.iter().map(|m| Poly::mono(m.clone())).collect()).expect("matching ring")
    }

    pub fn from_ideal(ideal: &Ideal) -> Option<Self> {
        ideal.is_monomial().then(|| {
            Self::new(ideal.ring().nvars(), ideal.groebner().iter().map(|g| g.leading().expect("nonzero").clone()))
        })
    }
}

/// Masks of the proper variable subsets.
pub fn proper_prime_masks(nvars: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << nvars) - 1
}

/// Monomials of total degree `1..=max_degree`.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Mono> {
    let ring = BigradedRing::standard(&vec![0; nvars]);
    (1..=max_degree).flat_map(|d| ring.monomials(d, 0)).collect()
}

/// Every proper monomial ideal generated in total degree at most `max_degree`.
pub fn monomial_lattice(nvars: usize, max_degree: u32) -> Vec<MonomialIdeal> {
    let pool = monomials_up_to(nvars, max_degree);
    assert!(pool.len() < 20, "monomial pool too large");
    let all: BTreeSet<MonomialIdeal> = (0u32..1 << pool.len())
        .map(|bits| MonomialIdeal::new(nvars, pool.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, m)| m.clone())))
        .collect();
    all.into_iter().collect()
}
