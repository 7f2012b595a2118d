//! Bigraded ideals over GF(2): Gröbner bases, bi-homogeneous parts, s-primes
//! and s-radicals, and the zero-set topology they define.

mod ideal;
mod monomial;
mod poly;
mod suite;

pub use ideal::{
    bihomogeneous_part, groebner_basis, ideal_member, is_s_prime, is_s_prime_capped, normal_form, radical_capped,
    s_radical, saturated_s_radical, zs_compare, BihomogeneousPart, Ideal, SPrimeVerdict, ZsRelation, DEFAULT_DEGREE_CAP,
};
pub use monomial::{monomial_lattice, monomials_up_to, proper_prime_masks, MonomialIdeal};
pub use poly::{BigradedRing, Mono, Poly};
pub use suite::{monomial_lattice_suite, projs_property_suite, sum_fixture, PropertyOutcome, SuiteReport, ZsProperty};
