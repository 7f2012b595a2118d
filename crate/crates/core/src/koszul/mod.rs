//! The Koszul resolution of the trivial module over U(L) and cohomology computed from it.

mod cohomology;
mod complex;

pub use cohomology::{
    cochain_differential, cohomology_dims_u, cup_product, finite_generation_probe, phi_map, phi_naturality,
    OddAbelianRestriction, OddPoly, PhiClass, ProbeReport, ProbeVerdict, TrivialCochains, MAX_KOSZUL_DEGREE,
};
pub use complex::{
    compositions, d_squared_violation, differential_terms, filtered_exactness, u_monomials, ybar_basis, ybar_dim,
    DiffTerm, FilteredExactness, KoszulComplex, YBar,
};
