//! The restricted enveloping algebra V(L), supermodules, and homological algebra over V(L).

mod module;
pub mod pbw;
pub mod random;
mod resolution;
mod vl;

pub use module::{module_dual, module_tensor, validate_module, ModuleMode, ModuleRelation, ModuleReport, SuperModule};
pub(crate) use module::{dual_unchecked, tensor_unchecked};
pub use resolution::{
    cover_from_generators, equivariance_system, ext_dims_vl, free_cover, graded_kernel, greedy_cover,
    greedy_generators, hom_coboundary, hom_space, is_projective_vl, resolve, FreeCover, Resolution,
    MAX_EXT_DEGREE,
};
pub use vl::{build_vl, build_vl_unchecked, mask_to_monomial, PbwAlgebra, MAX_VL_GENERATORS};

#[cfg(test)]
mod tests;
