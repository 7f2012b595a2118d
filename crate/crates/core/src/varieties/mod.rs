//! Nullcones, rank-variety supports, and the support property suites.

mod carlson;
mod points;
mod support;

pub use carlson::{
    carlson_module, central_extension, check_zero_locus, extension_cocycle, CarlsonModule, FormProduct, ZeroLocusCheck,
};
pub use points::{
    enumerate, odd_nullcone, odd_nullcone_capped, point_field, restricted_nullcone, restricted_nullcone_capped,
    restricted_nullcone_split, PointSet, DEFAULT_POINT_CAP,
};
pub use support::{
    detect_non_free_point, finite_projdim_ul, first_difference, is_free_at, punctured_support, support_datum_suite,
    support_points, support_points_ul, support_points_vl, supports_vl, tensor_property_check, DatumAxiom,
    DatumFailure, DatumReport, ProjdimReport, TensorReport, MAX_DETECTION_DEGREE,
};

#[cfg(test)]
mod tests;
