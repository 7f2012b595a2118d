use super::LieSuperAlgebra;
use crate::envelope::{ModuleMode, SuperModule};

/// L acting on itself by `ad`; a V(L)-module when L is restricted, else a U(L)-module.
pub fn adjoint_module(l: &LieSuperAlgebra) -> SuperModule {
    let mode = if l.is_restricted() { ModuleMode::V } else { ModuleMode::U };
    let parities = (0..l.dim()).map(|i| l.parity(i)).collect();
    let action = (0..l.dim()).map(|i| l.ad_basis(i)).collect();
    SuperModule::new(l.field(), parities, action, mode).expect("shapes agree")
}
