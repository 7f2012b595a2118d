//! Seeded generators of V(L)-modules of bounded dimension.

use rand::Rng;

use super::{cover_from_generators, dual_unchecked, greedy_generators, tensor_unchecked, ModuleMode, PbwAlgebra, SuperModule};
use crate::gf2la::Elem;
use crate::liesuper::adjoint_module;

const MAX_ATTEMPTS: usize = 200;

fn random_homogeneous(m: &SuperModule, rng: &mut impl Rng) -> Vec<Elem> {
    let p = rng.gen_range(0..2u8);
    let order = m.field().order();
    let mut v: Vec<Elem> = m.parities().iter().map(|&q| if q == p { rng.gen_range(0..order) } else { 0 }).collect();
    if v.iter().all(|&c| c == 0) {
        if let Some(k) = m.parities().iter().position(|&q| q == p) {
            v[k] = 1;
        }
    }
    v
}

fn leaf(v: &PbwAlgebra, rng: &mut impl Rng, max_dim: usize) -> Option<SuperModule> {
    let l = v.source();
    let reg = SuperModule::regular(v);
    match rng.gen_range(0..6) {
        0 => Some(SuperModule::trivial(l, ModuleMode::V)),
        1 => Some(SuperModule::trivial(l, ModuleMode::V).shift()),
        2 => Some(adjoint_module(l)).filter(|m| m.mode() == ModuleMode::V && m.dim() > 0),
        3 => Some(reg),
        4 => {
            let g = random_homogeneous(&reg, rng);
            let sub = reg.generated_subspace([&g]);
            reg.submodule(&sub).ok()
        }
        _ => {
            let g = random_homogeneous(&reg, rng);
            let sub = reg.generated_subspace([&g]);
            reg.quotient(&sub).ok()
        }
    }
    .filter(|m| m.dim() <= max_dim)
}

/// A random V(L)-module with `1 <= dim <= max_dim`.
pub fn random_module(v: &PbwAlgebra, rng: &mut impl Rng, max_dim: usize) -> SuperModule {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(m) = random_module_inner(v, rng, max_dim, 2) {
            if m.dim() >= 1 {
                return m;
            }
        }
    }
    SuperModule::trivial(v.source(), ModuleMode::V)
}

fn random_module_inner(v: &PbwAlgebra, rng: &mut impl Rng, max_dim: usize, depth: usize) -> Option<SuperModule> {
    if depth == 0 || rng.gen_bool(0.4) {
        return leaf(v, rng, max_dim);
    }
    let a = random_module_inner(v, rng, max_dim, depth - 1)?;
    let out = match rng.gen_range(0..5) {
        0 => {
            let b = random_module_inner(v, rng, max_dim.saturating_sub(a.dim()), depth - 1)?;
            a.direct_sum(&b).ok()?
        }
        1 => {
            let b = random_module_inner(v, rng, max_dim / a.dim().max(1), depth - 1)?;
            tensor_unchecked(&a, &b)
        }
        2 => dual_unchecked(&a),
        3 => {
            let cov = cover_from_generators(v, &a, greedy_generators(&a)).ok()?;
            cov.syzygy
        }
        _ => {
            let g = random_homogeneous(&a, rng);
            let sub = a.generated_subspace([&g]);
            if rng.gen_bool(0.5) {
                a.submodule(&sub).ok()?
            } else {
                a.quotient(&sub).ok()?
            }
        }
    };
    (out.dim() <= max_dim && out.dim() > 0).then_some(out)
}
