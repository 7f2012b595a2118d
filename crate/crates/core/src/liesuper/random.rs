//! Seeded generators of valid (restricted) Lie superalgebras.

use rand::Rng;

use super::{fixtures, validate_all, validate_superalgebra, LieSuperAlgebra};
use crate::gf2la::{vector, Elem, Field, Matrix};

const MAX_ATTEMPTS: usize = 500;

fn random_vec(l: &LieSuperAlgebra, rng: &mut impl Rng, range: std::ops::Range<usize>, density: f64) -> Vec<Elem> {
    let order = l.field().order();
    let mut v = l.zero();
    for i in range {
        if rng.gen_bool(density) {
            v[i] = rng.gen_range(1..order);
        }
    }
    v
}

/// Basis of the even part of the center.
pub fn even_center(l: &LieSuperAlgebra) -> Vec<Vec<Elem>> {
    let n = l.dim();
    let a = l.even_dim();
    // unknown w in L0 with [w, e_j] = 0 for all j
    let mut m = Matrix::zeros(l.field(), n * n, a);
    for k in 0..a {
        for j in 0..n {
            for (r, &c) in l.bracket_basis(k, j).iter().enumerate() {
                m.set(j * n + r, k, c);
            }
        }
    }
    m.kernel()
        .into_iter()
        .map(|w| {
            let mut v = l.zero();
            v[..a].copy_from_slice(&w);
            v
        })
        .collect()
}

/// Picks 2-map values with `ad(x_i^[2]) = ad(x_i)^2`, shifted by random central
/// elements. Returns `None` when some `ad(x_i)^2` is not inner.
pub fn attach_random_two_map(l: &LieSuperAlgebra, rng: &mut impl Rng) -> Option<LieSuperAlgebra> {
    let n = l.dim();
    let a = l.even_dim();
    let f = l.field();
    let mut sys = Matrix::zeros(f, n * n, a);
    for k in 0..a {
        let ad = l.ad_basis(k);
        for r in 0..n {
            for c in 0..n {
                sys.set(r * n + c, k, ad.get(r, c));
            }
        }
    }
    let center = even_center(l);
    let mut out = l.clone().with_zero_two_map();
    for i in 0..a {
        let ad = l.ad_basis(i);
        let sq = ad.mul(&ad);
        let rhs: Vec<Elem> = (0..n * n).map(|t| sq.get(t / n, t % n)).collect();
        let w = sys.solve(&rhs)?;
        let mut v = l.zero();
        v[..a].copy_from_slice(&w);
        for z in &center {
            vector::axpy(&f, &mut v, rng.gen_range(0..f.order()), z);
        }
        out.set_two_map(i, &v);
    }
    Some(out)
}

/// Reinterprets an algebra over the prime field as one over `field`.
pub fn extend_scalars(l: &LieSuperAlgebra, field: Field) -> LieSuperAlgebra {
    l.extend_to(field).expect("only the prime field embeds")
}

fn random_invertible_graded(l: &LieSuperAlgebra, rng: &mut impl Rng) -> Matrix {
    let n = l.dim();
    let f = l.field();
    loop {
        let mut p = Matrix::zeros(f, n, n);
        for r in 0..n {
            for c in 0..n {
                if l.is_odd(r) == l.is_odd(c) {
                    p.set(r, c, rng.gen_range(0..f.order()));
                }
            }
        }
        if p.rank() == n {
            return p;
        }
    }
}

fn random_constants(field: Field, a: usize, b: usize, rng: &mut impl Rng) -> LieSuperAlgebra {
    let mut l = LieSuperAlgebra::new(field, a, b);
    let n = a + b;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let k = rng.gen_range(0..=pairs.len().min(3));
    for _ in 0..k {
        let (i, j) = pairs[rng.gen_range(0..pairs.len())];
        let range = if l.is_odd(i) ^ l.is_odd(j) { l.odd_indices() } else { l.even_indices() };
        let v = random_vec(&l, rng, range, 0.5);
        l.set_bracket(i, j, &v);
    }
    // odd squares are forced to vanish
    for y in l.odd_indices() {
        l.set_bracket(y, y, &vec![0; n]);
    }
    for j in 0..b {
        let v = random_vec(&l, rng, l.even_indices(), 0.5);
        l.set_q(j, &v);
    }
    l
}

/// A random valid Lie superalgebra (not necessarily restricted) with
/// `even_dim <= max_even`, `odd_dim <= max_odd` and positive dimension.
pub fn random_superalgebra(rng: &mut impl Rng, field: Field, max_even: usize, max_odd: usize) -> LieSuperAlgebra {
    random_restricted(rng, field, max_even, max_odd).without_two_map()
}

/// A random valid restricted Lie superalgebra with the given shape bounds.
pub fn random_restricted(rng: &mut impl Rng, field: Field, max_even: usize, max_odd: usize) -> LieSuperAlgebra {
    assert!(max_even + max_odd > 0, "shape bound must allow a nonzero algebra");
    for _ in 0..MAX_ATTEMPTS {
        let candidate = match rng.gen_range(0..10) {
            0..=5 => {
                let (a, b) = random_shape(rng, max_even, max_odd);
                let l = random_constants(field, a, b, rng);
                if !validate_superalgebra(&l).is_valid() {
                    continue;
                }
                attach_random_two_map(&l, rng)
            }
            6..=8 => {
                let fits: Vec<LieSuperAlgebra> = fixtures::all()
                    .into_iter()
                    .map(|(_, l)| l)
                    .filter(|l| l.even_dim() <= max_even && l.odd_dim() <= max_odd)
                    .collect();
                if fits.is_empty() {
                    continue;
                }
                let base = extend_scalars(&fits[rng.gen_range(0..fits.len())], field);
                let p = random_invertible_graded(&base, rng);
                base.change_basis(&p).ok()
            }
            _ => {
                if max_even + max_odd < 2 {
                    continue;
                }
                let (a, b) = random_shape(rng, max_even, max_odd);
                if a + b < 2 {
                    continue;
                }
                let (a1, b1) = (rng.gen_range(0..=a), rng.gen_range(0..=b));
                if a1 + b1 == 0 || a1 + b1 == a + b {
                    continue;
                }
                let x = random_restricted(rng, field, a1, b1);
                let y = random_restricted(rng, field, a - a1, b - b1);
                x.direct_sum(&y).ok().filter(|s| s.even_dim() <= max_even && s.odd_dim() <= max_odd)
            }
        };
        if let Some(l) = candidate {
            if validate_all(&l).map(|r| r.is_valid()).unwrap_or(false) {
                return l;
            }
        }
    }
    // abelian algebras with arbitrary even q and 2-map values are always valid
    let (a, b) = random_shape(rng, max_even, max_odd);
    let mut l = LieSuperAlgebra::new(field, a, b).with_zero_two_map();
    for j in 0..b {
        let v = random_vec(&l, rng, l.even_indices(), 0.5);
        l.set_q(j, &v);
    }
    for i in 0..a {
        let v = random_vec(&l, rng, l.even_indices(), 0.5);
        l.set_two_map(i, &v);
    }
    l
}

fn random_shape(rng: &mut impl Rng, max_even: usize, max_odd: usize) -> (usize, usize) {
    loop {
        let a = rng.gen_range(0..=max_even);
        let b = rng.gen_range(0..=max_odd);
        if a + b > 0 {
            return (a, b);
        }
    }
}
