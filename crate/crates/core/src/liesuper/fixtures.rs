//! Small named algebras used throughout the tests and the CLI.

use super::LieSuperAlgebra;
use crate::gf2la::Field;

fn named(l: LieSuperAlgebra, names: &[&str]) -> LieSuperAlgebra {
    l.with_names(names.iter().map(|s| s.to_string()).collect()).expect("fixture names")
}

/// Shape (0|1), `q = 0`.
pub fn a1() -> LieSuperAlgebra {
    named(LieSuperAlgebra::new(Field::gf2(), 0, 1).with_zero_two_map(), &["y"])
}

/// Shape (1|1), abelian, `q(y) = x`, `x^[2] = 0`.
pub fn a2() -> LieSuperAlgebra {
    let mut l = LieSuperAlgebra::new(Field::gf2(), 1, 1).with_zero_two_map();
    l.set_q(0, &[1, 0]);
    named(l, &["x", "y"])
}

/// Shape (1|0), `x^[2] = x`.
pub fn a3() -> LieSuperAlgebra {
    let mut l = LieSuperAlgebra::new(Field::gf2(), 1, 0);
    l.set_two_map(0, &[1]);
    named(l, &["x"])
}

/// Shape (1|1), `[x, y] = y`, `q = 0`, `x^[2] = x`.
pub fn a4() -> LieSuperAlgebra {
    let mut l = LieSuperAlgebra::new(Field::gf2(), 1, 1);
    l.set_bracket(0, 1, &[0, 1]);
    l.set_two_map(0, &[1, 0]);
    named(l, &["x", "y"])
}

/// Purely even abelian algebra of shape (2|0) with zero 2-map.
pub fn e2() -> LieSuperAlgebra {
    named(LieSuperAlgebra::new(Field::gf2(), 2, 0).with_zero_two_map(), &["x1", "x2"])
}

/// Looks a fixture up by name (`A1`..`A4`, `E2`, case-insensitive).
pub fn by_name(name: &str) -> Option<LieSuperAlgebra> {
    match name.to_ascii_uppercase().as_str() {
        "A1" => Some(a1()),
        "A2" => Some(a2()),
        "A3" => Some(a3()),
        "A4" => Some(a4()),
        "E2" => Some(e2()),
        _ => None,
    }
}

pub const NAMES: [&str; 5] = ["A1", "A2", "A3", "A4", "E2"];

pub fn all() -> Vec<(&'static str, LieSuperAlgebra)> {
    NAMES.iter().map(|&n| (n, by_name(n).expect("listed"))).collect()
}
