//! Arithmetic in GF(2^e).
//!
//! Elements are stored as bit vectors of their coefficients in the
//! polynomial basis `1, t, ..., t^(e-1)` over GF(2). The field is fixed by a
//! defining polynomial, also stored as a bit vector including the leading
//! `t^e` term.

use crate::error::{malformed, Error, Result};

/// A field element, as its coefficient bit vector.
pub type Elem = u32;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// Default defining polynomials (Conway polynomials for e <= 8).
const CONWAY: [u32; 9] = [
    0,
    0b11,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b101_1011,
    0b1000_0011,
    0b1_0001_1101,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    degree: u32,
    modulus: u32,
}

impl Field {
    pub const fn gf2() -> Self {
        Field { degree: 1, modulus: 0b11 }
    }

    /// GF(2^e) with the default defining polynomial.
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(malformed(format!("extension degree {degree} outside 1..={MAX_DEGREE}")));
        }
        let modulus = if (degree as usize) < CONWAY.len() {
            CONWAY[degree as usize]
        } else {
            // smallest irreducible polynomial of this degree
            ((1u32 << degree) + 1..1u32 << (degree + 1))
                .step_by(2)
                .find(|&p| is_irreducible(p))
                .expect("irreducible polynomials exist in every degree")
        };
        Ok(Field { degree, modulus })
    }

    pub fn with_modulus(degree: u32, modulus: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(malformed(format!("extension degree {degree} outside 1..={MAX_DEGREE}")));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(malformed(format!(
                "defining polynomial {modulus:#b} does not have degree {degree}"
            )));
        }
        if !is_irreducible(modulus) {
            return Err(malformed(format!("defining polynomial {modulus:#b} is reducible")));
        }
        Ok(Field { degree, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, 2^e.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return a & b;
        }
        let mut acc: u64 = 0;
        let (a, mut b) = (a as u64, b);
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let m = self.modulus as u64;
        let d = self.degree;
        for bit in (d..2 * d).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= m << (bit - d);
            }
        }
        acc as Elem
    }

    #[inline]
    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, mut a: Elem, mut exp: u64) -> Elem {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // a^(2^e - 2)
        Ok(self.pow(a, (self.order() - 2) as u64))
    }

    /// Inverse of the Frobenius map, a -> a^(2^(e-1)).
    pub fn sqrt(&self, a: Elem) -> Elem {
        let mut r = a;
        for _ in 1..self.degree {
            r = self.square(r);
        }
        r
    }

    /// Whether elements of `other` can be used verbatim as elements of `self`.
    ///
    /// Only the prime field embeds by bit pattern; other subfields would need an
    /// explicit embedding map.
    pub fn embeds(&self, other: &Field) -> bool {
        other == self || other.is_prime_field()
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::gf2()
    }
}

fn poly_degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b).expect("nonzero divisor");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Exhaustive trial division by every polynomial of degree at most deg/2.
pub fn is_irreducible(p: u32) -> bool {
    let Some(d) = poly_degree(p) else { return false };
    if d == 0 {
        return false;
    }
    (2u32..1 << (d / 2 + 1)).all(|q| poly_rem(p, q) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_one_is_zero() {
        let f = Field::gf2();
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf4_inverse_of_t() {
        let f = Field::with_modulus(2, 0b111).unwrap();
        // t * (t + 1) = t^2 + t = 1 modulo t^2 + t + 1
        assert_eq!(f.mul(0b10, 0b11), 1);
        assert_eq!(f.inv(0b10).unwrap(), 0b11);
    }

    #[test]
    fn unit_is_identity() {
        for e in 1..=8 {
            let f = Field::new(e).unwrap();
            for a in f.elements() {
                assert_eq!(f.mul(a, 1), a);
            }
        }
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(Field::new(3).unwrap().inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn defaults_are_irreducible() {
        for e in 1..=MAX_DEGREE {
            let f = Field::new(e).unwrap();
            assert!(is_irreducible(f.modulus()), "degree {e}");
        }
        assert!(Field::with_modulus(2, 0b101).is_err());
        assert!(Field::with_modulus(3, 0b111).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for e in 1..=3 {
            let f = Field::new(e).unwrap();
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.sqrt(f.square(a)), a);
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_right_order() {
        let f = Field::new(4).unwrap();
        for a in 1..f.order() {
            assert_eq!(f.pow(a, (f.order() - 1) as u64), 1);
        }
    }
}
