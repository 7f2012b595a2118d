use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{malformed, Result};

/// Exponent vector, ordered graded-lexicographically with the first variable largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Product of the variables dividing this monomial.
    pub fn support(&self) -> Mono {
        Mono(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over GF(2): the set of its monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(pub BTreeSet<Mono>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeSet::new())
    }

    pub fn mono(m: Mono) -> Self {
        Poly(BTreeSet::from([m]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn leading(&self) -> Option<&Mono> {
        self.0.last()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Mono> {
        self.0.iter()
    }

    pub fn add_mono(&mut self, m: Mono) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for m in &other.0 {
            self.add_mono(m.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly(self.0.iter().map(|t| t.mul(m)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.add_mono(a.mul(b));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let n_vars = self.0.iter().next().map_or(0, |m| m.0.len());
        let mut out = Poly::mono(Mono::one(n_vars));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn is_monomial(&self) -> bool {
        self.0.len() == 1
    }
}

/// Polynomial ring over GF(2) graded by `ℕ × ℤ/2`; every variable has positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    parities: Vec<u8>,
}

impl BigradedRing {
    pub fn new(names: Vec<String>, degrees: Vec<u32>, parities: Vec<u8>) -> Result<Self> {
        if names.len() != degrees.len() || names.len() != parities.len() {
            return Err(malformed("variable names, degrees and parities differ in length"));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(malformed("variables must have positive degree"));
        }
        if parities.iter().any(|&p| p > 1) {
            return Err(malformed("parities must be 0 or 1"));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() || names.iter().any(|n| n.is_empty() || !n.chars().all(char::is_alphanumeric)) {
            return Err(malformed("variable names must be unique and alphanumeric"));
        }
        Ok(BigradedRing { names, degrees, parities })
    }

    /// Variables `a, b, c, ...` of degree one with the given parities.
    pub fn standard(parities: &[u8]) -> Self {
        let names = (0..parities.len()).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Self::new(names, vec![1; parities.len()], parities.to_vec()).expect("valid standard ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn one(&self) -> Poly {
        Poly::mono(Mono::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::mono(Mono::var(self.nvars(), i))
    }

    pub fn bidegree(&self, m: &Mono) -> (u32, u8) {
        let deg = m.0.iter().zip(&self.degrees).map(|(&e, &d)| e as u32 * d).sum();
        let par = m.0.iter().zip(&self.parities).map(|(&e, &p)| (e as u32 * p as u32) as u8).fold(0, |a, b| (a + b) & 1);
        (deg, par)
    }

    /// Bidegree of a nonzero polynomial whose terms all share one.
    pub fn bidegree_of(&self, f: &Poly) -> Option<(u32, u8)> {
        let mut it = f.terms().map(|m| self.bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn is_bihomogeneous(&self, f: &Poly) -> bool {
        f.is_zero() || self.bidegree_of(f).is_some()
    }

    pub fn is_homogeneous(&self, f: &Poly) -> bool {
        let mut degs = f.terms().map(|m| self.bidegree(m).0);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Monomials of weighted degree `n` and parity `p`, in increasing order.
    pub fn monomials(&self, n: u32, p: u8) -> Vec<Mono> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.nvars()];
        self.fill(0, n, &mut cur, &mut out);
        out.retain(|m| self.bidegree(m).1 == p);
        out.sort();
        out
    }

    fn fill(&self, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Mono>) {
        if i == self.nvars() {
            if left == 0 {
                out.push(Mono(cur.clone()));
            }
            return;
        }
        let d = self.degrees[i];
        for e in 0..=left / d {
            cur[i] = e as u16;
            self.fill(i + 1, left - e * d, cur, out);
        }
        cur[i] = 0;
    }

    pub fn format(&self, f: &Poly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = f.terms().rev().map(|m| self.format_mono(m)).collect();
        terms.join(" + ")
    }

    pub fn format_mono(&self, m: &Mono) -> String {
        if m.is_one() {
            return "1".into();
        }
        let factors: Vec<String> = m
            .variables()
            .map(|i| if m.0[i] == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], m.0[i]) })
            .collect();
        factors.join("*")
    }

    /// Parses sums of products such as `a^2 + b*c + 1`.
    pub fn parse(&self, s: &str) -> Result<Poly> {
        let mut out = Poly::zero();
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let mut m = Mono::one(self.nvars());
            let term = term.trim();
            if term.is_empty() {
                return Err(malformed(format!("empty term in '{s}'")));
            }
            if term != "1" {
                for factor in term.split('*') {
                    let (name, exp) = match factor.trim().split_once('^') {
                        Some((n, e)) => (n.trim(), e.trim().parse::<u16>().map_err(|_| malformed(format!("bad exponent in '{factor}'")))?),
                        None => (factor.trim(), 1),
                    };
                    let i = self.names.iter().position(|v| v == name).ok_or_else(|| malformed(format!("unknown variable '{name}'")))?;
                    m.0[i] += exp;
                }
            }
            out.add_mono(m);
        }
        Ok(out)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
