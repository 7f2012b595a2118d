use super::poly::{BigradedRing, Mono, Poly};
use crate::error::{malformed, Error, Result};
use crate::gf2la::{Field, Matrix};

/// Default degree cap for the capped searches.
pub const DEFAULT_DEGREE_CAP: u32 = 6;

/// Largest quotient-space dimension enumerated element by element.
const MAX_ENUMERATED_DIM: usize = 20;

/// Full normal form of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Poly, gb: &[Poly]) -> Poly {
    let mut rest = f.clone();
    let mut out = Poly::zero();
    while let Some(lt) = rest.leading().cloned() {
        match gb.iter().find(|g| g.leading().is_some_and(|lg| lg.divides(&lt))) {
            Some(g) => rest.add_assign(&g.mul_mono(&g.leading().expect("nonzero").quotient_of(&lt))),
            None => {
                rest.0.remove(&lt);
                out.0.insert(lt);
            }
        }
    }
    out
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (lf, lg) = (f.leading().expect("nonzero"), g.leading().expect("nonzero"));
    let l = lf.lcm(lg);
    f.mul_mono(&lf.quotient_of(&l)).add(&g.mul_mono(&lg.quotient_of(&l)))
}

/// Reduced Gröbner basis for the graded-lex order, sorted by leading monomial.
pub fn groebner_basis(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        if basis[i].leading().expect("nonzero").is_coprime(basis[j].leading().expect("nonzero")) {
            continue;
        }
        let r = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimal, then reduced
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(t, h)| {
            let lh = h.leading().expect("nonzero");
            t != k && lh.divides(lg) && (lh != lg || t < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Poly> = minimal.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, h)| h.clone()).collect();
            let lead = minimal[k].leading().expect("nonzero").clone();
            let mut tail = minimal[k].clone();
            tail.0.remove(&lead);
            let mut g = normal_form(&tail, &others);
            g.0.insert(lead);
            g
        })
        .collect();
    reduced.sort_by(|a, b| a.leading().cmp(&b.leading()));
    reduced
}

/// An ideal of a bigraded polynomial ring with its reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: BigradedRing,
    gens: Vec<Poly>,
    gb: Vec<Poly>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb == other.gb
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: &BigradedRing, gens: Vec<Poly>) -> Result<Self> {
        if gens.iter().flat_map(|g| g.terms()).any(|m| m.0.len() != ring.nvars()) {
            return Err(malformed("polynomial has the wrong number of variables"));
        }
        let gb = groebner_basis(&gens);
        Ok(Ideal { ring: ring.clone(), gens, gb })
    }

    pub fn parse(ring: &BigradedRing, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &BigradedRing) -> Self {
        Ideal { ring: ring.clone(), gens: vec![], gb: vec![] }
    }

    pub fn unit(ring: &BigradedRing) -> Self {
        Self::new(ring, vec![ring.one()]).expect("valid")
    }

    /// The ideal of positive-degree elements.
    pub fn maximal(ring: &BigradedRing) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect()).expect("valid")
    }

    pub fn ring(&self) -> &BigradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn groebner(&self) -> &[Poly] {
        &self.gb
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, &self.gb)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gb.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.gb.iter().any(|g| g.leading().is_some_and(Mono::is_one))
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gb.iter().all(Poly::is_monomial)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.gb.iter().all(|g| self.ring.is_bihomogeneous(g))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gb.iter().all(|g| self.ring.is_homogeneous(g))
    }

    /// Contained in the ideal of positive-degree elements.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let gens = self.gb.iter().chain(&other.gb).cloned().collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self.gb.iter().flat_map(|f| other.gb.iter().map(move |g| f.mul(g))).collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn add_generator(&self, f: Poly) -> Ideal {
        let mut gens = self.gb.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// Quotient basis in one space: monomials of `space` not divisible by a leading term.
    fn standard_monomials(&self, space: Vec<Mono>) -> Vec<Mono> {
        space.into_iter().filter(|m| !self.gb.iter().any(|g| g.leading().is_some_and(|l| l.divides(m)))).collect()
    }

    /// Is every generator a single variable (or is the ideal zero)?
    pub fn is_linear(&self) -> bool {
        self.gb.iter().all(|g| g.terms().all(|m| m.total_degree() == 1))
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gb.iter().map(|g| self.ring.format(g)).collect();
        format!("({})", parts.join(", "))
    }
}

pub fn ideal_member(f: &Poly, ideal: &Ideal) -> bool {
    ideal.contains(f)
}

/// All nonzero GF(2)-combinations of a basis.
fn combinations(basis: &[Mono]) -> Result<impl Iterator<Item = Poly> + '_> {
    if basis.len() > MAX_ENUMERATED_DIM {
        return Err(Error::LimitExceeded { what: "quotient space dimension".into(), limit: MAX_ENUMERATED_DIM as u64 });
    }
    Ok((1u32..(1 << basis.len())).map(move |bits| {
        Poly(basis.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, m)| m.clone()).collect())
    }))
}

/// The bi-homogeneous elements of `I` of bidegree `(n, p)`, as a basis.
fn bihomogeneous_slice(ideal: &Ideal, n: u32, p: u8) -> Vec<Poly> {
    let space = ideal.ring.monomials(n, p);
    let images: Vec<Poly> = space.iter().map(|m| ideal.normal_form(&Poly::mono(m.clone()))).collect();
    let mut rows: Vec<Mono> = images.iter().flat_map(|f| f.terms().cloned()).collect();
    rows.sort();
    rows.dedup();
    let f2 = Field::gf2();
    let mut mat = Matrix::zeros(f2, rows.len(), space.len());
    for (c, img) in images.iter().enumerate() {
        for m in img.terms() {
            mat.set(rows.binary_search(m).expect("collected"), c, 1);
        }
    }
    mat.kernel()
        .into_iter()
        .map(|k| Poly(space.iter().zip(&k).filter(|(_, &c)| c != 0).map(|(m, _)| m.clone()).collect()))
        .collect()
}

/// The largest bi-homogeneous subideal, generated degree by degree up to a cap.
#[derive(Clone, Debug)]
pub struct BihomogeneousPart {
    pub ideal: Ideal,
    pub cap: u32,
    /// Highest degree at which a new generator appeared.
    pub last_new_degree: Option<u32>,
    /// No new generators over the last `⌈cap/3⌉` degrees.
    pub stabilized: bool,
}

pub fn bihomogeneous_part(ideal: &Ideal, cap: u32) -> BihomogeneousPart {
    let ring = &ideal.ring;
    let mut part = Ideal::zero(ring);
    let mut last_new_degree = None;
    for n in 0..=cap {
        let mut added = Vec::new();
        for p in 0..2u8 {
            let mut seen: Vec<Poly> = Vec::new();
            for b in bihomogeneous_slice(ideal, n, p) {
                let r = part.normal_form(&b);
                if r.is_zero() {
                    continue;
                }
                // keep b only if its residue is independent of those already kept
                let mut reduced = r;
                loop {
                    let Some(lt) = reduced.leading().cloned() else { break };
                    match seen.iter().find(|s| s.leading() == Some(&lt)) {
                        Some(s) => reduced.add_assign(s),
                        None => break,
                    }
                }
                if !reduced.is_zero() {
                    seen.push(reduced);
                    added.push(b);
                }
            }
        }
        if !added.is_empty() {
            last_new_degree = Some(n);
            let mut gens = part.gb.clone();
            gens.extend(added);
            part = Ideal::new(ring, gens).expect("same ring");
        }
    }
    let margin = cap.div_ceil(3);
    let stabilized = last_new_degree.is_none_or(|d| d + margin <= cap);
    BihomogeneousPart { ideal: part, cap, last_new_degree, stabilized }
}

/// Outcome of the s-primality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SPrimeVerdict {
    /// Decided exactly (monomial ideals).
    Prime,
    /// No witness among bi-homogeneous elements of degree at most the cap.
    TrueUpToCap(u32),
    /// Not s-prime; the witness pair is absent for the unit ideal.
    NotPrime(Option<(Poly, Poly)>),
}

impl SPrimeVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, SPrimeVerdict::NotPrime(_))
    }
}

pub fn is_s_prime(p: &Ideal, cap: u32) -> Result<SPrimeVerdict> {
    if !p.is_bihomogeneous() {
        return Err(malformed("ideal is not bi-homogeneous"));
    }
    if p.is_unit() {
        return Ok(SPrimeVerdict::NotPrime(None));
    }
    if p.is_monomial() {
        let n = p.ring.nvars();
        return Ok(match p.gb.iter().map(|g| g.leading().expect("nonzero")).find(|m| m.total_degree() > 1) {
            None => SPrimeVerdict::Prime,
            Some(m) => {
                let x = Mono::var(n, m.variables().next().expect("positive degree"));
                SPrimeVerdict::NotPrime(Some((Poly::mono(x.clone()), Poly::mono(x.quotient_of(m)))))
            }
        });
    }
    is_s_prime_capped(p, cap)
}

/// Exhaustive search for bi-homogeneous `a, b` outside `P` with `ab` in `P`.
pub fn is_s_prime_capped(p: &Ideal, cap: u32) -> Result<SPrimeVerdict> {
    if p.is_unit() {
        return Ok(SPrimeVerdict::NotPrime(None));
    }
    let mut spaces: Vec<Vec<Poly>> = Vec::new();
    for n in 1..=cap {
        for par in 0..2u8 {
            let basis = p.standard_monomials(p.ring.monomials(n, par));
            spaces.push(combinations(&basis)?.collect());
        }
    }
    for (i, sa) in spaces.iter().enumerate() {
        for sb in &spaces[i..] {
            for a in sa {
                for b in sb {
                    if p.contains(&a.mul(b)) {
                        return Ok(SPrimeVerdict::NotPrime(Some((a.clone(), b.clone()))));
                    }
                }
            }
        }
    }
    Ok(SPrimeVerdict::TrueUpToCap(cap))
}

/// Radical of a monomial ideal: supports of the generators.
fn monomial_radical(ideal: &Ideal) -> Ideal {
    let gens = ideal.gb.iter().map(|g| Poly::mono(g.leading().expect("nonzero").support())).collect();
    Ideal::new(&ideal.ring, gens).expect("same ring")
}

/// Adds every element `a` of the searched spaces with `a^cap` in the ideal, until none is left.
fn close_under_roots(start: Ideal, cap: u32, max_degree: u32, split_parity: bool) -> Result<Ideal> {
    let mut cur = start;
    'outer: loop {
        for n in 1..=max_degree {
            let spaces: Vec<Vec<Mono>> = if split_parity {
                (0..2u8).map(|par| cur.ring.monomials(n, par)).collect()
            } else {
                let mut all = cur.ring.monomials(n, 0);
                all.extend(cur.ring.monomials(n, 1));
                all.sort();
                vec![all]
            };
            for space in spaces {
                let basis = cur.standard_monomials(space);
                for a in combinations(&basis)? {
                    if cur.contains(&a.pow(cap)) {
                        cur = cur.add_generator(a);
                        continue 'outer;
                    }
                }
            }
        }
        return Ok(cur);
    }
}

fn search_degree(ideal: &Ideal, cap: u32) -> u32 {
    let top = ideal.gb.iter().map(|g| ideal.ring.bidegree(g.leading().expect("nonzero")).0).max().unwrap_or(0);
    top.min(cap).max(1)
}

/// The largest bi-homogeneous subideal of the radical. Exact for monomial
/// ideals; otherwise roots of degree at most the generator degrees and powers
/// at most `cap` are adjoined to the bi-homogeneous part.
pub fn s_radical(ideal: &Ideal, cap: u32) -> Result<Ideal> {
    if ideal.is_monomial() {
        return Ok(monomial_radical(ideal));
    }
    let part = bihomogeneous_part(ideal, cap).ideal;
    let d = search_degree(&part, cap);
    close_under_roots(part, cap, d, true)
}

/// Radical of an ℕ-homogeneous ideal by the same capped root search.
pub fn radical_capped(ideal: &Ideal, cap: u32) -> Result<Ideal> {
    if ideal.is_monomial() {
        return Ok(monomial_radical(ideal));
    }
    if !ideal.is_homogeneous() {
        return Err(malformed("ideal is not homogeneous"));
    }
    let d = search_degree(ideal, cap);
    close_under_roots(ideal.clone(), cap, d, false)
}

/// Relation between the zero sets `Z_s(I)` and `Z_s(J)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZsRelation {
    Equal,
    /// `Z_s(I) ⊊ Z_s(J)`.
    FirstInSecond,
    /// `Z_s(J) ⊊ Z_s(I)`.
    SecondInFirst,
    Incomparable,
}

impl ZsRelation {
    pub fn label(self) -> &'static str {
        match self {
            ZsRelation::Equal => "equal",
            ZsRelation::FirstInSecond => "first-in-second",
            ZsRelation::SecondInFirst => "second-in-first",
            ZsRelation::Incomparable => "incomparable",
        }
    }
}

/// s-radical with every ideal containing all variables replaced by the unit
/// ideal; both have empty zero set.
pub fn saturated_s_radical(ideal: &Ideal, cap: u32) -> Result<Ideal> {
    let r = s_radical(ideal, cap)?;
    Ok(if r.contains_ideal(&Ideal::maximal(&ideal.ring)) { Ideal::unit(&ideal.ring) } else { r })
}

/// Compares zero sets through containment of saturated s-radicals.
pub fn zs_compare(i: &Ideal, j: &Ideal, cap: u32) -> Result<ZsRelation> {
    if !i.is_bihomogeneous() || !j.is_bihomogeneous() {
        return Err(malformed("ideal is not bi-homogeneous"));
    }
    let (ri, rj) = (saturated_s_radical(i, cap)?, saturated_s_radical(j, cap)?);
    // larger radical, smaller zero set
    Ok(match (ri.contains_ideal(&rj), rj.contains_ideal(&ri)) {
        (true, true) => ZsRelation::Equal,
        (true, false) => ZsRelation::FirstInSecond,
        (false, true) => ZsRelation::SecondInFirst,
        (false, false) => ZsRelation::Incomparable,
    })
}
