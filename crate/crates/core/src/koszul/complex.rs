use std::collections::HashMap;

use crate::envelope::pbw::{monomial_degree, Monomial, Poly, Straightener};
use crate::gf2la::{Elem, Matrix};
use crate::liesuper::LieSuperAlgebra;

/// Basis element `⟨x_S⟩ γ_a(y)` of `Λ(L0) ⊗ Γ(L1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YBar {
    /// Sorted even basis indices.
    pub even: Vec<usize>,
    /// Divided-power exponents, one per odd basis element.
    pub odd: Vec<u16>,
}

impl YBar {
    pub fn degree(&self) -> usize {
        self.even.len() + self.odd.iter().map(|&e| e as usize).sum::<usize>()
    }

    pub fn format(&self, l: &LieSuperAlgebra) -> String {
        let mut parts: Vec<String> = self.even.iter().map(|&i| format!("<{}>", l.name(i))).collect();
        for (j, &e) in self.odd.iter().enumerate() {
            if e > 0 {
                parts.push(format!("g{}({})", e, l.name(l.even_dim() + j)));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of length `len` and total `total`, largest first entry first.
pub fn compositions(len: usize, total: usize) -> Vec<Vec<u16>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(len - 1, total - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// Basis of the degree-`n` piece: larger exterior part first, then subsets in
/// lexicographic order, then exponent vectors in descending lexicographic order.
pub fn ybar_basis(l: &LieSuperAlgebra, n: usize) -> Vec<YBar> {
    let mut out = Vec::new();
    for k in (0..=n.min(l.even_dim())).rev() {
        for s in subsets(l.even_dim(), k) {
            for a in compositions(l.odd_dim(), n - k) {
                out.push(YBar { even: s.clone(), odd: a });
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{i+j=n} C(a, i) C(b+j-1, j)`.
pub fn ybar_dim(even: usize, odd: usize, n: usize) -> usize {
    (0..=n)
        .map(|i| {
            let j = n - i;
            let gamma = if odd == 0 { usize::from(j == 0) } else { binomial(odd + j - 1, j) };
            binomial(even, i) * gamma
        })
        .sum()
}

/// One term `coef · u ⊗ target` of `d(1 ⊗ ȳ)`; `u` is 1 (`None`) or a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffTerm {
    pub coef: Elem,
    pub generator: Option<usize>,
    pub target: YBar,
}

/// `d(1 ⊗ ȳ)` in the Koszul resolution `U(L) ⊗ Λ(L0) ⊗ Γ(L1)`.
pub fn differential_terms(l: &LieSuperAlgebra, y: &YBar) -> Vec<DiffTerm> {
    let e = l.even_dim();
    let mut terms = Vec::new();
    let without = |s: &[usize], drop: &[usize]| -> Vec<usize> { s.iter().copied().filter(|i| !drop.contains(i)).collect() };
    let with = |s: &[usize], g: usize| -> Option<Vec<usize>> {
        if s.contains(&g) {
            None
        } else {
            let mut v = s.to_vec();
            v.push(g);
            v.sort_unstable();
            Some(v)
        }
    };
    // ⟨x_j⟩ contributes x_j
    for &j in &y.even {
        terms.push(DiffTerm { coef: 1, generator: Some(j), target: YBar { even: without(&y.even, &[j]), odd: y.odd.clone() } });
    }
    // γ_r(y_l) contributes y_l γ_{r-1}(y_l)
    for (l_idx, &r) in y.odd.iter().enumerate() {
        if r >= 1 {
            let mut a = y.odd.clone();
            a[l_idx] -= 1;
            terms.push(DiffTerm { coef: 1, generator: Some(e + l_idx), target: YBar { even: y.even.clone(), odd: a } });
        }
    }
    // ⟨x_j⟩⟨x_m⟩ contributes ⟨[x_j, x_m]⟩
    for (p, &j) in y.even.iter().enumerate() {
        for &m in &y.even[p + 1..] {
            let rest = without(&y.even, &[j, m]);
            for (g, &c) in l.bracket_basis(j, m).iter().enumerate() {
                if c != 0 {
                    if let Some(s) = with(&rest, g) {
                        terms.push(DiffTerm { coef: c, generator: None, target: YBar { even: s, odd: y.odd.clone() } });
                    }
                }
            }
        }
    }
    // ⟨x_j⟩ γ(y_l) contributes [x_j, y_l] in the divided powers
    for &j in &y.even {
        let rest = without(&y.even, &[j]);
        for (l_idx, &r) in y.odd.iter().enumerate() {
            if r == 0 {
                continue;
            }
            for (g, &c) in l.bracket_basis(j, e + l_idx).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut a = y.odd.clone();
                a[l_idx] -= 1;
                a[g - e] += 1;
                if a[g - e] % 2 == 1 {
                    terms.push(DiffTerm { coef: c, generator: None, target: YBar { even: rest.clone(), odd: a } });
                }
            }
        }
    }
    // γ(y_l) γ(y_m) contributes ⟨[y_l, y_m]⟩
    for lo in 0..y.odd.len() {
        for mo in lo + 1..y.odd.len() {
            if y.odd[lo] == 0 || y.odd[mo] == 0 {
                continue;
            }
            let mut a = y.odd.clone();
            a[lo] -= 1;
            a[mo] -= 1;
            for (g, &c) in l.bracket_basis(e + lo, e + mo).iter().enumerate() {
                if c != 0 {
                    if let Some(s) = with(&y.even, g) {
                        terms.push(DiffTerm { coef: c, generator: None, target: YBar { even: s, odd: a.clone() } });
                    }
                }
            }
        }
    }
    // γ_r(y_l) contributes ⟨q(y_l)⟩ γ_{r-2}(y_l)
    for (l_idx, &r) in y.odd.iter().enumerate() {
        if r < 2 {
            continue;
        }
        let mut a = y.odd.clone();
        a[l_idx] -= 2;
        for (g, &c) in l.q_basis(l_idx).iter().enumerate() {
            if c != 0 {
                if let Some(s) = with(&y.even, g) {
                    terms.push(DiffTerm { coef: c, generator: None, target: YBar { even: s, odd: a.clone() } });
                }
            }
        }
    }
    terms
}

/// The complex of `Λ(L0) ⊗ Γ(L1)` pieces with differential data up to a degree.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    source: LieSuperAlgebra,
    bases: Vec<Vec<YBar>>,
    index: Vec<HashMap<YBar, usize>>,
    /// `terms[n][k]`: `d(1 ⊗ ȳ)` for the `k`-th basis element of degree `n`, targets as indices.
    terms: Vec<Vec<Vec<(Elem, Option<usize>, usize)>>>,
}

impl KoszulComplex {
    pub fn new(l: &LieSuperAlgebra, max_degree: usize) -> Self {
        let bases: Vec<Vec<YBar>> = (0..=max_degree + 1).map(|n| ybar_basis(l, n)).collect();
        let index: Vec<HashMap<YBar, usize>> =
            bases.iter().map(|b| b.iter().cloned().enumerate().map(|(i, y)| (y, i)).collect()).collect();
        let terms = (0..=max_degree + 1)
            .map(|n| {
                bases[n]
                    .iter()
                    .map(|y| {
                        let mut acc: HashMap<(Option<usize>, usize), Elem> = HashMap::new();
                        for t in differential_terms(l, y) {
                            let k = index[n - 1][&t.target];
                            *acc.entry((t.generator, k)).or_insert(0) ^= t.coef;
                        }
                        let mut v: Vec<(Elem, Option<usize>, usize)> =
                            acc.into_iter().filter(|&(_, c)| c != 0).map(|((g, k), c)| (c, g, k)).collect();
                        v.sort_by_key(|&(_, g, k)| (g, k));
                        v
                    })
                    .collect()
            })
            .collect();
        KoszulComplex { source: l.clone(), bases, index, terms }
    }

    pub fn source(&self) -> &LieSuperAlgebra {
        &self.source
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 2
    }

    pub fn basis(&self, n: usize) -> &[YBar] {
        &self.bases[n]
    }

    pub fn index_of(&self, n: usize, y: &YBar) -> Option<usize> {
        self.index[n].get(y).copied()
    }

    /// Terms of `d(1 ⊗ ȳ_k)` for `ȳ_k` of degree `n >= 1`.
    pub fn terms(&self, n: usize, k: usize) -> &[(Elem, Option<usize>, usize)] {
        &self.terms[n][k]
    }
}

fn u_poly(st: &Straightener, g: Option<usize>) -> Poly {
    Straightener::monomial_poly(match g {
        None => st.one(),
        Some(i) => st.generator(i),
    })
}

/// First basis element of degree `2..=max_degree` with `d(d(1 ⊗ ȳ)) != 0`.
pub fn d_squared_violation(cx: &KoszulComplex) -> Option<(usize, YBar)> {
    let l = cx.source();
    let f = l.field();
    let mut st = Straightener::new(l, false);
    for n in 2..=cx.max_degree() {
        for (k, y) in cx.basis(n).iter().enumerate() {
            let mut acc: HashMap<(Monomial, usize), Elem> = HashMap::new();
            for &(c, g, t) in cx.terms(n, k) {
                for &(c2, g2, t2) in cx.terms(n - 1, t) {
                    let a = u_poly(&st, g);
                    let b = u_poly(&st, g2);
                    for (m, &cm) in &st.mul(&a, &b) {
                        *acc.entry((m.clone(), t2)).or_insert(0) ^= f.mul(f.mul(c, c2), cm);
                    }
                }
            }
            if acc.values().any(|&c| c != 0) {
                return Some((n, y.clone()));
            }
        }
    }
    None
}

/// Ordered PBW monomials of U(L) (odd exponents at most 1) of degree at most `max`.
pub fn u_monomials(l: &LieSuperAlgebra, max: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max {
        for m in compositions(l.dim(), d) {
            if l.odd_indices().all(|i| m[i] <= 1) {
                out.push(m);
            }
        }
    }
    out
}

/// Ranks and piece dimensions of the augmented complex restricted to the
/// filtration level `F_t` (total degree of `u ⊗ ȳ` at most `t`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredExactness {
    pub level: usize,
    /// `dims[n] = dim(F_t ∩ Y_n)`.
    pub dims: Vec<usize>,
    /// `ranks[n]` = rank of `Y_n -> Y_{n-1}`; `ranks[0]` is the rank of the augmentation.
    pub ranks: Vec<usize>,
}

impl FilteredExactness {
    pub fn is_exact(&self) -> bool {
        self.ranks[0] == 1
            && (0..self.dims.len()).all(|n| self.dims[n] == self.ranks[n] + self.ranks.get(n + 1).copied().unwrap_or(0))
    }
}

/// Exactness data for the filtration level `t` (needs `cx.max_degree() >= t`).
pub fn filtered_exactness(cx: &KoszulComplex, t: usize) -> FilteredExactness {
    let l = cx.source();
    let f = l.field();
    let mut st = Straightener::new(l, false);
    let monos = u_monomials(l, t);
    let pieces: Vec<Vec<(usize, usize)>> = (0..=t)
        .map(|n| {
            let mut v = Vec::new();
            for (mi, m) in monos.iter().enumerate() {
                if monomial_degree(m) + n <= t {
                    for k in 0..cx.basis(n).len() {
                        v.push((mi, k));
                    }
                }
            }
            v
        })
        .collect();
    let mono_index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dims: Vec<usize> = pieces.iter().map(|p| p.len()).collect();
    let mut ranks = vec![1usize];
    for n in 1..=t {
        let row_index: HashMap<(usize, usize), usize> = pieces[n - 1].iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut mat = Matrix::zeros(f, pieces[n - 1].len(), pieces[n].len());
        for (col, &(mi, k)) in pieces[n].iter().enumerate() {
            let m = Straightener::monomial_poly(monos[mi].clone());
            for &(c, g, target) in cx.terms(n, k) {
                let prod = st.mul(&m, &u_poly(&st, g));
                for (pm, &pc) in &prod {
                    let row = row_index[&(mono_index[pm], target)];
                    mat.add_to(row, col, f.mul(c, pc));
                }
            }
        }
        ranks.push(mat.rank());
    }
    FilteredExactness { level: t, dims, ranks }
}
