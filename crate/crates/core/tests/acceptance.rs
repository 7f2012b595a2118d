//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superlie::envelope::random::random_module;
use superlie::envelope::{build_vl, ext_dims_vl, is_projective_vl, ModuleMode, PbwAlgebra, SuperModule};
use superlie::koszul::{cohomology_dims_u, d_squared_violation, filtered_exactness, KoszulComplex};
use superlie::liesuper::fixtures::{self, a1, a2, a3, a4, e2};
use superlie::liesuper::random::random_restricted;
use superlie::liesuper::{flatten_to_restricted, validate_all};
use superlie::projs::{
    bihomogeneous_part, is_s_prime, is_s_prime_capped, monomial_lattice_suite, projs_property_suite, sum_fixture,
    BigradedRing, Ideal, MonomialIdeal, SPrimeVerdict,
};
use superlie::varieties::{
    carlson_module, check_zero_locus, detect_non_free_point, finite_projdim_ul, odd_nullcone, restricted_nullcone,
    support_datum_suite, support_points_vl, tensor_property_check, FormProduct, PointSet,
};
use superlie::{Elem, Field, LieSuperAlgebra};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

// ---------------------------------------------------------------------------
// Brute-force structure oracle, written from the definitions over the raw
// structure constants.

fn vectors(f: Field, n: usize) -> Vec<Vec<Elem>> {
    let q = f.order() as usize;
    (0..q.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let c = (k % q) as Elem;
                    k /= q;
                    c
                })
                .collect()
        })
        .collect()
}

fn add(u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    u.iter().zip(v).map(|(a, b)| a ^ b).collect()
}

fn scale_add(f: Field, acc: &mut [Elem], c: Elem, v: &[Elem]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a ^= f.mul(c, b);
    }
}

fn br(l: &LieSuperAlgebra, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    let f = l.field();
    let mut out = vec![0; l.dim()];
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let c = f.mul(u[i], v[j]);
            if c != 0 {
                scale_add(f, &mut out, c, l.bracket_basis(i, j));
            }
        }
    }
    out
}

/// `Σ c_i^2 s(e_i) + Σ_{i<j} c_i c_j [e_i, e_j]` over the given indices.
fn quadratic(l: &LieSuperAlgebra, z: &[Elem], idx: std::ops::Range<usize>, s: impl Fn(usize) -> Vec<Elem>) -> Vec<Elem> {
    let f = l.field();
    let mut out = vec![0; l.dim()];
    for i in idx.clone() {
        scale_add(f, &mut out, f.mul(z[i], z[i]), &s(i));
        for j in i + 1..idx.end {
            scale_add(f, &mut out, f.mul(z[i], z[j]), l.bracket_basis(i, j));
        }
    }
    out
}

fn oracle_q(l: &LieSuperAlgebra, y: &[Elem]) -> Vec<Elem> {
    let a = l.even_dim();
    quadratic(l, y, l.odd_indices(), |i| l.q_basis(i - a).to_vec())
}

fn oracle_two_map(l: &LieSuperAlgebra, x: &[Elem]) -> Vec<Elem> {
    quadratic(l, x, l.even_indices(), |i| l.two_map_basis(i).expect("restricted").to_vec())
}

fn is_zero(v: &[Elem]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn has_parity(l: &LieSuperAlgebra, v: &[Elem], odd: bool) -> bool {
    (0..l.dim()).all(|k| v[k] == 0 || l.is_odd(k) == odd)
}

/// Whether the algebra (over a small field) satisfies every axiom, checked on all elements.
fn oracle_valid(l: &LieSuperAlgebra) -> bool {
    let n = l.dim();
    let basis: Vec<Vec<Elem>> = (0..n).map(|i| l.basis_vector(i)).collect();
    let all = vectors(l.field(), n);
    let even: Vec<&Vec<Elem>> = all.iter().filter(|v| has_parity(l, v, false)).collect();
    let odd: Vec<&Vec<Elem>> = all.iter().filter(|v| has_parity(l, v, true)).collect();

    for i in 0..n {
        for j in 0..n {
            if l.bracket_basis(i, j) != l.bracket_basis(j, i) {
                return false;
            }
            if !has_parity(l, l.bracket_basis(i, j), l.is_odd(i) ^ l.is_odd(j)) {
                return false;
            }
        }
    }
    for j in 0..l.odd_dim() {
        if !has_parity(l, l.q_basis(j), false) {
            return false;
        }
    }
    for a in &all {
        for b in &all {
            for c in &all {
                let t = add(&add(&br(l, a, &br(l, b, c)), &br(l, b, &br(l, c, a))), &br(l, c, &br(l, a, b)));
                if !is_zero(&t) {
                    return false;
                }
            }
        }
    }
    if even.iter().any(|x| !is_zero(&br(l, x, x))) || odd.iter().any(|y| !is_zero(&br(l, y, y))) {
        return false;
    }
    for y in &odd {
        let qy = oracle_q(l, y);
        if !is_zero(&br(l, &qy, y)) {
            return false;
        }
        if basis.iter().any(|v| br(l, y, &br(l, y, v)) != br(l, &qy, v)) {
            return false;
        }
    }
    if l.is_restricted() {
        for i in l.even_indices() {
            if !has_parity(l, l.two_map_basis(i).unwrap(), false) {
                return false;
            }
        }
        for x in &even {
            let sq = oracle_two_map(l, x);
            if basis.iter().any(|v| br(l, x, &br(l, x, v)) != br(l, &sq, v)) {
                return false;
            }
            for s in l.field().elements() {
                let sx: Vec<Elem> = x.iter().map(|&c| l.field().mul(s, c)).collect();
                let want: Vec<Elem> = sq.iter().map(|&c| l.field().mul(l.field().square(s), c)).collect();
                if oracle_two_map(l, &sx) != want {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (mut bracket, mut caught, mut benign) = (0, 0, 0);
    for (name, l) in fixtures::all() {
        let n = l.dim();
        let mut corrupted: Vec<(bool, LieSuperAlgebra)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut bad = l.clone();
                    bad.set_bracket_entry(i, j, k, l.bracket_basis(i, j)[k] ^ 1);
                    corrupted.push((true, bad));
                }
            }
        }
        for j in 0..l.odd_dim() {
            for k in 0..n {
                let mut v = l.q_basis(j).to_vec();
                v[k] ^= 1;
                let mut bad = l.clone();
                bad.set_q(j, &v);
                corrupted.push((false, bad));
            }
        }
        for i in l.even_indices() {
            for k in 0..n {
                let mut v = l.two_map_basis(i).unwrap().to_vec();
                v[k] ^= 1;
                let mut bad = l.clone();
                bad.set_two_map(i, &v);
                corrupted.push((false, bad));
            }
        }
        ensure(validate_all(&l).map_err(|e| e.to_string())?.is_valid() && oracle_valid(&l), || format!("{name} invalid"))?;
        for (is_bracket, bad) in corrupted {
            let rep = validate_all(&bad).map_err(|e| e.to_string())?;
            let flagged = !rep.is_valid();
            ensure(rep.violations().all(|c| c.witness.is_some()), || format!("{name}: violation without witness"))?;
            ensure(flagged != oracle_valid(&bad), || format!("{name}: validator and oracle disagree on {bad:?}"))?;
            if is_bracket {
                bracket += 1;
                ensure(flagged, || format!("{name}: bracket corruption missed"))?;
            }
            if flagged {
                caught += 1;
            } else {
                benign += 1;
            }
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "{caught} corruptions caught with witnesses ({bracket} bracket entries); {benign} q/2-map edits yield valid algebras, confirmed by brute force"
    ))
}

fn oracle_two_op(l: &LieSuperAlgebra, z: &[Elem]) -> Vec<Elem> {
    let a = l.even_dim();
    let mut z0 = z.to_vec();
    z0[a..].iter_mut().for_each(|c| *c = 0);
    let mut z1 = z.to_vec();
    z1[..a].iter_mut().for_each(|c| *c = 0);
    add(&add(&oracle_two_map(l, &z0), &oracle_q(l, &z1)), &br(l, &z1, &z0))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut algs = vec![a1(), a2(), a3(), a4()];
    for k in 0..50 {
        let field = if k % 2 == 0 { Field::gf2() } else { Field::new(2).unwrap() };
        algs.push(random_restricted(&mut rng, field, 2, 2));
    }
    for l in &algs {
        let fl = flatten_to_restricted(l).map_err(|e| e.to_string())?;
        ensure(fl.report().is_valid(), || format!("flattening of {l:?} fails its axioms"))?;
        for z in vectors(l.field(), l.dim()) {
            ensure(fl.two_op(&z) == oracle_two_op(l, &z), || format!("2-operation differs at {z:?} on {l:?}"))?;
        }
        let v = build_vl(l).map_err(|e| e.to_string())?;
        let w = build_vl(&fl.as_even_algebra()).map_err(|e| e.to_string())?;
        ensure(v.mult_table() == w.mult_table(), || format!("multiplication tables differ on {l:?}"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{} algebras: flattened data restricted, 2-operation matches, tables identical", algs.len()))
}

fn unit(d: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn embed(v: &PbwAlgebra, z: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; v.dim()];
    for (i, &c) in z.iter().enumerate() {
        out[v.generator_mask(i)] ^= c;
    }
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut algs: Vec<LieSuperAlgebra> = fixtures::all().into_iter().map(|(_, l)| l).collect();
    let mut six = 0;
    while algs.len() < 25 || six < 4 {
        let field = if rng.gen_bool(0.75) { Field::gf2() } else { Field::new(2).unwrap() };
        let l = random_restricted(&mut rng, field, 3, 3);
        six += usize::from(l.dim() == 6);
        algs.push(l);
    }
    let mut triples = 0u64;
    for l in &algs {
        let v = build_vl(l).map_err(|e| e.to_string())?;
        let d = v.dim();
        ensure(d == 1 << l.dim(), || format!("dim V(L) = {d} for dim L = {}", l.dim()))?;
        let prod = |a: &[Elem], b: &[Elem]| v.mul(a, b);
        for a in 0..d {
            for b in 0..d {
                let ab = prod(&unit(d, a), &unit(d, b));
                for c in 0..d {
                    let lhs = prod(&ab, &unit(d, c));
                    let rhs = prod(&unit(d, a), &prod(&unit(d, b), &unit(d, c)));
                    ensure(lhs == rhs, || format!("({a}*{b})*{c} != {a}*({b}*{c}) on {l:?}"))?;
                    triples += 1;
                }
            }
        }
        // defining relations
        for i in 0..l.dim() {
            let ei = embed(&v, &l.basis_vector(i));
            let square = if l.is_odd(i) { oracle_q(l, &l.basis_vector(i)) } else { oracle_two_map(l, &l.basis_vector(i)) };
            ensure(prod(&ei, &ei) == embed(&v, &square), || format!("square of generator {i} on {l:?}"))?;
            for j in 0..l.dim() {
                let ej = embed(&v, &l.basis_vector(j));
                let comm = add(&prod(&ei, &ej), &prod(&ej, &ei));
                let want = if i == j { vec![0; d] } else { embed(&v, l.bracket_basis(i, j)) };
                ensure(comm == want, || format!("commutator ({i},{j}) on {l:?}"))?;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} algebras ({six} of dimension 6): PBW dimension, {triples} associativity triples, relations", algs.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut algs: Vec<LieSuperAlgebra> = fixtures::all().into_iter().map(|(_, l)| l).collect();
    for k in 0..12 {
        let field = if k % 4 == 3 { Field::new(2).unwrap() } else { Field::gf2() };
        algs.push(random_restricted(&mut rng, field, 2, 2));
    }
    for l in &algs {
        let cx = KoszulComplex::new(l, 6);
        if let Some((n, y)) = d_squared_violation(&cx) {
            return Err(format!("d^2 != 0 in degree {n} at {} on {l:?}", y.format(l)));
        }
        for t in 0..=6 {
            let ex = filtered_exactness(&cx, t);
            ensure(ex.is_exact(), || format!("not exact at level {t}: {ex:?} on {l:?}"))?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} algebras: d^2 = 0 and exactness through internal degree 6", algs.len()))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_5() -> Outcome {
    let err = |e: superlie::Error| e.to_string();
    let k = |l: &LieSuperAlgebra, mode| SuperModule::trivial(l, mode);
    let (l1, l2, le) = (a1(), a2(), e2());
    let u1 = cohomology_dims_u(&l1, &k(&l1, ModuleMode::U), &k(&l1, ModuleMode::U), 5).map_err(err)?;
    let v1 = ext_dims_vl(&build_vl(&l1).map_err(err)?, &k(&l1, ModuleMode::V), &k(&l1, ModuleMode::V), 5).map_err(err)?;
    ensure(u1 == vec![1; 6] && v1 == u1, || format!("(a) U: {u1:?}, V: {v1:?}"))?;
    // U(A2) is k[y] with y^2 = x; Ext of k over a polynomial ring in one variable
    let u2 = cohomology_dims_u(&l2, &k(&l2, ModuleMode::U), &k(&l2, ModuleMode::U), 5).map_err(err)?;
    ensure(u2 == vec![1, 1, 0, 0, 0, 0], || format!("(b) {u2:?}"))?;
    let ue = cohomology_dims_u(&le, &k(&le, ModuleMode::U), &k(&le, ModuleMode::U), 3).map_err(err)?;
    let exterior: Vec<usize> = (0..=3).map(|n| binomial(2, n)).collect();
    ensure(ue == exterior, || format!("(c) {ue:?} vs {exterior:?}"))?;
    // V(A2) is k[y]/(y^4)
    let v2 = ext_dims_vl(&build_vl(&l2).map_err(err)?, &k(&l2, ModuleMode::V), &k(&l2, ModuleMode::V), 3).map_err(err)?;
    ensure(v2 == vec![1; 4], || format!("(d) {v2:?}"))?;
    Ok(format!("A1 {u1:?} (U = V), A2 U {u2:?}, (2|0) {ue:?}, A2 V {v2:?}"))
}

/// Points with `z^{2} = 0`, by enumeration over GF(2^e).
fn oracle_nullcone(l: &LieSuperAlgebra, e: u32) -> Vec<Vec<Elem>> {
    let f = if l.field().degree() == e { l.field() } else { Field::new(e).unwrap() };
    let le = l.extend_to(f).unwrap();
    let mut pts: Vec<Vec<Elem>> = vectors(f, l.dim()).into_iter().filter(|z| is_zero(&oracle_two_op(&le, z))).collect();
    pts.sort();
    pts
}

fn criterion_6() -> Outcome {
    let err = |e: superlie::Error| e.to_string();
    let pts = |s: PointSet| s.points;
    ensure(pts(restricted_nullcone(&a2(), 1).map_err(err)?) == vec![vec![0, 0], vec![1, 0]], || "A2 nullcone".into())?;
    ensure(pts(odd_nullcone(&a2(), 1).map_err(err)?) == vec![vec![0, 0]], || "A2 odd nullcone".into())?;
    ensure(pts(restricted_nullcone(&a4(), 1).map_err(err)?) == vec![vec![0, 0], vec![0, 1]], || "A4 nullcone".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for k in 0..200 {
        let over4 = k % 4 == 3;
        let l = random_restricted(&mut rng, if over4 { Field::new(2).unwrap() } else { Field::gf2() }, 2, 2);
        let es: &[u32] = if over4 { &[2] } else { &[1, 2] };
        for &e in es {
            let full = restricted_nullcone(&l, e).map_err(err)?;
            let odd = odd_nullcone(&l, e).map_err(err)?;
            ensure(odd.is_subset(&full), || format!("odd nullcone not inside nullcone: {l:?}, e = {e}"))?;
            if k < 60 {
                ensure(full.points == oracle_nullcone(&l, e), || format!("nullcone differs from enumeration: {l:?}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("fixture nullcones exact; inclusion on {checked} (algebra, e) cases, 60 algebras enumerated"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let err = |e: superlie::Error| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut pairs, mut projective, mut tensor, mut suites) = (0, 0, 0, 0);
    let mut algs: Vec<LieSuperAlgebra> = fixtures::all().into_iter().map(|(_, l)| l).collect();
    while algs.len() < 50 {
        algs.push(random_restricted(&mut rng, Field::gf2(), 2, 2));
    }
    for l in &algs {
        let v = build_vl(l).map_err(err)?;
        let modules: Vec<SuperModule> = (0..4).map(|_| random_module(&v, &mut rng, 8)).collect();
        for m in &modules {
            pairs += 1;
            let p = is_projective_vl(&v, m).map_err(err)?;
            projective += usize::from(p);
            let trivial_here = support_points_vl(l, m, 1).map_err(err)?.is_trivial();
            let trivial = trivial_here && detect_non_free_point(l, m, 2).map_err(err)?.is_none();
            ensure(p == trivial, || format!("projective = {p}, trivial support = {trivial} on {l:?}"))?;
            let n = random_module(&v, &mut rng, 4);
            for mode in [ModuleMode::V, ModuleMode::U] {
                let e = 1 + rng.gen_range(0..2);
                let rep = tensor_property_check(l, m, &n, e, mode).map_err(err)?;
                ensure(rep.holds(), || format!("tensor property fails at {:?} ({mode}) on {l:?}", rep.counterexample))?;
                tensor += 1;
            }
        }
        let rep = support_datum_suite(l, &modules, 1).map_err(err)?;
        ensure(rep.holds(), || format!("datum laws fail: {:?}", rep.failures))?;
        suites += 1;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{pairs} modules ({projective} projective): projectivity iff trivial support, {tensor} tensor checks, {suites} datum suites"
    ))
}

fn criterion_8() -> Outcome {
    let err = |e: superlie::Error| e.to_string();
    let mut examples = 0;
    let cm = carlson_module(&a2(), &FormProduct::one(), ModuleMode::V).map_err(err)?;
    ensure(cm.module.dim() == 0 && check_zero_locus(&cm, 1).map_err(err)?.matches(), || "constant form".into())?;
    examples += 1;
    let cm = carlson_module(&a1(), &FormProduct::new(vec![vec![1]]), ModuleMode::U).map_err(err)?;
    let chk = check_zero_locus(&cm, 2).map_err(err)?;
    ensure(chk.matches() && chk.zero_locus.is_empty() && cm.module.dim() == 0, || "A1 odd form".into())?;
    examples += 1;
    let cm = carlson_module(&a2(), &FormProduct::new(vec![vec![1, 0]]), ModuleMode::V).map_err(err)?;
    for e in [1, 2] {
        let chk = check_zero_locus(&cm, e).map_err(err)?;
        ensure(chk.matches() && chk.support.is_empty(), || "A2 even form".into())?;
    }
    examples += 1;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pool = [a1(), a2(), a4(), e2()];
    let mut nonempty = 0;
    for round in 0..20 {
        let l = &pool[round % pool.len()];
        let mode = if round % 5 == 4 && l.odd_dim() > 0 { ModuleMode::U } else { ModuleMode::V };
        let degree = 1 + rng.gen_range(0..2);
        let mut factors = Vec::new();
        while factors.len() < degree {
            let form: Vec<Elem> = (0..l.dim())
                .map(|i| if mode == ModuleMode::U && !l.is_odd(i) { 0 } else { rng.gen_range(0..2) })
                .collect();
            if !is_zero(&form) {
                factors.push(form);
            }
        }
        let cm = carlson_module(l, &FormProduct::new(factors), mode).map_err(err)?;
        for e in [1, 2] {
            let chk = check_zero_locus(&cm, e).map_err(err)?;
            ensure(chk.matches(), || format!("{l:?} {:?} e = {e}: {:?}", cm.forms, chk.mismatch))?;
            nonempty += usize::from(!chk.zero_locus.is_empty());
        }
    }
    Ok(format!("{examples} worked examples and 20 random products match pointwise ({nonempty} nonempty loci)"))
}

fn criterion_9() -> Outcome {
    let err = |e: superlie::Error| e.to_string();
    let l1 = a1();
    ensure(!finite_projdim_ul(&l1, &SuperModule::trivial(&l1, ModuleMode::U), 1).map_err(err)?.finite, || {
        "A1: k detected as finite".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut sampled = 0;
    let l2 = a2();
    let v2 = build_vl(&l2).map_err(err)?;
    for _ in 0..20 {
        let m = random_module(&v2, &mut rng, 8);
        ensure(finite_projdim_ul(&l2, &m, 2).map_err(err)?.finite, || "A2 module detected as infinite".into())?;
        sampled += 1;
    }
    for l in [a3(), e2()] {
        let v = build_vl(&l).map_err(err)?;
        for e in [1, 2] {
            for _ in 0..10 {
                let m = random_module(&v, &mut rng, 8);
                ensure(finite_projdim_ul(&l, &m, e).map_err(err)?.finite, || "purely even module detected as infinite".into())?;
                sampled += 1;
            }
        }
    }
    Ok(format!("A1 k infinite; {sampled} sampled modules over A2 and purely even fixtures finite"))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let err = |e: superlie::Error| e.to_string();
    let mut laws = 0;
    for parities in [vec![0u8], vec![1], vec![0, 1], vec![1, 1], vec![0, 1, 1], vec![0, 0, 1]] {
        let ring = BigradedRing::standard(&parities);
        let degree = if parities.len() == 3 { 2 } else { 3 };
        let rep = monomial_lattice_suite(&ring, degree, 10).map_err(err)?;
        for o in &rep.outcomes {
            ensure(o.holds(), || format!("{:?}: {} fails: {:?}", parities, o.property.label(), o.failure))?;
            ensure(o.checked > 0, || format!("{:?}: {} not exercised", parities, o.property.label()))?;
            laws += o.checked;
        }
    }
    let ring = BigradedRing::standard(&[0, 1, 1]);
    for mask in 0..8u32 {
        let p = MonomialIdeal::variables(3, mask).to_ideal(&ring);
        ensure(is_s_prime(&p, 3).map_err(err)? == SPrimeVerdict::Prime, || format!("variables {mask:03b} not s-prime"))?;
        ensure(is_s_prime_capped(&p, 3).map_err(err)?.holds(), || format!("variables {mask:03b}: search finds a witness"))?;
    }
    let (ring, prime) = sum_fixture();
    let part = bihomogeneous_part(&prime, 6);
    let want = Ideal::parse(&ring, &["a^2 + b^2"]).map_err(err)?;
    ensure(part.ideal == want && part.stabilized, || format!("I_s = {}", part.ideal.format()))?;
    ensure(is_s_prime(&part.ideal, 6).map_err(err)? == SPrimeVerdict::TrueUpToCap(6), || "(a^2+b^2) not s-prime".into())?;
    let samples: Vec<Ideal> = [&["a^2 + b^2"][..], &["a"], &["b"], &["a*b"], &["a", "b"], &["a^3 + a*b^2"]]
        .iter()
        .map(|g| Ideal::parse(&ring, g))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let rep = projs_property_suite(&ring, &samples, std::slice::from_ref(&prime), 6).map_err(err)?;
    ensure(rep.holds(), || format!("fixture suite: {:?}", rep.outcomes))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{laws} law instances on monomial lattices; 8 variable-subset s-primes; (a+b)_s = (a^2 + b^2), s-prime to degree 6"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suites catch corruptions", criterion_1),
        ("restricted superalgebra = restricted Lie algebra", criterion_2),
        ("PBW dimension and associativity", criterion_3),
        ("Koszul resolution", criterion_4),
        ("cohomology cross-oracles", criterion_5),
        ("nullcones", criterion_6),
        ("rank-variety properties", criterion_7),
        ("Carlson module realizability", criterion_8),
        ("finite projective dimension detection", criterion_9),
        ("bigraded zero-set laws", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail} [{t:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {detail} [{t:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
