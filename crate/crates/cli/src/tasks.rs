//! The computations behind `superlie compute`.

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use superlie::envelope::random::random_module;
use superlie::envelope::{build_vl, ext_dims_vl, ModuleMode, SuperModule, MAX_EXT_DEGREE};
use superlie::koszul::{
    cohomology_dims_u, compositions, d_squared_violation, filtered_exactness, finite_generation_probe, phi_map,
    KoszulComplex, OddPoly, ProbeVerdict, TrivialCochains, MAX_KOSZUL_DEGREE,
};
use superlie::projs::{
    bihomogeneous_part, is_s_prime, monomial_lattice_suite, projs_property_suite, sum_fixture, Ideal, SPrimeVerdict,
    SuiteReport,
};
use superlie::varieties::{
    carlson_module, check_zero_locus, finite_projdim_ul, odd_nullcone, restricted_nullcone, support_datum_suite,
    support_points, tensor_property_check, DatumAxiom, FormProduct, PointSet,
};
use superlie::{Elem, LieSuperAlgebra, Subspace};

use crate::documents::ModeSpec;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Task {
    Nullcone,
    OddNullcone,
    Support,
    ExtV,
    ExtU,
    Koszul,
    Cup,
    Phi,
    FgProbe,
    TensorCheck,
    DatumSuite,
    Carlson,
    ProjdimU,
    ProjsSuite,
}

impl Task {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    pub fn criterion(self) -> &'static str {
        match self {
            Task::Nullcone => "restricted-nullcone",
            Task::OddNullcone => "odd-nullcone",
            Task::Support => "rank-variety-support",
            Task::ExtV => "ext-over-restricted-envelope",
            Task::ExtU => "ext-over-universal-envelope",
            Task::Koszul => "koszul-resolution-exact",
            Task::Cup => "cup-product",
            Task::Phi => "odd-square-classes",
            Task::FgProbe => "finite-generation",
            Task::TensorCheck => "tensor-product-property",
            Task::DatumSuite => "support-datum-laws",
            Task::Carlson => "carlson-realization",
            Task::ProjdimU => "finite-projdim-detection",
            Task::ProjsSuite => "zero-set-topology-laws",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Params {
    pub e: u32,
    pub nmax: usize,
    pub degree_cap: u32,
    pub seed: u64,
    pub samples: usize,
    pub mode: Option<ModeSpec>,
    pub forms: Option<String>,
}

impl Params {
    /// The parameters a task actually reads.
    pub fn relevant(&self, task: Task) -> Value {
        let mut m = serde_json::Map::new();
        let mut put = |k: &str, v: Value| {
            m.insert(k.to_string(), v);
        };
        match task {
            Task::Nullcone | Task::OddNullcone | Task::ProjdimU => put("e", self.e.into()),
            Task::Support => {
                put("e", self.e.into());
                put("mode", json!(self.mode));
            }
            Task::ExtV | Task::ExtU | Task::Koszul | Task::Cup | Task::Phi | Task::FgProbe => put("nmax", self.nmax.into()),
            Task::TensorCheck => {
                put("e", self.e.into());
                put("mode", json!(self.mode));
            }
            Task::DatumSuite => {
                put("e", self.e.into());
                put("seed", self.seed.into());
                put("samples", self.samples.into());
            }
            Task::Carlson => {
                put("e", self.e.into());
                put("mode", json!(self.mode));
                put("forms", json!(self.forms));
            }
            Task::ProjsSuite => {
                put("degree_cap", self.degree_cap.into());
                put("seed", self.seed.into());
            }
        }
        Value::Object(m)
    }
}

pub struct Context {
    pub algebra: LieSuperAlgebra,
    pub m: Option<SuperModule>,
    pub n: Option<SuperModule>,
    pub params: Params,
}

/// Outcome of a task: `verdict` is `PASS`, `FAIL`, `INCONCLUSIVE` or absent.
#[derive(Clone, Debug)]
pub struct TaskOutput {
    pub results: Value,
    pub criterion: &'static str,
    pub verdict: Option<&'static str>,
    pub partial: bool,
}

fn pass_fail(ok: bool) -> Option<&'static str> {
    Some(crate::report::verdict(ok))
}

pub fn points_json(l: &LieSuperAlgebra, s: &PointSet) -> Value {
    json!({
        "count": s.len(),
        "points": s.points.iter().map(|z| l.format_element(z)).collect::<Vec<_>>(),
        "coordinates": s.points,
    })
}

fn module_or_trivial(m: &Option<SuperModule>, l: &LieSuperAlgebra, mode: ModuleMode) -> SuperModule {
    m.clone().map_or_else(|| SuperModule::trivial(l, mode), |m| m.with_mode(mode))
}

fn require<'a>(m: &'a Option<SuperModule>, flag: &str) -> Result<&'a SuperModule, CliError> {
    m.as_ref().ok_or_else(|| CliError::Usage(format!("this task needs {flag} <file>")))
}

/// Clamps a degree to an engine limit; the flag records the truncation.
fn clamp(nmax: usize, limit: usize) -> (usize, bool) {
    (nmax.min(limit), nmax > limit)
}

pub fn run(task: Task, ctx: &Context) -> Result<TaskOutput, CliError> {
    let l = &ctx.algebra;
    let p = &ctx.params;
    let out = |results: Value, verdict: Option<&'static str>, partial: bool| TaskOutput {
        results,
        criterion: task.criterion(),
        verdict,
        partial,
    };
    match task {
        Task::Nullcone => {
            let s = restricted_nullcone(l, p.e)?;
            Ok(out(json!({ "e": p.e, "nullcone": points_json(l, &s) }), None, false))
        }
        Task::OddNullcone => {
            let s = odd_nullcone(l, p.e)?;
            Ok(out(json!({ "e": p.e, "nullcone": points_json(l, &s) }), None, false))
        }
        Task::Support => {
            let m = require(&ctx.m, "--m")?;
            let mode = p.mode.map_or(m.mode(), Into::into);
            let s = support_points(l, &m.clone().with_mode(mode), p.e, mode)?;
            let res = json!({ "e": p.e, "mode": mode.to_string(), "support": points_json(l, &s), "trivial": s.is_trivial() });
            Ok(out(res, None, false))
        }
        Task::ExtV => {
            let (nmax, partial) = clamp(p.nmax, MAX_EXT_DEGREE);
            let v = build_vl(l)?;
            let m = module_or_trivial(&ctx.m, l, ModuleMode::V);
            let n = module_or_trivial(&ctx.n, l, ModuleMode::V);
            let dims = ext_dims_vl(&v, &m, &n, nmax)?;
            Ok(out(json!({ "nmax": nmax, "dims": dims }), None, partial))
        }
        Task::ExtU => {
            let (nmax, partial) = clamp(p.nmax, MAX_KOSZUL_DEGREE);
            let m = module_or_trivial(&ctx.m, l, ModuleMode::U);
            let n = module_or_trivial(&ctx.n, l, ModuleMode::U);
            let dims = cohomology_dims_u(l, &m, &n, nmax)?;
            Ok(out(json!({ "nmax": nmax, "dims": dims }), None, partial))
        }
        Task::Koszul => {
            let (nmax, partial) = clamp(p.nmax, MAX_KOSZUL_DEGREE);
            let cx = KoszulComplex::new(l, nmax);
            let d2 = d_squared_violation(&cx);
            let levels: Vec<_> = (0..=nmax).map(|t| filtered_exactness(&cx, t)).collect();
            let ok = d2.is_none() && levels.iter().all(|f| f.is_exact());
            let res = json!({
                "nmax": nmax,
                "d_squared": {
                    "verdict": crate::report::verdict(d2.is_none()),
                    "witness": d2.map(|(n, y)| json!({ "degree": n, "element": y.format(l) })),
                },
                "exactness": levels.iter().map(|f| json!({
                    "level": f.level, "dims": f.dims, "ranks": f.ranks, "exact": f.is_exact(),
                })).collect::<Vec<_>>(),
            });
            Ok(out(res, pass_fail(ok), partial))
        }
        Task::Cup => {
            let (nmax, partial) = clamp(p.nmax, MAX_KOSZUL_DEGREE);
            let co = TrivialCochains::new(l, nmax);
            let cocycles: Vec<Vec<Vec<Elem>>> = (0..=nmax).map(|n| co.cocycles(n)).collect();
            let h: Vec<usize> = (0..=nmax).map(|n| cocycles[n].len() - co.coboundaries(n).dim()).collect();
            let mut table = Vec::new();
            for i in 1..=nmax {
                for j in i..=nmax - i {
                    let mut image: Subspace = co.coboundaries(i + j);
                    let base = image.dim();
                    for a in &cocycles[i] {
                        for b in &cocycles[j] {
                            image.insert(&co.product(i, a, j, b));
                        }
                    }
                    table.push(json!({ "left": i, "right": j, "rank": image.dim() - base }));
                }
            }
            Ok(out(json!({ "nmax": nmax, "cohomology_dims": h, "products": table }), None, partial))
        }
        Task::Phi => {
            let (nmax, partial) = clamp(p.nmax, MAX_KOSZUL_DEGREE);
            let co = TrivialCochains::new(l, nmax);
            let odd = &l.names()[l.even_dim()..];
            let mut classes = Vec::new();
            for r in 1..=nmax / 2 {
                for a in compositions(l.odd_dim(), r) {
                    let mut f = OddPoly::new();
                    f.insert(a.clone(), 1);
                    let c = phi_map(&co, &f)?;
                    classes.push(json!({ "monomial": format_odd_monomial(odd, &a), "degree": c.degree, "zero": c.is_zero }));
                }
            }
            Ok(out(json!({ "nmax": nmax, "classes": classes }), None, partial))
        }
        Task::FgProbe => {
            let (nmax, partial) = clamp(p.nmax, MAX_KOSZUL_DEGREE);
            let rep = finite_generation_probe(l, nmax)?;
            let verdict = match rep.verdict {
                ProbeVerdict::Pass => "PASS",
                ProbeVerdict::Inconclusive => "INCONCLUSIVE",
            };
            let res = json!({ "nmax": nmax, "cohomology_dims": rep.cohomology_dims, "quotient_dims": rep.window_dims });
            Ok(out(res, Some(verdict), partial))
        }
        Task::TensorCheck => {
            let m = require(&ctx.m, "--m")?;
            let n = require(&ctx.n, "--n")?;
            let modes = match p.mode {
                Some(mode) => vec![mode.into()],
                None if m.mode() == ModuleMode::V && n.mode() == ModuleMode::V => vec![ModuleMode::V, ModuleMode::U],
                None => vec![ModuleMode::U],
            };
            let mut checks = Vec::new();
            let mut ok = true;
            for mode in modes {
                let r = tensor_property_check(l, m, n, p.e, mode)?;
                ok &= r.holds();
                checks.push(json!({
                    "mode": mode.to_string(),
                    "verdict": crate::report::verdict(r.holds()),
                    "tensor_support": points_json(l, &r.tensor_support),
                    "intersection": points_json(l, &r.intersection),
                    "counterexample": r.counterexample.map(|z| l.format_element(&z)),
                }));
            }
            Ok(out(json!({ "e": p.e, "checks": checks }), pass_fail(ok), false))
        }
        Task::DatumSuite => {
            let v = build_vl(l)?;
            let mut samples = vec![SuperModule::trivial(l, ModuleMode::V)];
            samples.extend([&ctx.m, &ctx.n].into_iter().flatten().map(|m| m.clone().with_mode(ModuleMode::V)));
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            samples.extend((0..p.samples).map(|_| random_module(&v, &mut rng, 6)));
            let rep = support_datum_suite(l, &samples, p.e)?;
            let checked: serde_json::Map<String, Value> =
                DatumAxiom::ALL.iter().zip(rep.checked).map(|(a, c)| (a.label().to_string(), c.into())).collect();
            let res = json!({
                "e": p.e,
                "sample_dims": samples.iter().map(SuperModule::dim).collect::<Vec<_>>(),
                "checked": checked,
                "failures": rep.failures.iter().map(|f| json!({
                    "law": f.axiom.label(), "modules": f.modules, "detail": f.detail,
                })).collect::<Vec<_>>(),
            });
            Ok(out(res, pass_fail(rep.holds()), false))
        }
        Task::Carlson => {
            let text = p.forms.as_deref().ok_or_else(|| CliError::Usage("carlson needs --forms".into()))?;
            let forms = parse_forms(l, text)?;
            let mode = p.mode.map_or(ModuleMode::V, Into::into);
            let cm = carlson_module(l, &FormProduct::new(forms.clone()), mode)?;
            let chk = check_zero_locus(&cm, p.e)?;
            let res = json!({
                "e": p.e,
                "mode": mode.to_string(),
                "forms": forms.iter().map(|f| l.format_element(f)).collect::<Vec<_>>(),
                "degree": cm.degree,
                "syzygy_dim": cm.omega_dim,
                "module_dim": cm.module.dim(),
                "class_is_zero": cm.class_is_zero,
                "support": points_json(l, &chk.support),
                "zero_locus": points_json(l, &chk.zero_locus),
                "mismatch": chk.mismatch.as_ref().map(|z| l.format_element(z)),
            });
            Ok(out(res, pass_fail(chk.matches()), false))
        }
        Task::ProjdimU => {
            let m = module_or_trivial(&ctx.m, l, ModuleMode::U);
            let r = finite_projdim_ul(l, &m, p.e)?;
            Ok(out(json!({ "e": p.e, "finite": r.finite, "support": points_json(l, &r.support) }), None, false))
        }
        Task::ProjsSuite => projs_suite(p).map(|(res, ok)| out(res, pass_fail(ok), false)),
    }
}

fn format_odd_monomial(names: &[String], exps: &[u16]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

/// Parses `;`-separated linear forms such as `x; y + 3*x1`.
pub fn parse_forms(l: &LieSuperAlgebra, text: &str) -> Result<Vec<Vec<Elem>>, CliError> {
    let f = l.field();
    let mut forms = Vec::new();
    for part in text.split(';') {
        let mut v = l.zero();
        for term in part.split('+').map(str::trim) {
            let (c, name) = match term.split_once('*') {
                Some((c, name)) => (
                    c.trim().parse::<Elem>().map_err(|_| CliError::Input(format!("bad coefficient in '{term}'")))?,
                    name.trim(),
                ),
                None => (1, term),
            };
            let i = l
                .names()
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| CliError::Input(format!("unknown basis name '{name}' in --forms")))?;
            if !f.contains(c) {
                return Err(CliError::Input(format!("coefficient {c} is not in GF(2^{})", f.degree())));
            }
            v[i] ^= c;
        }
        forms.push(v);
    }
    Ok(forms)
}

fn suite_json(rep: &SuiteReport) -> Value {
    rep.outcomes
        .iter()
        .map(|o| json!({ "law": o.property.label(), "checked": o.checked, "failure": o.failure }))
        .collect()
}

fn projs_suite(p: &Params) -> Result<(Value, bool), CliError> {
    use superlie::projs::BigradedRing;
    let mut ok = true;
    let mut lattices = Vec::new();
    for (parities, degree) in [(vec![1u8], 3u32), (vec![0, 1], 3), (vec![0, 1, 1], 2)] {
        let ring = BigradedRing::standard(&parities);
        let rep = monomial_lattice_suite(&ring, degree, p.seed)?;
        ok &= rep.holds();
        lattices.push(json!({ "parities": parities, "max_degree": degree, "laws": suite_json(&rep) }));
    }
    let cap = p.degree_cap;
    let (ring, prime) = sum_fixture();
    let part = bihomogeneous_part(&prime, cap);
    let verdict = is_s_prime(&part.ideal, cap)?;
    let samples: Vec<Ideal> = [&["a^2 + b^2"][..], &["a"], &["b"], &["a^2"], &["a*b"], &["a", "b"], &["a^3 + a*b^2"]]
        .iter()
        .map(|g| Ideal::parse(&ring, g))
        .collect::<Result<_, _>>()?;
    let general = projs_property_suite(&ring, &samples, std::slice::from_ref(&prime), cap)?;
    ok &= general.holds() && verdict.holds();
    let s_prime = match verdict {
        SPrimeVerdict::Prime => "prime".to_string(),
        SPrimeVerdict::TrueUpToCap(d) => format!("prime up to degree {d}"),
        SPrimeVerdict::NotPrime(w) => match w {
            Some((a, b)) => format!("not prime: ({})*({})", ring.format(&a), ring.format(&b)),
            None => "not prime".to_string(),
        },
    };
    let res = json!({
        "lattices": lattices,
        "fixture": {
            "ideal": prime.format(),
            "degree_cap": cap,
            "bihomogeneous_part": part.ideal.format(),
            "stabilized": part.stabilized,
            "s_prime": s_prime,
            "laws": suite_json(&general),
        },
    });
    Ok((res, ok))
}
