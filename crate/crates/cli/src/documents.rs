//! JSON documents describing algebras and modules.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use superlie::envelope::{ModuleMode, SuperModule};
use superlie::{Elem, Field, LieSuperAlgebra, Matrix};

pub const SCHEMA_VERSION: u32 = 1;

/// A linear combination of named basis vectors.
pub type Combination = BTreeMap<String, Elem>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_poly: Option<u32>,
}

/// `[left, right] = value`; the entry also fixes `[right, left]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: Combination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    #[serde(default)]
    pub q: BTreeMap<String, Combination>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_map: Option<BTreeMap<String, Combination>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModeSpec {
    U,
    V,
}

impl From<ModeSpec> for ModuleMode {
    fn from(m: ModeSpec) -> Self {
        match m {
            ModeSpec::U => ModuleMode::U,
            ModeSpec::V => ModuleMode::V,
        }
    }
}

impl From<ModuleMode> for ModeSpec {
    fn from(m: ModuleMode) -> Self {
        match m {
            ModuleMode::U => ModeSpec::U,
            ModuleMode::V => ModeSpec::V,
        }
    }
}

/// `action[g][v]` is the image of module basis vector `v` under algebra basis element `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub schema_version: u32,
    pub mode: ModeSpec,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub action: BTreeMap<String, BTreeMap<String, Combination>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError::Invalid(msg.into()))
}

fn index_names(names: &[String]) -> Result<HashMap<&str, usize>, DocumentError> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return invalid("empty basis name");
        }
        if out.insert(n.as_str(), i).is_some() {
            return invalid(format!("basis name '{n}' is declared twice"));
        }
    }
    Ok(out)
}

fn check_version(v: u32) -> Result<(), DocumentError> {
    if v != SCHEMA_VERSION {
        return invalid(format!("unsupported schema_version {v}"));
    }
    Ok(())
}

fn resolve(
    comb: &Combination,
    names: &HashMap<&str, usize>,
    dim: usize,
    field: &Field,
    allowed: impl Fn(usize) -> bool,
    what: &str,
) -> Result<Vec<Elem>, DocumentError> {
    let mut v = vec![0; dim];
    for (name, &c) in comb {
        let Some(&i) = names.get(name.as_str()) else {
            return invalid(format!("{what}: unknown basis name '{name}'"));
        };
        if !allowed(i) {
            return invalid(format!("{what}: '{name}' has the wrong parity"));
        }
        if !field.contains(c) {
            return invalid(format!("{what}: coefficient {c} is not in GF(2^{})", field.degree()));
        }
        v[i] = c;
    }
    Ok(v)
}

fn combination(names: &[String], v: &[Elem]) -> Combination {
    names.iter().zip(v).filter(|(_, &c)| c != 0).map(|(n, &c)| (n.clone(), c)).collect()
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, DocumentError> {
        let f = match self.defining_poly {
            Some(p) => Field::with_modulus(self.e, p),
            None => Field::new(self.e),
        };
        f.map_err(|e| DocumentError::Invalid(e.to_string()))
    }
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    pub fn names(&self) -> Vec<String> {
        self.even_basis.iter().chain(&self.odd_basis).cloned().collect()
    }

    pub fn to_algebra(&self) -> Result<LieSuperAlgebra, DocumentError> {
        check_version(self.schema_version)?;
        let field = self.field.to_field()?;
        let names = self.names();
        let idx = index_names(&names)?;
        let (a, n) = (self.even_basis.len(), names.len());
        let mut l = LieSuperAlgebra::new(field, a, self.odd_basis.len());
        let mut seen: HashMap<(usize, usize), Vec<Elem>> = HashMap::new();
        for entry in &self.bracket {
            let lookup = |s: &String| idx.get(s.as_str()).copied();
            let (Some(i), Some(j)) = (lookup(&entry.left), lookup(&entry.right)) else {
                return invalid(format!("bracket [{}, {}]: unknown basis name", entry.left, entry.right));
            };
            let what = format!("bracket [{}, {}]", entry.left, entry.right);
            let v = resolve(&entry.value, &idx, n, &field, |_| true, &what)?;
            let key = (i.min(j), i.max(j));
            if seen.insert(key, v.clone()).is_some() {
                return invalid(format!("{what} is given twice"));
            }
            l.set_bracket(i, j, &v);
        }
        for (name, comb) in &self.q {
            let Some(&j) = idx.get(name.as_str()).filter(|&&j| j >= a) else {
                return invalid(format!("q: '{name}' is not an odd basis name"));
            };
            let v = resolve(comb, &idx, n, &field, |_| true, &format!("q({name})"))?;
            l.set_q(j - a, &v);
        }
        if let Some(map) = &self.two_map {
            l = l.with_zero_two_map();
            for (name, comb) in map {
                let Some(&i) = idx.get(name.as_str()).filter(|&&i| i < a) else {
                    return invalid(format!("two_map: '{name}' is not an even basis name"));
                };
                let v = resolve(comb, &idx, n, &field, |_| true, &format!("two_map({name})"))?;
                l.set_two_map(i, &v);
            }
        }
        l.with_names(names).map_err(|e| DocumentError::Invalid(e.to_string()))
    }

    pub fn from_algebra(l: &LieSuperAlgebra) -> Self {
        let f = l.field();
        let names = l.names();
        let a = l.even_dim();
        let mut bracket = Vec::new();
        for i in 0..l.dim() {
            for j in i..l.dim() {
                let v = l.bracket_basis(i, j);
                if v.iter().any(|&c| c != 0) {
                    bracket.push(BracketEntry { left: names[i].clone(), right: names[j].clone(), value: combination(names, v) });
                }
            }
        }
        let q = (0..l.odd_dim())
            .filter(|&j| l.q_basis(j).iter().any(|&c| c != 0))
            .map(|j| (names[a + j].clone(), combination(names, l.q_basis(j))))
            .collect();
        let two_map = l.is_restricted().then(|| {
            (0..a)
                .filter_map(|i| {
                    let v = l.two_map_basis(i).expect("restricted");
                    v.iter().any(|&c| c != 0).then(|| (names[i].clone(), combination(names, v)))
                })
                .collect()
        });
        AlgebraDocument {
            schema_version: SCHEMA_VERSION,
            field: FieldSpec { e: f.degree(), defining_poly: (Field::new(f.degree()).ok() != Some(f)).then_some(f.modulus()) },
            even_basis: names[..a].to_vec(),
            odd_basis: names[a..].to_vec(),
            bracket,
            q,
            two_map,
        }
    }
}

impl ModuleDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    pub fn names(&self) -> Vec<String> {
        self.even_basis.iter().chain(&self.odd_basis).cloned().collect()
    }

    pub fn to_module(&self, l: &LieSuperAlgebra) -> Result<SuperModule, DocumentError> {
        check_version(self.schema_version)?;
        let names = self.names();
        let idx = index_names(&names)?;
        let d = names.len();
        let f = l.field();
        let mut action: Vec<Matrix> = (0..l.dim()).map(|_| Matrix::zeros(f, d, d)).collect();
        for (g, images) in &self.action {
            let Some(gi) = l.names().iter().position(|n| n == g) else {
                return invalid(format!("action: '{g}' is not a basis element of the algebra"));
            };
            for (v, comb) in images {
                let Some(&col) = idx.get(v.as_str()) else {
                    return invalid(format!("action of {g}: unknown module basis name '{v}'"));
                };
                let img = resolve(comb, &idx, d, &f, |_| true, &format!("{g}·{v}"))?;
                for (row, &c) in img.iter().enumerate() {
                    action[gi].set(row, col, c);
                }
            }
        }
        let parities = (0..d).map(|i| u8::from(i >= self.even_basis.len())).collect();
        SuperModule::new(f, parities, action, self.mode.into()).map_err(|e| DocumentError::Invalid(e.to_string()))
    }

    /// Document for `m` with basis vectors named `v1, v2, ...`; parsing it back lists the even ones first.
    pub fn from_module(l: &LieSuperAlgebra, m: &SuperModule) -> Self {
        let label = |k: usize| format!("v{}", k + 1);
        let names: Vec<String> = (0..m.dim()).map(label).collect();
        let mut action = BTreeMap::new();
        for (gi, g) in l.names().iter().enumerate() {
            let mat = m.action(gi);
            let images: BTreeMap<String, Combination> = (0..m.dim())
                .filter_map(|col| {
                    let img = mat.column(col);
                    img.iter().any(|&c| c != 0).then(|| (names[col].clone(), combination(&names, &img)))
                })
                .collect();
            if !images.is_empty() {
                action.insert(g.clone(), images);
            }
        }
        ModuleDocument {
            schema_version: SCHEMA_VERSION,
            mode: m.mode().into(),
            even_basis: (0..m.dim()).filter(|&k| m.parities()[k] == 0).map(|k| names[k].clone()).collect(),
            odd_basis: (0..m.dim()).filter(|&k| m.parities()[k] == 1).map(|k| names[k].clone()).collect(),
            action,
        }
    }
}
