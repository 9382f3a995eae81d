//! File formats: ring presentations, spectrum declarations, complexes and
//! bicomplexes, all JSON-shaped with polynomial entries in the shared
//! string grammar.

use crate::complex::FreeComplex;
use crate::dg::Bicomplex;
use crate::error::{Error, Result};
use crate::groebner::GbOptions;
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::module::GradedModule;
use crate::monomial::{OrderKind, TermOrder};
use crate::ring::Ring;
use crate::spec_model::SpecModel;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingFile {
    pub p: u64,
    /// Ordered variable list: `[name, degree]`.
    pub variables: Vec<(String, i64)>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
}

fn default_order() -> String {
    "grevlex".to_string()
}

impl RingFile {
    pub fn build(&self) -> Result<Ring> {
        let kind = match self.order.as_str() {
            "grevlex" => OrderKind::Grevlex,
            "lex" => OrderKind::Lex,
            other => return Err(Error::BadRing(format!("unknown order `{other}`"))),
        };
        let vars: Vec<(&str, i64)> =
            self.variables.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        let free = Ring::new(self.p, &vars, TermOrder { kind, elim_last: false })?;
        if self.relations.is_empty() {
            Ok(free)
        } else {
            let rels: Vec<&str> = self.relations.iter().map(|s| s.as_str()).collect();
            free.with_relations(&rels)
        }
    }

    pub fn describe(ring: &Ring) -> RingFile {
        RingFile {
            p: ring.field().p(),
            variables: ring
                .var_names()
                .iter()
                .zip(ring.var_degrees())
                .map(|(n, d)| (n.to_string(), d))
                .collect(),
            relations: ring.relations().iter().map(|r| r.to_string()).collect(),
            order: ring.order().name(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub label: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub assert_prime: bool,
}

pub type SpecFile = Vec<PrimeEntry>;

pub fn build_spec(ring: &Ring, spec: &SpecFile, opts: &GbOptions) -> Result<SpecModel> {
    let mut decls = Vec::new();
    for e in spec {
        let gens: Vec<&str> = e.generators.iter().map(|s| s.as_str()).collect();
        decls.push((e.label.clone(), Ideal::parse(ring, &gens)?, e.assert_prime));
    }
    SpecModel::new(ring, decls, opts)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub twists: Vec<i64>,
    /// Differential to the next degree: rows = next rank, cols = this rank.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub lo: i64,
    pub degrees: Vec<DegreeEntry>,
}

fn parse_matrix(
    ring: &Ring,
    rows: &[i64],
    cols: &[i64],
    data: &[Vec<String>],
) -> Result<Matrix> {
    if data.len() != rows.len() || data.iter().any(|r| r.len() != cols.len()) {
        return Err(Error::BadMatrix("matrix shape does not match twist lists".into()));
    }
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for row in data {
        for s in row {
            entries.push(ring.parse(s)?);
        }
    }
    Matrix::new(ring, rows.to_vec(), cols.to_vec(), entries)
}

impl ComplexFile {
    pub fn build(&self, ring: &Ring) -> Result<FreeComplex> {
        let mut twists = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for (k, entry) in self.degrees.iter().enumerate() {
            let i = self.lo + k as i64;
            if !entry.twists.is_empty() {
                twists.insert(i, entry.twists.clone());
            }
            if let Some(d) = &entry.diff {
                let next = self
                    .degrees
                    .get(k + 1)
                    .map(|e| e.twists.clone())
                    .unwrap_or_default();
                diffs.insert(i, parse_matrix(ring, &next, &entry.twists, d)?);
            }
        }
        FreeComplex::new(ring, twists, diffs)
    }

    pub fn describe(x: &FreeComplex) -> ComplexFile {
        if x.is_zero() {
            return ComplexFile { lo: 0, degrees: vec![] };
        }
        let mut degrees = Vec::new();
        for i in x.lo()..=x.hi() {
            let diff = if i < x.hi() && x.rank_at(i) > 0 && x.rank_at(i + 1) > 0 {
                let d = x.diff(i);
                Some(
                    (0..d.rows())
                        .map(|r| (0..d.cols()).map(|c| d.at(r, c).to_string()).collect())
                        .collect(),
                )
            } else {
                None
            };
            degrees.push(DegreeEntry { twists: x.twists_at(i), diff });
        }
        ComplexFile { lo: x.lo(), degrees }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BicomplexDegree {
    /// Generator twists of the module at this degree.
    pub gens: Vec<i64>,
    /// Column twists of the presentation matrix.
    #[serde(default)]
    pub rel_twists: Vec<i64>,
    /// Presentation matrix, rows = generators.
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    /// Connecting map to the next degree, rows = next generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BicomplexFile {
    pub lo: i64,
    pub degrees: Vec<BicomplexDegree>,
}

impl BicomplexFile {
    pub fn build(&self, ring: &Ring, opts: &GbOptions) -> Result<Bicomplex> {
        let mut modules = BTreeMap::new();
        let mut deltas = BTreeMap::new();
        for (k, entry) in self.degrees.iter().enumerate() {
            let i = self.lo + k as i64;
            if entry.gens.is_empty() {
                continue;
            }
            let pres = if entry.rel_twists.is_empty() {
                Matrix::zero(ring, entry.gens.clone(), Vec::new())
            } else {
                parse_matrix(ring, &entry.gens, &entry.rel_twists, &entry.relations)?
            };
            modules.insert(i, GradedModule::from_presentation(pres));
            if let Some(d) = &entry.diff {
                let next = self
                    .degrees
                    .get(k + 1)
                    .map(|e| e.gens.clone())
                    .unwrap_or_default();
                deltas.insert(i, parse_matrix(ring, &next, &entry.gens, d)?);
            }
        }
        Bicomplex::new(ring, modules, deltas, opts)
    }
}

pub fn load_json<T: for<'a> Deserialize<'a>>(path: impl AsRef<Path>) -> Result<T> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse { pos: 0, msg: format!("{}: {e}", path.as_ref().display()) })
}

pub fn load_ring(path: impl AsRef<Path>) -> Result<Ring> {
    load_json::<RingFile>(path)?.build()
}

pub fn load_spec(ring: &Ring, path: impl AsRef<Path>, opts: &GbOptions) -> Result<SpecModel> {
    build_spec(ring, &load_json::<SpecFile>(path)?, opts)
}

pub fn load_complex(ring: &Ring, path: impl AsRef<Path>) -> Result<FreeComplex> {
    load_json::<ComplexFile>(path)?.build(ring)
}

pub fn load_bicomplex(ring: &Ring, path: impl AsRef<Path>, opts: &GbOptions) -> Result<Bicomplex> {
    load_json::<BicomplexFile>(path)?.build(ring, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_roundtrip() {
        let rf: RingFile = serde_json::from_str(
            r#"{"p": 101, "variables": [["x", 2], ["y", 2]], "relations": ["x*y"], "order": "grevlex"}"#,
        )
        .unwrap();
        let ring = rf.build().unwrap();
        assert!(ring.has_relations());
        let back = RingFile::describe(&ring);
        assert_eq!(back.p, 101);
        assert_eq!(back.relations, vec!["x*y"]);
        assert_eq!(rf.build().unwrap().fingerprint(), ring.fingerprint());
    }

    #[test]
    fn complex_roundtrip() {
        let rf = RingFile {
            p: 101,
            variables: vec![("x".into(), 2), ("y".into(), 2)],
            relations: vec![],
            order: "grevlex".into(),
        };
        let ring = rf.build().unwrap();
        let k = crate::complex::koszul_object(
            &FreeComplex::unit(&ring),
            &ring.parse("x").unwrap(),
        )
        .unwrap();
        let desc = ComplexFile::describe(&k);
        let as_json = serde_json::to_string(&desc).unwrap();
        let parsed: ComplexFile = serde_json::from_str(&as_json).unwrap();
        let rebuilt = parsed.build(&ring).unwrap();
        assert_eq!(rebuilt.twists_at(-1), k.twists_at(-1));
        assert_eq!(rebuilt.twists_at(0), k.twists_at(0));
        assert!(rebuilt
            .diff(-1)
            .add(&k.diff(-1).neg())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn spec_file_builds() {
        let rf = RingFile {
            p: 101,
            variables: vec![("x".into(), 2), ("y".into(), 2)],
            relations: vec![],
            order: "grevlex".into(),
        };
        let ring = rf.build().unwrap();
        let spec: SpecFile = serde_json::from_str(
            r#"[
                {"label": "(0)", "generators": [], "assert_prime": true},
                {"label": "(x)", "generators": ["x"]},
                {"label": "(y)", "generators": ["y"]},
                {"label": "(x,y)", "generators": ["x", "y"]}
            ]"#,
        )
        .unwrap();
        let model = build_spec(&ring, &spec, &GbOptions::default()).unwrap();
        assert_eq!(model.len(), 4);
        assert_eq!(model.poset().dim_subset(model.poset().full_mask()), Some(2));
    }

    #[test]
    fn bicomplex_file_builds() {
        let rf = RingFile {
            p: 101,
            variables: vec![("x".into(), 2), ("y".into(), 2)],
            relations: vec![],
            order: "grevlex".into(),
        };
        let ring = rf.build().unwrap();
        // A/(x) --y--> A/(x), a valid module map
        let bf: BicomplexFile = serde_json::from_str(
            r#"{
                "lo": 0,
                "degrees": [
                    {"gens": [0], "rel_twists": [2], "relations": [["x"]], "diff": [["y"]]},
                    {"gens": [-2], "rel_twists": [0], "relations": [["x"]]}
                ]
            }"#,
        )
        .unwrap();
        let b = bf.build(&ring, &GbOptions::default()).unwrap();
        assert_eq!(b.lo(), 0);
        assert_eq!(b.hi(), 1);
        // an invalid connecting map is rejected
        let bad: BicomplexFile = serde_json::from_str(
            r#"{
                "lo": 0,
                "degrees": [
                    {"gens": [0], "rel_twists": [2], "relations": [["x"]], "diff": [["y"]]},
                    {"gens": [-2], "rel_twists": [0], "relations": [["y"]]}
                ]
            }"#,
        )
        .unwrap();
        assert!(bad.build(&ring, &GbOptions::default()).is_err());
    }
}
