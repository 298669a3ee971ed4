//! Structure files, report documents and the `vncore` command line.
//!
//! A structure file is a JSON object with members `name`, `field`, `dim`,
//! optional `basis`, sparse `mul` (`[i, j, k, c]`: `μ(bᵢ⊗bⱼ)` gains `c·b_k`),
//! sparse `comul` (`[k, i, j, c]`: `δ(b_k)` gains `c·bᵢ⊗bⱼ`), optional sparse
//! `S` (`[i, j, c]`: `S(bᵢ)` gains `c·bⱼ`) and optional dense `unit`,
//! `counit`, `alpha`, `beta`. Coefficients are strings (`"3"`, `"-1/2"`),
//! indices are 0-based, duplicate sparse entries are summed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{self, CatalogError, TwistData};
use crate::fusion::{check_identity, IdentityId};
use crate::scalar::{Field, Scalar};
use crate::structures::{check_axiom, classify, AxiomId, CheckResult, RawStructure, Structure, StructureError, Verdict};
use crate::tensor::LinMap;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("usage: {0}")]
    Usage(String),
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        CliError::Shape(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

/// The on-disk form of a [`Structure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mul: Vec<(usize, usize, usize, String)>,
    pub comul: Vec<(usize, usize, usize, String)>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<String>>,
}

fn field_of(spec: &FieldSpec) -> Result<Field, CliError> {
    match spec {
        FieldSpec::Q => Ok(Field::Rational),
        FieldSpec::Fp { p } => Field::prime(*p).map_err(|e| CliError::Parse(e.to_string())),
    }
}

fn coeff(field: Field, text: &str) -> Result<Scalar, CliError> {
    Scalar::parse(field, text).map_err(|e| CliError::Parse(format!("coefficient {text:?}: {e}")))
}

fn check_index(what: &str, idx: usize, dim: usize) -> Result<(), CliError> {
    if idx >= dim {
        Err(CliError::Shape(format!("{what} index {idx} out of range for dimension {dim}")))
    } else {
        Ok(())
    }
}

fn dense(what: &str, field: Field, dim: usize, values: &[String]) -> Result<Vec<Scalar>, CliError> {
    if values.len() != dim {
        return Err(CliError::Shape(format!("{what} has {} coefficients, expected {dim}", values.len())));
    }
    values.iter().map(|v| coeff(field, v)).collect()
}

/// Accumulates a sparse entry into a map, summing duplicates.
fn accumulate(map: &mut LinMap, row: usize, col: usize, value: Scalar) {
    let sum = map.entry(row, col) + &value;
    map.set(row, col, sum);
}

impl StructureFile {
    pub fn into_structure(self) -> Result<Structure, CliError> {
        let field = field_of(&self.field)?;
        let n = self.dim;
        if n == 0 {
            return Err(CliError::Shape("dim must be at least 1".into()));
        }
        let mut mu = LinMap::zero(field, n, 2, 1);
        for (i, j, k, c) in &self.mul {
            for idx in [i, j, k] {
                check_index("mul", *idx, n)?;
            }
            accumulate(&mut mu, *k, i * n + j, coeff(field, c)?);
        }
        let mut delta = LinMap::zero(field, n, 1, 2);
        for (k, i, j, c) in &self.comul {
            for idx in [k, i, j] {
                check_index("comul", *idx, n)?;
            }
            accumulate(&mut delta, i * n + j, *k, coeff(field, c)?);
        }
        let antipode = match &self.antipode {
            None => None,
            Some(entries) => {
                let mut s = LinMap::zero(field, n, 1, 1);
                for (i, j, c) in entries {
                    check_index("S", *i, n)?;
                    check_index("S", *j, n)?;
                    accumulate(&mut s, *j, *i, coeff(field, c)?);
                }
                Some(s)
            }
        };
        let vector = |what: &str, v: &Option<Vec<String>>, rank_src: bool| -> Result<Option<LinMap>, CliError> {
            v.as_ref()
                .map(|values| {
                    let coords = dense(what, field, n, values)?;
                    let m = if rank_src {
                        LinMap::functional(field, n, 1, coords)
                    } else {
                        LinMap::element(field, n, 1, coords)
                    };
                    m.map_err(|e| CliError::Shape(e.to_string()))
                })
                .transpose()
        };
        let raw = RawStructure {
            name: self.name.clone(),
            field,
            dim: n,
            basis: self.basis.clone(),
            mu,
            delta,
            unit: vector("unit", &self.unit, false)?,
            counit: vector("counit", &self.counit, true)?,
            antipode,
            alpha: vector("alpha", &self.alpha, false)?,
            beta: vector("beta", &self.beta, false)?,
        };
        Ok(raw.build()?)
    }

    pub fn from_structure(s: &Structure) -> StructureFile {
        let n = s.dim();
        let render = |v: &Scalar| v.to_string();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = s.mu().entry(k, i * n + j);
                    if !v.is_zero() {
                        mul.push((i, j, k, render(v)));
                    }
                }
            }
        }
        let mut comul = Vec::new();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let v = s.delta().entry(i * n + j, k);
                    if !v.is_zero() {
                        comul.push((k, i, j, render(v)));
                    }
                }
            }
        }
        let antipode = s.antipode().map(|sm| {
            let mut entries = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let v = sm.entry(j, i);
                    if !v.is_zero() {
                        entries.push((i, j, render(v)));
                    }
                }
            }
            entries
        });
        let dense = |m: Option<&LinMap>| m.map(|m| m.entries().iter().map(render).collect());
        StructureFile {
            name: s.name().to_string(),
            field: match s.field() {
                Field::Rational => FieldSpec::Q,
                Field::Prime(p) => FieldSpec::Fp { p },
            },
            dim: n,
            basis: s.basis().map(<[String]>::to_vec),
            mul,
            comul,
            antipode,
            unit: dense(s.unit()),
            counit: dense(s.counit()),
            alpha: dense(s.alpha()),
            beta: dense(s.beta()),
        }
    }

    /// Canonical text: fixed key order, one sparse entry per line.
    pub fn render(&self) -> String {
        let mut members: Vec<(&str, String)> = vec![
            ("name", js(&self.name)),
            ("field", js(&self.field)),
            ("dim", js(&self.dim)),
        ];
        if let Some(b) = &self.basis {
            members.push(("basis", js(b)));
        }
        members.push(("mul", rows(&self.mul)));
        members.push(("comul", rows(&self.comul)));
        if let Some(s) = &self.antipode {
            members.push(("S", rows(s)));
        }
        for (key, v) in [("unit", &self.unit), ("counit", &self.counit), ("alpha", &self.alpha), ("beta", &self.beta)] {
            if let Some(v) = v {
                members.push((key, js(v)));
            }
        }
        let body: Vec<String> = members.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }

    pub fn parse(text: &str) -> Result<StructureFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}

fn js<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn rows<T: Serialize>(entries: &[T]) -> String {
    if entries.is_empty() {
        return "[]".into();
    }
    let lines: Vec<String> = entries
        .iter()
        .map(|e| format!("    {}", js(e)))
        .collect();
    format!("[\n{}\n  ]", lines.join(",\n"))
}

pub fn emit_structure(s: &Structure) -> String {
    StructureFile::from_structure(s).render()
}

pub fn parse_structure_str(text: &str) -> Result<Structure, CliError> {
    StructureFile::parse(text)?.into_structure()
}

pub fn parse_structure(path: &Path) -> Result<Structure, CliError> {
    parse_structure_str(&read(path)?)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// A twist file: `{"F": [[i, j, "c"], ...]}` meaning `F` gains `c·bᵢ⊗bⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistFile {
    #[serde(rename = "F")]
    pub f: Vec<(usize, usize, String)>,
}

impl TwistFile {
    pub fn from_data(s: &Structure, data: &TwistData) -> TwistFile {
        let n = s.dim();
        let f = data
            .f()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx / n, idx % n, c.to_string()))
            .collect();
        TwistFile { f }
    }

    pub fn render(&self) -> String {
        format!("{{\n  \"F\": {}\n}}\n", rows(&self.f))
    }

    pub fn to_data(&self, s: &Structure) -> Result<TwistData, CliError> {
        let n = s.dim();
        let field = s.field();
        let mut coords = vec![field.zero(); n * n];
        for (i, j, c) in &self.f {
            check_index("F", *i, n)?;
            check_index("F", *j, n)?;
            coords[i * n + j] = &coords[i * n + j] + &coeff(field, c)?;
        }
        Ok(TwistData::new(s, coords)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<crate::structures::RenderedWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The report printed by `classify`, `check` and `identity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub structure: String,
    pub checks: Vec<CheckEntry>,
    pub labels: Vec<String>,
}

impl ReportDocument {
    pub fn new(s: &Structure, results: &[(String, CheckResult)]) -> ReportDocument {
        let checks = results
            .iter()
            .map(|(id, r)| CheckEntry {
                id: id.clone(),
                verdict: r.verdict,
                witness: r.witness.as_ref().map(|w| w.render(s)),
                reason: r.reason.clone(),
                note: r.note.clone(),
            })
            .collect();
        let labels = classify(s).labels.iter().map(|l| l.to_string()).collect();
        ReportDocument { structure: s.name().to_string(), checks, labels }
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = format!("structure: {}\n", self.structure);
        for c in &self.checks {
            let detail = match (&c.witness, &c.reason) {
                (Some(w), _) => format!("  {w}"),
                (None, Some(r)) => format!("  ({r})"),
                (None, None) => String::new(),
            };
            out.push_str(&format!("  {:width$}  {}{}\n", c.id, c.verdict, detail));
            if let Some(note) = &c.note {
                out.push_str(&format!("  {:width$}  note: {note}\n", ""));
            }
        }
        out.push_str(&format!("labels: {}\n", self.labels.join(", ")));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// 0 if everything passed, 1 on any FAIL (or SKIP when `strict`).
    pub fn exit_code(&self, strict: bool) -> i32 {
        let bad = self.checks.iter().any(|c| {
            c.verdict == Verdict::Fail || (strict && c.verdict == Verdict::Skip)
        });
        i32::from(bad)
    }
}

#[derive(Debug, Parser)]
#[command(name = "vncore", version, about = "Check semibialgebra axioms and fusion-map identities exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every axiom and print the classification.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check selected axioms (comma separated, or `all`).
    Check {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        axiom: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Treat SKIP as failure.
        #[arg(long)]
        strict: bool,
    },
    /// Check selected fusion-map identities (comma separated, or `all`).
    Identity {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        id: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// List or emit catalog structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Adjoin a fresh unit to a structure.
    Complete {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        unitalize: bool,
        #[arg(long, value_name = "TWISTFILE")]
        twist: Option<PathBuf>,
    },
    /// Write the twist found by the seeded search on a Hopf catalog entry.
    Twist {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_ids<T: std::str::FromStr<Err = String> + Copy>(requested: &[String], all: &[T]) -> Result<Vec<T>, CliError> {
    if requested.iter().any(|r| r == "all") {
        return Ok(all.to_vec());
    }
    requested.iter().map(|r| r.trim().parse::<T>().map_err(CliError::Usage)).collect()
}

fn print_report(out: &mut dyn Write, doc: &ReportDocument, json: bool) -> std::io::Result<()> {
    if json {
        out.write_all(doc.to_json().as_bytes())
    } else {
        out.write_all(doc.to_text().as_bytes())
    }
}

fn emit_to(out: &mut dyn Write, output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => write_file(path, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |source| CliError::Io { path: "<stdout>".into(), source };
    match cli.command {
        Command::Classify { file, json } => {
            let s = parse_structure(&file)?;
            let report = classify(&s);
            let results: Vec<_> = report.results.iter().map(|(a, r)| (a.to_string(), r.clone())).collect();
            print_report(out, &ReportDocument::new(&s, &results), json).map_err(io)?;
            Ok(0)
        }
        Command::Check { file, axiom, json, strict } => {
            let axioms = parse_ids(&axiom, &AxiomId::ALL)?;
            let s = parse_structure(&file)?;
            let results: Vec<_> = axioms.iter().map(|&a| (a.to_string(), check_axiom(&s, a))).collect();
            let doc = ReportDocument::new(&s, &results);
            print_report(out, &doc, json).map_err(io)?;
            Ok(doc.exit_code(strict))
        }
        Command::Identity { file, id, json, strict } => {
            let ids = parse_ids(&id, &IdentityId::ALL)?;
            let s = parse_structure(&file)?;
            let results: Vec<_> = ids.iter().map(|&i| (i.to_string(), check_identity(&s, i))).collect();
            let doc = ReportDocument::new(&s, &results);
            print_report(out, &doc, json).map_err(io)?;
            Ok(doc.exit_code(strict))
        }
        Command::Catalog { action: CatalogCommand::List } => {
            for name in catalog::NAMES {
                writeln!(out, "{name}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogCommand::Emit { name, output, unitalize, twist } } => {
            let mut s = catalog::by_name(&name)?;
            if let Some(path) = twist {
                let tf: TwistFile = serde_json::from_str(&read(&path)?).map_err(|e| CliError::Parse(e.to_string()))?;
                let data = tf.to_data(&s)?;
                s = catalog::twist(&s, &data)?;
            }
            if unitalize {
                s = catalog::unitalize(&s)?;
            }
            emit_to(out, output.as_deref(), &emit_structure(&s))?;
            Ok(0)
        }
        Command::Catalog { action: CatalogCommand::Twist { name, output } } => {
            let s = catalog::by_name(&name)?;
            let found = catalog::search_twist(&s, catalog::TWIST_SEED)?
                .ok_or_else(|| CliError::Usage(format!("no invertible twist found for {name}")))?;
            emit_to(out, output.as_deref(), &TwistFile::from_data(&s, &found.data).render())?;
            Ok(0)
        }
        Command::Complete { file, output } => {
            let s = parse_structure(&file)?;
            write_file(&output, &emit_structure(&catalog::unitalize(&s)?))?;
            Ok(0)
        }
    }
}

/// Runs the command line; returns the process exit code. Usage and parse
/// errors give 2 with a message on `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
