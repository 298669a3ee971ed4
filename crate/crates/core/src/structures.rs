//! Finite-dimensional structures given by structure constants, and the
//! individual axiom checks that place them in the hierarchy
//! semibialgebra ⊂ VN-core ⊂ unital VN-core, very weak bialgebra ⊂ very weak
//! Hopf algebra, Hopf algebra, quasi-VN-core.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Field, Scalar};
use crate::tensor::{self, identity, index_tuple, swap, LinMap, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("missing map: {0}")]
    MissingMap(&'static str),
}

impl From<TensorError> for StructureError {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::FieldMismatch { left, right } => {
                StructureError::FieldMismatch(format!("{left} vs {right}"))
            }
            other => StructureError::Shape(other.to_string()),
        }
    }
}

/// Unvalidated structure data; [`RawStructure::build`] checks it.
#[derive(Debug, Clone)]
pub struct RawStructure {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub mu: LinMap,
    pub delta: LinMap,
    pub unit: Option<LinMap>,
    pub counit: Option<LinMap>,
    pub antipode: Option<LinMap>,
    pub alpha: Option<LinMap>,
    pub beta: Option<LinMap>,
}

impl RawStructure {
    pub fn build(self) -> Result<Structure, StructureError> {
        Structure::build(self)
    }
}

/// An object `A = k^n` with multiplication, comultiplication and the optional
/// unit, counit, endomorphism `S` and elements `α`, `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    name: String,
    field: Field,
    dim: usize,
    basis: Option<Vec<String>>,
    mu: LinMap,
    delta: LinMap,
    unit: Option<LinMap>,
    counit: Option<LinMap>,
    antipode: Option<LinMap>,
    alpha: Option<LinMap>,
    beta: Option<LinMap>,
}

fn check_map(
    what: &str,
    map: &LinMap,
    field: Field,
    dim: usize,
    ranks: (usize, usize),
) -> Result<(), StructureError> {
    if map.field() != field {
        return Err(StructureError::FieldMismatch(format!(
            "{what} is over {} but the structure is over {field}",
            map.field()
        )));
    }
    if map.dim() != dim {
        return Err(StructureError::Shape(format!(
            "{what} has base dimension {} but the structure has {dim}",
            map.dim()
        )));
    }
    if (map.src_rank(), map.tgt_rank()) != ranks {
        return Err(StructureError::Shape(format!(
            "{what} must have rank {}→{}, got {}→{}",
            ranks.0,
            ranks.1,
            map.src_rank(),
            map.tgt_rank()
        )));
    }
    Ok(())
}

impl Structure {
    pub fn build(raw: RawStructure) -> Result<Structure, StructureError> {
        let RawStructure { name, field, dim, basis, mu, delta, unit, counit, antipode, alpha, beta } = raw;
        if dim == 0 {
            return Err(StructureError::Shape("dimension must be positive".into()));
        }
        if let Some(b) = &basis {
            if b.len() != dim {
                return Err(StructureError::Shape(format!(
                    "{} basis labels for dimension {dim}",
                    b.len()
                )));
            }
        }
        check_map("mul", &mu, field, dim, (2, 1))?;
        check_map("comul", &delta, field, dim, (1, 2))?;
        let optional = [
            ("unit", &unit, (0, 1)),
            ("counit", &counit, (1, 0)),
            ("S", &antipode, (1, 1)),
            ("alpha", &alpha, (0, 1)),
            ("beta", &beta, (0, 1)),
        ];
        for (what, map, ranks) in optional {
            if let Some(m) = map {
                check_map(what, m, field, dim, ranks)?;
            }
        }
        Ok(Structure { name, field, dim, basis, mu, delta, unit, counit, antipode, alpha, beta })
    }

    pub fn to_raw(&self) -> RawStructure {
        RawStructure {
            name: self.name.clone(),
            field: self.field,
            dim: self.dim,
            basis: self.basis.clone(),
            mu: self.mu.clone(),
            delta: self.delta.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Structure {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> Option<&[String]> {
        self.basis.as_deref()
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn unit(&self) -> Option<&LinMap> {
        self.unit.as_ref()
    }

    pub fn counit(&self) -> Option<&LinMap> {
        self.counit.as_ref()
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn alpha(&self) -> Option<&LinMap> {
        self.alpha.as_ref()
    }

    pub fn beta(&self) -> Option<&LinMap> {
        self.beta.as_ref()
    }

    pub fn require_unit(&self) -> Result<&LinMap, StructureError> {
        self.unit().ok_or(StructureError::MissingMap("unit"))
    }

    pub fn require_counit(&self) -> Result<&LinMap, StructureError> {
        self.counit().ok_or(StructureError::MissingMap("counit"))
    }

    pub fn require_antipode(&self) -> Result<&LinMap, StructureError> {
        self.antipode().ok_or(StructureError::MissingMap("S"))
    }

    pub fn require_alpha(&self) -> Result<&LinMap, StructureError> {
        self.alpha().ok_or(StructureError::MissingMap("alpha"))
    }

    pub fn require_beta(&self) -> Result<&LinMap, StructureError> {
        self.beta().ok_or(StructureError::MissingMap("beta"))
    }

    /// The identity on `A^{⊗rank}`.
    pub fn id(&self, rank: usize) -> LinMap {
        identity(self.field, self.dim, rank)
    }

    pub fn swap(&self) -> LinMap {
        swap(self.field, self.dim)
    }

    /// `μ₃ = μ(μ ⊗ 1)`.
    pub fn mu3(&self) -> LinMap {
        self.mu
            .compose(&self.mu.tensor(&self.id(1)).unwrap())
            .expect("ranks checked at build")
    }

    /// `δ₃ = (δ ⊗ 1)δ`.
    pub fn delta3(&self) -> LinMap {
        self.delta
            .tensor(&self.id(1))
            .unwrap()
            .compose(&self.delta)
            .expect("ranks checked at build")
    }

    /// `α ⋆ β = μ(α ⊗ β)δ` for rank 1→1 maps.
    pub fn convolve(&self, a: &LinMap, b: &LinMap) -> Result<LinMap, StructureError> {
        for (what, m) in [("left operand", a), ("right operand", b)] {
            check_map(what, m, self.field, self.dim, (1, 1))?;
        }
        Ok(LinMap::chain(&[&self.mu, &a.tensor(b)?, &self.delta])?)
    }

    /// `ηε`, the unit of the convolution algebra.
    pub fn unit_counit(&self) -> Result<LinMap, StructureError> {
        Ok(self.require_unit()?.compose(self.require_counit()?)?)
    }

    /// The multiplication of the algebra `A ⊗ A`: `(μ ⊗ μ)(1 ⊗ c ⊗ 1)`.
    pub fn mu_pair(&self) -> LinMap {
        self.mu
            .tensor(&self.mu)
            .unwrap()
            .permute_source(&[0, 2, 1, 3])
            .expect("rank 4 permutation")
    }

    /// Product of two elements of `A^{⊗rank}` for rank 1 or 2.
    pub fn multiply(&self, rank: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = match rank {
            1 => self.mu.clone(),
            2 => self.mu_pair(),
            _ => panic!("multiply supports ranks 1 and 2"),
        };
        let xm = LinMap::element(self.field, self.dim, rank, x.to_vec()).unwrap();
        let ym = LinMap::element(self.field, self.dim, rank, y.to_vec()).unwrap();
        m.compose(&xm.tensor(&ym).unwrap()).unwrap().entries().to_vec()
    }

    pub fn basis_label(&self, i: usize) -> String {
        match &self.basis {
            Some(b) => b[i].clone(),
            None => format!("b{i}"),
        }
    }

    /// `"x⊗y"` for a basis tuple; `"1"` for the empty tuple.
    pub fn render_tuple(&self, tuple: &[usize]) -> String {
        if tuple.is_empty() {
            return "1".into();
        }
        tuple.iter().map(|&i| self.basis_label(i)).collect::<Vec<_>>().join("⊗")
    }

    /// Renders a vector of `A^{⊗rank}` as a linear combination of basis tuples.
    pub fn render_vector(&self, rank: usize, coords: &[Scalar]) -> String {
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| {
                let tuple = self.render_tuple(&index_tuple(self.dim, rank, idx));
                if c.is_one() {
                    tuple
                } else {
                    format!("{c}·{tuple}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// `t := (1 ⊗ εμ)(c ⊗ 1)(1 ⊗ δη)`.
pub fn compute_t(s: &Structure) -> Result<LinMap, StructureError> {
    let unit = s.require_unit()?;
    let counit = s.require_counit()?;
    let delta_unit = s.delta().compose(unit)?;
    let counit_mu = counit.compose(s.mu())?;
    Ok(LinMap::chain(&[
        &s.id(1).tensor(&counit_mu)?,
        &s.swap().tensor(&s.id(1))?,
        &s.id(1).tensor(&delta_unit)?,
    ])?)
}

/// `r := (εμ ⊗ 1)(1 ⊗ c⁻¹)(δη ⊗ 1)`, with `c⁻¹ = c`.
pub fn compute_r(s: &Structure) -> Result<LinMap, StructureError> {
    let unit = s.require_unit()?;
    let counit = s.require_counit()?;
    let delta_unit = s.delta().compose(unit)?;
    let counit_mu = counit.compose(s.mu())?;
    Ok(LinMap::chain(&[
        &counit_mu.tensor(&s.id(1))?,
        &s.id(1).tensor(&s.swap())?,
        &delta_unit.tensor(&s.id(1))?,
    ])?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomId {
    Assoc,
    Coassoc,
    Compat,
    Unit,
    Counit,
    VnCore,
    UnitalCore,
    VwhLeft,
    VwhRight,
    VwhS,
    Antipode,
    Antihom,
    DrinfeldAlpha,
    DrinfeldBeta,
    QuasiLeft,
    QuasiRight,
    SSquared,
    AlphaInvertible,
    BetaInvertible,
}

impl AxiomId {
    pub const ALL: [AxiomId; 19] = [
        AxiomId::Assoc,
        AxiomId::Coassoc,
        AxiomId::Compat,
        AxiomId::Unit,
        AxiomId::Counit,
        AxiomId::VnCore,
        AxiomId::UnitalCore,
        AxiomId::VwhLeft,
        AxiomId::VwhRight,
        AxiomId::VwhS,
        AxiomId::Antipode,
        AxiomId::Antihom,
        AxiomId::DrinfeldAlpha,
        AxiomId::DrinfeldBeta,
        AxiomId::QuasiLeft,
        AxiomId::QuasiRight,
        AxiomId::SSquared,
        AxiomId::AlphaInvertible,
        AxiomId::BetaInvertible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Assoc => "assoc",
            AxiomId::Coassoc => "coassoc",
            AxiomId::Compat => "compat",
            AxiomId::Unit => "unit",
            AxiomId::Counit => "counit",
            AxiomId::VnCore => "vn_core",
            AxiomId::UnitalCore => "unital_core",
            AxiomId::VwhLeft => "vwh_left",
            AxiomId::VwhRight => "vwh_right",
            AxiomId::VwhS => "vwh_s",
            AxiomId::Antipode => "antipode",
            AxiomId::Antihom => "antihom",
            AxiomId::DrinfeldAlpha => "drinfeld_alpha",
            AxiomId::DrinfeldBeta => "drinfeld_beta",
            AxiomId::QuasiLeft => "quasi_left",
            AxiomId::QuasiRight => "quasi_right",
            AxiomId::SSquared => "s_squared",
            AxiomId::AlphaInvertible => "alpha_invertible",
            AxiomId::BetaInvertible => "beta_invertible",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIP")]
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

/// The first basis input on which two maps differ, with both images.
///
/// For the invertibility checks, which are not equations between maps, the
/// input is the unit of the ground field, `lhs` is the element and `rhs` the
/// unit `η` it has no inverse towards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub column: usize,
    pub input: Vec<usize>,
    pub out_rank: usize,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Witness {
    pub fn render(&self, s: &Structure) -> RenderedWitness {
        RenderedWitness {
            input: s.render_tuple(&self.input),
            lhs: s.render_vector(self.out_rank, &self.lhs),
            rhs: s.render_vector(self.out_rank, &self.rhs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedWitness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for RenderedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ lhs {} ≠ rhs {}", self.input, self.lhs, self.rhs)
    }
}

/// Outcome of one check. FAIL always carries a witness and SKIP a reason;
/// `note` holds any reading the verdict depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass() -> CheckResult {
        CheckResult { verdict: Verdict::Pass, witness: None, reason: None, note: None }
    }

    pub fn fail(witness: Witness) -> CheckResult {
        CheckResult { verdict: Verdict::Fail, witness: Some(witness), reason: None, note: None }
    }

    pub fn skip(reason: impl Into<String>) -> CheckResult {
        CheckResult { verdict: Verdict::Skip, witness: None, reason: Some(reason.into()), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckResult {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Chains a second equation: only evaluated when `self` passed.
    pub fn and_then(self, next: impl FnOnce() -> CheckResult) -> CheckResult {
        if self.passed() {
            next()
        } else {
            self
        }
    }
}

impl From<Result<CheckResult, StructureError>> for CheckResult {
    fn from(r: Result<CheckResult, StructureError>) -> Self {
        match r {
            Ok(c) => c,
            Err(StructureError::MissingMap(what)) => CheckResult::skip(format!("{what} absent")),
            Err(e) => CheckResult::skip(e.to_string()),
        }
    }
}

/// PASS iff the maps are identical; otherwise FAIL on the first differing
/// basis column.
pub fn compare(lhs: &LinMap, rhs: &LinMap) -> CheckResult {
    assert_eq!(
        (lhs.src_rank(), lhs.tgt_rank(), lhs.dim()),
        (rhs.src_rank(), rhs.tgt_rank(), rhs.dim()),
        "compared maps must have the same shape"
    );
    if lhs == rhs {
        return CheckResult::pass();
    }
    let column = (0..lhs.cols())
        .find(|&c| (0..lhs.rows()).any(|r| lhs.entry(r, c) != rhs.entry(r, c)))
        .expect("unequal maps differ in some column");
    CheckResult::fail(Witness {
        column,
        input: index_tuple(lhs.dim(), lhs.src_rank(), column),
        out_rank: lhs.tgt_rank(),
        lhs: lhs.column(column),
        rhs: rhs.column(column),
    })
}

/// The two sides of every equational axiom, or `None` for the
/// invertibility checks. Multi-equation axioms yield several pairs.
pub fn axiom_sides(s: &Structure, axiom: AxiomId) -> Result<Vec<(LinMap, LinMap)>, StructureError> {
    let id1 = s.id(1);
    let mu = s.mu();
    let delta = s.delta();
    let sides = match axiom {
        AxiomId::Assoc => vec![(
            mu.compose(&id1.tensor(mu)?)?,
            mu.compose(&mu.tensor(&id1)?)?,
        )],
        AxiomId::Coassoc => vec![(
            id1.tensor(delta)?.compose(delta)?,
            delta.tensor(&id1)?.compose(delta)?,
        )],
        AxiomId::Compat => {
            let lhs = delta.compose(mu)?;
            let rhs = s.mu_pair().compose(&delta.tensor(delta)?)?;
            vec![(lhs, rhs)]
        }
        AxiomId::Unit => {
            let unit = s.require_unit()?;
            vec![
                (mu.compose(&id1.tensor(unit)?)?, id1.clone()),
                (mu.compose(&unit.tensor(&id1)?)?, id1.clone()),
            ]
        }
        AxiomId::Counit => {
            let counit = s.require_counit()?;
            vec![
                (id1.tensor(counit)?.compose(delta)?, id1.clone()),
                (counit.tensor(&id1)?.compose(delta)?, id1.clone()),
            ]
        }
        AxiomId::VnCore => {
            let sm = s.require_antipode()?;
            let mid = LinMap::tensor_all(&[&id1, sm, &id1])?;
            vec![(LinMap::chain(&[&s.mu3(), &mid, &s.delta3()])?, id1.clone())]
        }
        AxiomId::UnitalCore => {
            let sm = s.require_antipode()?;
            let unit = s.require_unit()?;
            let mid = LinMap::tensor_all(&[&id1, sm, &id1])?;
            vec![(
                id1.tensor(unit)?,
                LinMap::chain(&[&id1.tensor(mu)?, &mid, &s.delta3()])?,
            )]
        }
        AxiomId::VwhLeft => {
            let sm = s.require_antipode()?;
            let t = compute_t(s)?;
            vec![(LinMap::chain(&[mu, &sm.tensor(&id1)?, delta])?, t)]
        }
        AxiomId::VwhRight => {
            let sm = s.require_antipode()?;
            let r = compute_r(s)?;
            vec![(LinMap::chain(&[mu, &id1.tensor(sm)?, delta])?, r)]
        }
        AxiomId::VwhS => {
            let sm = s.require_antipode()?;
            let outer = LinMap::tensor_all(&[sm, &id1, sm])?;
            vec![(LinMap::chain(&[&s.mu3(), &outer, &s.delta3()])?, sm.clone())]
        }
        AxiomId::Antipode => {
            let sm = s.require_antipode()?;
            let ue = s.unit_counit()?;
            vec![(s.convolve(sm, &id1)?, ue.clone()), (s.convolve(&id1, sm)?, ue)]
        }
        AxiomId::Antihom => {
            let sm = s.require_antipode()?;
            let mut sides = vec![(
                sm.compose(mu)?,
                LinMap::chain(&[mu, &s.swap(), &sm.tensor(sm)?])?,
            )];
            if let Some(unit) = s.unit() {
                sides.push((sm.compose(unit)?, unit.clone()));
            }
            sides
        }
        AxiomId::DrinfeldAlpha => {
            let sm = s.require_antipode()?;
            let alpha = s.require_alpha()?;
            let counit = s.require_counit()?;
            let mid = LinMap::tensor_all(&[sm, alpha, &id1])?;
            vec![(LinMap::chain(&[&s.mu3(), &mid, delta])?, alpha.compose(counit)?)]
        }
        AxiomId::DrinfeldBeta => {
            let sm = s.require_antipode()?;
            let beta = s.require_beta()?;
            let counit = s.require_counit()?;
            let mid = LinMap::tensor_all(&[&id1, beta, sm])?;
            vec![(LinMap::chain(&[&s.mu3(), &mid, delta])?, beta.compose(counit)?)]
        }
        AxiomId::QuasiLeft | AxiomId::QuasiRight => {
            let sm = s.require_antipode()?;
            let mid = LinMap::tensor_all(&[&id1, sm, &id1])?;
            let split = if axiom == AxiomId::QuasiLeft {
                delta.tensor(&id1)?
            } else {
                id1.tensor(delta)?
            };
            vec![(LinMap::chain(&[&s.mu3(), &mid, &split, delta])?, id1.clone())]
        }
        AxiomId::SSquared => {
            let sm = s.require_antipode()?;
            vec![(sm.compose(sm)?, id1.clone())]
        }
        AxiomId::AlphaInvertible | AxiomId::BetaInvertible => Vec::new(),
    };
    Ok(sides)
}

/// Whether `element` has a two-sided inverse `v` in the algebra:
/// `μ(x ⊗ v) = μ(v ⊗ x) = η`, found by an exact linear solve.
pub fn algebra_inverse(s: &Structure, element: &LinMap) -> Result<Option<Vec<Scalar>>, StructureError> {
    let unit = s.require_unit()?;
    let id1 = s.id(1);
    let left = s.mu().compose(&element.tensor(&id1)?)?;
    let right = s.mu().compose(&id1.tensor(element)?)?;
    let mut a = left.entries().to_vec();
    a.extend_from_slice(right.entries());
    let mut b = unit.entries().to_vec();
    b.extend_from_slice(unit.entries());
    Ok(tensor::solve(s.field(), &a, s.dim(), &b))
}

fn check_invertible(s: &Structure, element: &LinMap) -> Result<CheckResult, StructureError> {
    Ok(match algebra_inverse(s, element)? {
        Some(_) => CheckResult::pass(),
        None => CheckResult::fail(Witness {
            column: 0,
            input: Vec::new(),
            out_rank: 1,
            lhs: element.entries().to_vec(),
            rhs: s.require_unit()?.entries().to_vec(),
        }),
    })
}

fn check_axiom_inner(s: &Structure, axiom: AxiomId) -> Result<CheckResult, StructureError> {
    match axiom {
        AxiomId::AlphaInvertible => {
            let alpha = s.require_alpha()?;
            check_invertible(s, alpha)
        }
        AxiomId::BetaInvertible => {
            let beta = s.require_beta()?;
            check_invertible(s, beta)
        }
        _ => {
            let sides = axiom_sides(s, axiom)?;
            Ok(sides
                .iter()
                .fold(CheckResult::pass(), |acc, (l, r)| acc.and_then(|| compare(l, r))))
        }
    }
}

/// Checks one axiom exactly; absent maps give SKIP, never FAIL.
pub fn check_axiom(s: &Structure, axiom: AxiomId) -> CheckResult {
    check_axiom_inner(s, axiom).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Semibialgebra,
    VnCore,
    UnitalVnCore,
    VeryWeakBialgebra,
    VeryWeakHopf,
    Hopf,
    QuasiVnCore,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Semibialgebra => "semibialgebra",
            Label::VnCore => "vn_core",
            Label::UnitalVnCore => "unital_vn_core",
            Label::VeryWeakBialgebra => "very_weak_bialgebra",
            Label::VeryWeakHopf => "very_weak_hopf",
            Label::Hopf => "hopf",
            Label::QuasiVnCore => "quasi_vn_core",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Derives the classification labels from per-axiom verdicts.
pub fn labels_from(passed: impl Fn(AxiomId) -> bool) -> Vec<Label> {
    use AxiomId::*;
    let semi = passed(Assoc) && passed(Coassoc) && passed(Compat);
    let vn = semi && passed(VnCore);
    let unital = vn && passed(Unit) && passed(UnitalCore);
    let vwb = semi && passed(Unit) && passed(Counit);
    let vwh = vwb && passed(VwhLeft) && passed(VwhRight) && passed(VwhS);
    let hopf = vwb && passed(Antipode);
    let quasi = passed(Assoc)
        && passed(Unit)
        && passed(Counit)
        && passed(DrinfeldAlpha)
        && passed(DrinfeldBeta)
        && passed(QuasiLeft)
        && passed(QuasiRight);
    [
        (semi, Label::Semibialgebra),
        (vn, Label::VnCore),
        (unital, Label::UnitalVnCore),
        (vwb, Label::VeryWeakBialgebra),
        (vwh, Label::VeryWeakHopf),
        (hopf, Label::Hopf),
        (quasi, Label::QuasiVnCore),
    ]
    .into_iter()
    .filter_map(|(ok, label)| ok.then_some(label))
    .collect()
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub structure: String,
    pub results: Vec<(AxiomId, CheckResult)>,
    pub labels: Vec<Label>,
}

impl AxiomReport {
    pub fn result(&self, axiom: AxiomId) -> &CheckResult {
        &self
            .results
            .iter()
            .find(|(a, _)| *a == axiom)
            .expect("every axiom is checked")
            .1
    }

    pub fn has(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }
}

/// Runs every axiom and derives the labels.
pub fn classify(s: &Structure) -> AxiomReport {
    let results: Vec<(AxiomId, CheckResult)> =
        AxiomId::ALL.iter().map(|&a| (a, check_axiom(s, a))).collect();
    let labels = labels_from(|a| results.iter().any(|(id, r)| *id == a && r.passed()));
    AxiomReport { structure: s.name().to_string(), results, labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: Field = Field::Rational;

    #[test]
    fn wrong_rank_is_a_shape_error() {
        let z2 = catalog::by_name("z2").unwrap();
        let mut raw = z2.to_raw();
        raw.mu = z2.delta().clone();
        assert!(matches!(raw.build(), Err(StructureError::Shape(_))));
        let mut raw = z2.to_raw();
        raw.basis = Some(vec!["e".into()]);
        assert!(matches!(raw.build(), Err(StructureError::Shape(_))));
        let mut raw = z2.to_raw();
        raw.unit = Some(identity(Field::Prime(3), 2, 1));
        assert!(raw.build().is_err());
    }

    #[test]
    fn missing_antipode_skips() {
        let mut raw = catalog::by_name("z2").unwrap().to_raw();
        raw.antipode = None;
        let s = raw.build().unwrap();
        let r = check_axiom(&s, AxiomId::VnCore);
        assert_eq!(r.verdict, Verdict::Skip);
        assert_eq!(r.reason.as_deref(), Some("S absent"));
        assert!(check_axiom(&s, AxiomId::Assoc).passed());
    }

    #[test]
    fn z3_with_identity_s_fails_vn_core_on_g() {
        let s = catalog::by_name("z3_bad_s").unwrap();
        let r = check_axiom(&s, AxiomId::VnCore);
        let w = r.witness.expect("fail carries a witness");
        assert_eq!(r.verdict, Verdict::Fail);
        // g·g·g = e
        assert_eq!(w.input, vec![1]);
        assert_eq!(w.lhs, vec![Q.one(), Q.zero(), Q.zero()]);
        assert_eq!(w.rhs, vec![Q.zero(), Q.one(), Q.zero()]);
        assert_eq!(w.render(&s).input, "g");
    }

    #[test]
    fn groupoid_t_and_r_are_identity() {
        let s = catalog::by_name("groupoid2").unwrap();
        assert_eq!(compute_t(&s).unwrap(), s.id(1));
        assert_eq!(compute_r(&s).unwrap(), s.id(1));
        assert!(check_axiom(&s, AxiomId::VwhLeft).passed());
        let r = check_axiom(&s, AxiomId::Antipode);
        assert!(r.failed());
        // S⋆1(e₀) = e₀ while ηε(e₀) = e₀ + e₁
        let w = r.witness.unwrap();
        assert_eq!(w.lhs, vec![Q.one(), Q.zero()]);
        assert_eq!(w.rhs, vec![Q.one(), Q.one()]);
    }

    #[test]
    fn grouplike_unit_gives_t_equal_unit_counit() {
        let s = catalog::by_name("z2").unwrap();
        let ue = s.unit_counit().unwrap();
        assert_eq!(compute_t(&s).unwrap(), ue);
        assert_eq!(compute_r(&s).unwrap(), ue);
        let mut raw = s.to_raw();
        raw.counit = None;
        assert_eq!(compute_t(&raw.build().unwrap()), Err(StructureError::MissingMap("counit")));
        let mut raw = s.to_raw();
        raw.unit = None;
        assert_eq!(compute_r(&raw.build().unwrap()), Err(StructureError::MissingMap("unit")));
    }

    #[test]
    fn classification_examples() {
        use Label::*;
        let z2 = classify(&catalog::by_name("z2").unwrap());
        assert_eq!(
            z2.labels,
            vec![Semibialgebra, VnCore, UnitalVnCore, VeryWeakBialgebra, VeryWeakHopf, Hopf]
        );
        let lz = classify(&catalog::by_name("leftzero2").unwrap());
        assert_eq!(lz.labels, vec![Semibialgebra, VnCore]);
        assert_eq!(lz.result(AxiomId::Unit).verdict, Verdict::Skip);
        let sw = classify(&catalog::by_name("sweedler").unwrap());
        assert!(sw.has(Hopf));
        assert!(sw.result(AxiomId::SSquared).failed());
    }

    #[test]
    fn sweedler_s_squared_negates_x() {
        let s = catalog::by_name("sweedler").unwrap();
        let sm = s.antipode().unwrap();
        let s2 = sm.compose(sm).unwrap();
        // basis 1, g, x, gx: S² fixes 1, g and negates x, gx
        let diag: Vec<i64> = vec![1, 1, -1, -1];
        for (i, &d) in diag.iter().enumerate() {
            for j in 0..4 {
                let expected = if i == j { Scalar::from_i64(Q, d) } else { Q.zero() };
                assert_eq!(s2.entry(j, i), &expected);
            }
        }
    }

    #[test]
    fn invertibility_uses_algebra_inverse() {
        let mut raw = catalog::by_name("z3").unwrap().to_raw();
        // α = 2g is invertible with inverse g²/2; β = e + g + g² is not
        raw.alpha = Some(LinMap::element(Q, 3, 1, vec![Q.zero(), Scalar::from_i64(Q, 2), Q.zero()]).unwrap());
        raw.beta = Some(LinMap::element(Q, 3, 1, vec![Q.one(); 3]).unwrap());
        let s = raw.build().unwrap();
        let inv = algebra_inverse(&s, s.alpha().unwrap()).unwrap().unwrap();
        assert_eq!(inv, vec![Q.zero(), Q.zero(), Scalar::ratio(Q, 1, 2).unwrap()]);
        assert!(check_axiom(&s, AxiomId::AlphaInvertible).passed());
        assert!(check_axiom(&s, AxiomId::BetaInvertible).failed());
    }

    #[test]
    fn never_skips_when_maps_exist() {
        for name in catalog::NAMES {
            let s = catalog::by_name(name).unwrap();
            for a in AxiomId::ALL {
                let r = check_axiom(&s, a);
                let needs_alpha = matches!(a, AxiomId::DrinfeldAlpha | AxiomId::AlphaInvertible);
                let needs_beta = matches!(a, AxiomId::DrinfeldBeta | AxiomId::BetaInvertible);
                if r.verdict == Verdict::Skip {
                    let absent = (needs_alpha && s.alpha().is_none())
                        || (needs_beta && s.beta().is_none())
                        || s.unit().is_none()
                        || s.counit().is_none()
                        || s.antipode().is_none();
                    assert!(absent, "{name} skipped {a} with all maps present");
                }
            }
        }
    }

    #[test]
    fn witnesses_reproduce() {
        for name in catalog::NAMES {
            let s = catalog::by_name(name).unwrap();
            for a in AxiomId::ALL {
                let r = check_axiom(&s, a);
                let Some(w) = r.witness else { continue };
                if matches!(a, AxiomId::AlphaInvertible | AxiomId::BetaInvertible) {
                    continue;
                }
                let sides = axiom_sides(&s, a).unwrap();
                let reproduced = sides.iter().any(|(l, rr)| {
                    l.column(w.column) == w.lhs && rr.column(w.column) == w.rhs
                });
                assert!(reproduced, "{name}/{a}");
            }
        }
    }

    #[test]
    fn axiom_names_round_trip() {
        for a in AxiomId::ALL {
            assert_eq!(a.as_str().parse::<AxiomId>().unwrap(), a);
            assert_eq!(serde_json::to_string(&a).unwrap(), format!("\"{a}\""));
        }
        assert!("nope".parse::<AxiomId>().is_err());
    }
}
