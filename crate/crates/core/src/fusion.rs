//! The fusion map `f = (1⊗μ)(δ⊗1)`, its tentative inverse
//! `g = (1⊗μ)(1⊗S⊗1)(δ⊗1)`, convolution, the left Fourier transform, and
//! executable checks of the identities relating them.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::structures::{
    check_axiom, classify, compare, compute_t, AxiomId, CheckResult, Label, Structure, StructureError,
};
use crate::tensor::{place_on_legs, LinMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("g is not a generalized inverse of f: fgf ≠ f")]
    NotAGeneralizedInverse,
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Reading of "VN-bialgebra" used by the `prop5` check.
pub const PROP5_ASSUMPTION: &str =
    "assumes VN-bialgebra := very_weak_bialgebra ∧ vn_core; implication checked on this instance only";

/// Seed of the pseudo-random endomorphism sample.
pub const SAMPLE_SEED: u64 = 0x00f0_0121e;
/// Number of seeded pairs in the default sample.
pub const SAMPLE_PAIRS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    FgfF,
    GfgG,
    GfId,
    FgId,
    FusionEq,
    FourierHom,
    OneStarT,
    SStar1StarS,
    QuasiConvAssoc,
    LAlphaMult,
    LBetaMult,
    Prop5,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::FgfF,
        IdentityId::GfgG,
        IdentityId::GfId,
        IdentityId::FgId,
        IdentityId::FusionEq,
        IdentityId::FourierHom,
        IdentityId::OneStarT,
        IdentityId::SStar1StarS,
        IdentityId::QuasiConvAssoc,
        IdentityId::LAlphaMult,
        IdentityId::LBetaMult,
        IdentityId::Prop5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::FgfF => "fgf_f",
            IdentityId::GfgG => "gfg_g",
            IdentityId::GfId => "gf_id",
            IdentityId::FgId => "fg_id",
            IdentityId::FusionEq => "fusion_eq",
            IdentityId::FourierHom => "fourier_hom",
            IdentityId::OneStarT => "one_star_t",
            IdentityId::SStar1StarS => "s_star_1_star_s",
            IdentityId::QuasiConvAssoc => "quasi_conv_assoc",
            IdentityId::LAlphaMult => "l_alpha_mult",
            IdentityId::LBetaMult => "l_beta_mult",
            IdentityId::Prop5 => "prop5",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// `f = (1 ⊗ μ)(δ ⊗ 1)`.
pub fn fusion_f(s: &Structure) -> LinMap {
    fourier_l(&s.id(1), s).expect("identity has the right shape")
}

/// `g = (1 ⊗ μ)(1 ⊗ S ⊗ 1)(δ ⊗ 1)`.
pub fn fusion_g(s: &Structure) -> Result<LinMap, StructureError> {
    fourier_l(s.require_antipode()?, s)
}

/// `α ⋆ β = μ(α ⊗ β)δ`.
pub fn convolution(alpha: &LinMap, beta: &LinMap, s: &Structure) -> Result<LinMap, StructureError> {
    s.convolve(alpha, beta)
}

/// `l(α) = (1 ⊗ μ)(1 ⊗ α ⊗ 1)(δ ⊗ 1)` for an endomorphism `α` of `A`.
pub fn fourier_l(alpha: &LinMap, s: &Structure) -> Result<LinMap, StructureError> {
    if (alpha.src_rank(), alpha.tgt_rank(), alpha.dim()) != (1, 1, s.dim()) || alpha.field() != s.field() {
        return Err(StructureError::Shape("Fourier transform needs an endomorphism of A".into()));
    }
    let id1 = s.id(1);
    Ok(LinMap::chain(&[
        &id1.tensor(s.mu())?,
        &LinMap::tensor_all(&[&id1, alpha, &id1])?,
        &s.delta().tensor(&id1)?,
    ])?)
}

/// `f₁₂ f₁₃ f₂₃` and `f₂₃ f₁₂` on `A^{⊗3}`, composed right to left.
pub fn fusion_equation_sides(f: &LinMap) -> (LinMap, LinMap) {
    let f12 = place_on_legs(f, (1, 2), 3).expect("rank 2→2 map");
    let f13 = place_on_legs(f, (1, 3), 3).expect("rank 2→2 map");
    let f23 = place_on_legs(f, (2, 3), 3).expect("rank 2→2 map");
    let lhs = LinMap::chain(&[&f12, &f13, &f23]).unwrap();
    let rhs = f23.compose(&f12).unwrap();
    (lhs, rhs)
}

fn random_endo(s: &Structure, rng: &mut ChaCha8Rng) -> LinMap {
    let n = s.dim();
    let data = (0..n * n).map(|_| Scalar::from_i64(s.field(), rng.random_range(-2..=2))).collect();
    LinMap::from_entries(s.field(), n, 1, 1, data).unwrap()
}

/// The structured endomorphisms `1`, `S`, `ηε` that exist on `s`.
pub fn structured_endos(s: &Structure) -> Vec<LinMap> {
    let mut out = vec![s.id(1)];
    if let Some(sm) = s.antipode() {
        out.push(sm.clone());
    }
    if let Ok(ue) = s.unit_counit() {
        out.push(ue);
    }
    out
}

/// Deterministic pairs of endomorphisms: [`SAMPLE_PAIRS`] seeded pairs with
/// entries in −2..=2, then every ordered pair of [`structured_endos`].
pub fn sample_pairs(s: &Structure) -> Vec<(LinMap, LinMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut pairs: Vec<(LinMap, LinMap)> = (0..SAMPLE_PAIRS)
        .map(|_| (random_endo(s, &mut rng), random_endo(s, &mut rng)))
        .collect();
    let structured = structured_endos(s);
    for a in &structured {
        for b in &structured {
            pairs.push((a.clone(), b.clone()));
        }
    }
    pairs
}

/// Seeded triples for convolution associativity, same distribution as
/// [`sample_pairs`].
pub fn sample_triples(s: &Structure) -> Vec<(LinMap, LinMap, LinMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 0x7);
    (0..SAMPLE_PAIRS)
        .map(|_| (random_endo(s, &mut rng), random_endo(s, &mut rng), random_endo(s, &mut rng)))
        .collect()
}

/// Every ordered pair of matrix units `E_ij`; only sensible for small `n`.
pub fn exhaustive_pairs(s: &Structure) -> Vec<(LinMap, LinMap)> {
    let n = s.dim();
    let field = s.field();
    let units: Vec<LinMap> = (0..n * n)
        .map(|k| LinMap::from_fn(field, n, 1, 1, |r, c| if r * n + c == k { field.one() } else { field.zero() }))
        .collect();
    units.iter().flat_map(|a| units.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

/// Checks `l(α ⋆ β) = l(α) l(β)` over the given pairs.
pub fn fourier_hom_on(s: &Structure, pairs: &[(LinMap, LinMap)]) -> Result<CheckResult, StructureError> {
    for (a, b) in pairs {
        let lhs = fourier_l(&convolution(a, b, s)?, s)?;
        let rhs = fourier_l(a, s)?.compose(&fourier_l(b, s)?)?;
        let r = compare(&lhs, &rhs);
        if !r.passed() {
            return Ok(r);
        }
    }
    Ok(CheckResult::pass())
}

fn element_as_endo(element: &LinMap, s: &Structure) -> Result<LinMap, StructureError> {
    Ok(element.compose(s.require_counit()?)?)
}

fn check_identity_inner(s: &Structure, id: IdentityId) -> Result<CheckResult, StructureError> {
    let id1 = s.id(1);
    Ok(match id {
        IdentityId::FgfF => {
            let (f, g) = (fusion_f(s), fusion_g(s)?);
            compare(&LinMap::chain(&[&f, &g, &f])?, &f)
        }
        IdentityId::GfgG => {
            let (f, g) = (fusion_f(s), fusion_g(s)?);
            compare(&LinMap::chain(&[&g, &f, &g])?, &g)
        }
        IdentityId::GfId => compare(&fusion_g(s)?.compose(&fusion_f(s))?, &s.id(2)),
        IdentityId::FgId => compare(&fusion_f(s).compose(&fusion_g(s)?)?, &s.id(2)),
        IdentityId::FusionEq => {
            let (lhs, rhs) = fusion_equation_sides(&fusion_f(s));
            compare(&lhs, &rhs)
        }
        IdentityId::FourierHom => fourier_hom_on(s, &sample_pairs(s))?,
        IdentityId::OneStarT => compare(&convolution(&id1, &compute_t(s)?, s)?, &id1),
        IdentityId::SStar1StarS => {
            let sm = s.require_antipode()?;
            let left = convolution(&convolution(sm, &id1, s)?, sm, s)?;
            let right = convolution(sm, &convolution(&id1, sm, s)?, s)?;
            compare(&left, sm).and_then(|| compare(&right, sm))
        }
        IdentityId::QuasiConvAssoc => {
            let sm = s.require_antipode()?;
            let left = convolution(&convolution(&id1, sm, s)?, &id1, s)?;
            let right = convolution(&id1, &convolution(sm, &id1, s)?, s)?;
            compare(&left, &right)
        }
        IdentityId::LAlphaMult => {
            let a = element_as_endo(s.require_alpha()?, s)?;
            let lhs = fourier_l(&convolution(&a, &id1, s)?, s)?;
            let rhs = fourier_l(&a, s)?.compose(&fusion_f(s))?;
            compare(&lhs, &rhs)
        }
        IdentityId::LBetaMult => {
            let b = element_as_endo(s.require_beta()?, s)?;
            let lhs = fourier_l(&convolution(&id1, &b, s)?, s)?;
            let rhs = fusion_f(s).compose(&fourier_l(&b, s)?)?;
            compare(&lhs, &rhs)
        }
        IdentityId::Prop5 => prop5(s).with_note(PROP5_ASSUMPTION),
    })
}

/// IF very weak bialgebra ∧ VN-core ∧ S antihomomorphic ∧ gfg = g THEN S is
/// an antipode. PASS means the implication holds on `s`, possibly vacuously.
fn prop5(s: &Structure) -> CheckResult {
    let report = classify(s);
    let hypotheses = report.has(Label::VeryWeakBialgebra)
        && report.has(Label::VnCore)
        && report.result(AxiomId::Antihom).passed()
        && check_identity(s, IdentityId::GfgG).passed();
    if !hypotheses {
        return CheckResult::pass();
    }
    let antipode = report.result(AxiomId::Antipode).clone();
    debug_assert_eq!(antipode, check_axiom(s, AxiomId::Antipode));
    CheckResult { note: None, ..antipode }
}

/// Checks one identity exactly; absent maps give SKIP.
pub fn check_identity(s: &Structure, id: IdentityId) -> CheckResult {
    check_identity_inner(s, id).into()
}

pub fn check_all_identities(s: &Structure) -> Vec<(IdentityId, CheckResult)> {
    IdentityId::ALL.iter().map(|&i| (i, check_identity(s, i))).collect()
}

/// Given `fgf = f`, returns `h = gfg`, which satisfies `fhf = f` and `hfh = h`.
pub fn generalized_inverse(f: &LinMap, g: &LinMap) -> Result<LinMap, FusionError> {
    let square = |m: &LinMap| m.src_rank() == m.tgt_rank();
    if !square(f) || !square(g) || f.src_rank() != g.src_rank() || f.dim() != g.dim() || f.field() != g.field() {
        return Err(FusionError::Shape("f and g must be square maps of the same shape".into()));
    }
    let chain = |a: &LinMap, b: &LinMap, c: &LinMap| LinMap::chain(&[a, b, c]).expect("shapes checked");
    if chain(f, g, f) != *f {
        return Err(FusionError::NotAGeneralizedInverse);
    }
    let h = chain(g, f, g);
    if chain(f, &h, f) != *f || chain(&h, f, &h) != h {
        return Err(FusionError::NotAGeneralizedInverse);
    }
    Ok(h)
}
