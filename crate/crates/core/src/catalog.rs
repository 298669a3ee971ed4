//! Concrete structures: semigroup cores, group algebras, Sweedler's
//! four-dimensional Hopf algebra, discrete groupoid algebras, the unitalization
//! `A ⊕ k`, and twists of Hopf algebras by an invertible `F ∈ A ⊗ A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalar::{Field, Scalar};
use crate::structures::{check_axiom, classify, AxiomId, CheckResult, Label, RawStructure, Structure, StructureError, Witness};
use crate::tensor::{self, tuple_index, LinMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("semigroup table is not Von Neumann regular: {0}")]
    NotVNRegular(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("bad semigroup table: {0}")]
    BadTable(String),
    #[error("structure {0} is not a Hopf algebra")]
    NotHopf(String),
    #[error("bad twist: {0}")]
    BadTwist(String),
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Catalog names accepted by [`by_name`].
pub const NAMES: [&str; 10] = [
    "trivial",
    "z2",
    "z3",
    "s3",
    "klein4",
    "sweedler",
    "leftzero2",
    "rectband22",
    "groupoid2",
    "z3_bad_s",
];

/// Seed of the deterministic twist search.
pub const TWIST_SEED: u64 = 0x5eed_0ff0;
/// Attempts made by [`search_twist`] before giving up on a non-coassociative twist.
pub const TWIST_ATTEMPTS: usize = 64;

/// A finite semigroup by Cayley table, with a chosen pseudo-inverse for each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    table: Vec<Vec<usize>>,
    pseudo_inverse: Vec<usize>,
    labels: Vec<String>,
}

impl SemigroupTable {
    pub fn new(
        table: Vec<Vec<usize>>,
        pseudo_inverse: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<SemigroupTable, CatalogError> {
        let m = table.len();
        if m == 0 {
            return Err(CatalogError::BadTable("empty table".into()));
        }
        if table.iter().any(|row| row.len() != m || row.iter().any(|&v| v >= m)) {
            return Err(CatalogError::BadTable("rows must have length m with entries in [0, m)".into()));
        }
        if pseudo_inverse.len() != m || pseudo_inverse.iter().any(|&v| v >= m) {
            return Err(CatalogError::BadTable("pseudo-inverse map out of range".into()));
        }
        if labels.len() != m {
            return Err(CatalogError::BadTable("one label per element".into()));
        }
        Ok(SemigroupTable { table, pseudo_inverse, labels })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The two-sided identity element, if any.
    pub fn identity_element(&self) -> Option<usize> {
        let m = self.size();
        (0..m).find(|&e| (0..m).all(|a| self.product(e, a) == a && self.product(a, e) == a))
    }

    /// Replaces the pseudo-inverse map with group inversion.
    fn with_group_inverse(mut self) -> Result<SemigroupTable, CatalogError> {
        let e = self
            .identity_element()
            .ok_or_else(|| CatalogError::NotAGroup("no identity element".into()))?;
        let m = self.size();
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| self.product(a, b) == e && self.product(b, a) == e)
                .ok_or_else(|| CatalogError::NotAGroup(format!("{} has no inverse", self.labels[a])))?;
            self.pseudo_inverse[a] = inv;
        }
        Ok(self)
    }
}

fn basis_vector(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    (0..dim).map(|k| if k == i { field.one() } else { field.zero() }).collect()
}

/// PASS iff the table is associative and `a·S(a)·a = a` for every `a`.
pub fn check_vn_regular(t: &SemigroupTable) -> CheckResult {
    let m = t.size();
    let q = Field::Rational;
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let left = t.product(t.product(a, b), c);
                let right = t.product(a, t.product(b, c));
                if left != right {
                    return CheckResult::fail(Witness {
                        column: tuple_index(m, &[a, b, c]),
                        input: vec![a, b, c],
                        out_rank: 1,
                        lhs: basis_vector(q, m, left),
                        rhs: basis_vector(q, m, right),
                    });
                }
            }
        }
    }
    for a in 0..m {
        let v = t.product(t.product(a, t.pseudo_inverse[a]), a);
        if v != a {
            return CheckResult::fail(Witness {
                column: a,
                input: vec![a],
                out_rank: 1,
                lhs: basis_vector(q, m, v),
                rhs: basis_vector(q, m, a),
            });
        }
    }
    CheckResult::pass()
}

/// The free vector space on a regular semigroup: `δ(a) = a ⊗ a`, `ε ≡ 1`,
/// `S` from the pseudo-inverse map, and a unit exactly when the table has
/// an identity element.
pub fn semigroup_core(t: &SemigroupTable, name: &str) -> Result<Structure, CatalogError> {
    let verdict = check_vn_regular(t);
    if let Some(w) = verdict.witness {
        return Err(CatalogError::NotVNRegular(format!("fails at {:?}", w.input)));
    }
    Ok(linearize(t, name, Field::Rational)?)
}

fn linearize(t: &SemigroupTable, name: &str, field: Field) -> Result<Structure, StructureError> {
    let m = t.size();
    let indicator = |cond: bool| if cond { field.one() } else { field.zero() };
    let mu = LinMap::from_fn(field, m, 2, 1, |r, c| indicator(t.product(c / m, c % m) == r));
    let delta = LinMap::from_fn(field, m, 1, 2, |r, c| indicator(r == c * m + c));
    let counit = LinMap::functional(field, m, 1, vec![field.one(); m])?;
    let antipode = LinMap::from_fn(field, m, 1, 1, |r, c| indicator(t.pseudo_inverse[c] == r));
    let unit = t
        .identity_element()
        .map(|e| LinMap::element(field, m, 1, basis_vector(field, m, e)))
        .transpose()?;
    RawStructure {
        name: name.to_string(),
        field,
        dim: m,
        basis: Some(t.labels.clone()),
        mu,
        delta,
        unit,
        counit: Some(counit),
        antipode: Some(antipode),
        alpha: None,
        beta: None,
    }
    .build()
}

/// The group algebra `k[G]`: grouplike basis, `S` = inversion.
pub fn group_algebra(
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    name: &str,
) -> Result<Structure, CatalogError> {
    let m = table.len();
    let t = SemigroupTable::new(table, vec![0; m], labels)?.with_group_inverse()?;
    if let Some(w) = check_vn_regular(&t).witness {
        return Err(CatalogError::NotAGroup(format!("not associative at {:?}", w.input)));
    }
    Ok(linearize(&t, name, Field::Rational)?)
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn cyclic_table(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect()
}

fn cyclic_labels(m: usize) -> Vec<String> {
    (0..m)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect()
}

pub fn cyclic_group(m: usize, name: &str) -> Structure {
    group_algebra(cyclic_table(m), cyclic_labels(m), name).expect("cyclic groups are groups")
}

/// `S₃` with elements in the order e, (12), (13), (23), (123), (132).
pub fn s3() -> Structure {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    // (στ)(i) = σ(τ(i))
    let table = perms
        .iter()
        .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    group_algebra(table, labels(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"]), "s3").expect("S3 is a group")
}

pub fn klein4() -> Structure {
    let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    group_algebra(table, labels(&["e", "a", "b", "ab"]), "klein4").expect("Z/2 × Z/2 is a group")
}

pub fn leftzero2_table() -> SemigroupTable {
    SemigroupTable::new(vec![vec![0, 0], vec![1, 1]], vec![0, 1], labels(&["p", "q"])).unwrap()
}

/// The 2×2 rectangular band, `(a, b)(c, d) = (a, d)`, indexed `2a + b`.
pub fn rectband22_table() -> SemigroupTable {
    let table = (0..4)
        .map(|x| (0..4).map(|y| 2 * (x / 2) + y % 2).collect())
        .collect();
    SemigroupTable::new(table, vec![0, 1, 2, 3], labels(&["r00", "r01", "r10", "r11"])).unwrap()
}

/// Sweedler's algebra on basis 1, g, x, gx: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `δ(g) = g⊗g`, `δ(x) = x⊗1 + g⊗x`, `S(g) = g`, `S(x) = −gx`.
pub fn sweedler() -> Structure {
    let field = Field::Rational;
    let int = |v: i64| Scalar::from_i64(field, v);
    // basis index 2b + a encodes g^a x^b
    let decode = |i: usize| (i % 2, i / 2);
    let mu = LinMap::from_fn(field, 4, 2, 1, |r, c| {
        let ((a, b), (c2, d)) = (decode(c / 4), decode(c % 4));
        if b + d >= 2 {
            return field.zero();
        }
        let sign = if b * c2 == 1 { -1 } else { 1 };
        let target = 2 * (b + d) + (a + c2) % 2;
        if target == r {
            int(sign)
        } else {
            field.zero()
        }
    });
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut delta = LinMap::zero(field, 4, 1, 2);
    delta.set(tuple_index(4, &[one, one]), one, int(1));
    delta.set(tuple_index(4, &[g, g]), g, int(1));
    delta.set(tuple_index(4, &[x, one]), x, int(1));
    delta.set(tuple_index(4, &[g, x]), x, int(1));
    delta.set(tuple_index(4, &[gx, g]), gx, int(1));
    delta.set(tuple_index(4, &[one, gx]), gx, int(1));
    let mut antipode = LinMap::zero(field, 4, 1, 1);
    antipode.set(one, one, int(1));
    antipode.set(g, g, int(1));
    antipode.set(gx, x, int(-1));
    antipode.set(x, gx, int(1));
    RawStructure {
        name: "sweedler".into(),
        field,
        dim: 4,
        basis: Some(labels(&["1", "g", "x", "gx"])),
        mu,
        delta,
        unit: Some(LinMap::element(field, 4, 1, basis_vector(field, 4, one)).unwrap()),
        counit: Some(LinMap::functional(field, 4, 1, vec![int(1), int(1), int(0), int(0)]).unwrap()),
        antipode: Some(antipode),
        alpha: None,
        beta: None,
    }
    .build()
    .expect("sweedler data is well shaped")
}

/// The algebra of the discrete groupoid on `objects` objects: orthogonal
/// idempotents `eᵢ`, grouplike `δ`, `η = Σ eᵢ`, `ε ≡ 1`, `S = id`.
pub fn groupoid_algebra(objects: usize) -> Structure {
    assert!(objects >= 1, "a groupoid needs at least one object");
    let field = Field::Rational;
    let n = objects;
    let indicator = |cond: bool| if cond { field.one() } else { field.zero() };
    RawStructure {
        name: format!("groupoid{n}"),
        field,
        dim: n,
        basis: Some((0..n).map(|i| format!("e{i}")).collect()),
        mu: LinMap::from_fn(field, n, 2, 1, |r, c| indicator(c / n == c % n && c / n == r)),
        delta: LinMap::from_fn(field, n, 1, 2, |r, c| indicator(r == c * n + c)),
        unit: Some(LinMap::element(field, n, 1, vec![field.one(); n]).unwrap()),
        counit: Some(LinMap::functional(field, n, 1, vec![field.one(); n]).unwrap()),
        antipode: Some(tensor::identity(field, n, 1)),
        alpha: None,
        beta: None,
    }
    .build()
    .expect("groupoid data is well shaped")
}

/// Looks up a catalog entry by its normative name.
pub fn by_name(name: &str) -> Result<Structure, CatalogError> {
    Ok(match name {
        "trivial" => cyclic_group(1, "trivial"),
        "z2" => cyclic_group(2, "z2"),
        "z3" => cyclic_group(3, "z3"),
        "s3" => s3(),
        "klein4" => klein4(),
        "sweedler" => sweedler(),
        "leftzero2" => semigroup_core(&leftzero2_table(), "leftzero2")?,
        "rectband22" => semigroup_core(&rectband22_table(), "rectband22")?,
        "groupoid2" => groupoid_algebra(2),
        "z3_bad_s" => {
            let z3 = cyclic_group(3, "z3_bad_s");
            let mut raw = z3.to_raw();
            raw.antipode = Some(z3.id(1));
            raw.build()?
        }
        other => return Err(CatalogError::Unknown(other.to_string())),
    })
}

/// Adjoins a fresh two-sided unit `u` (last basis vector), grouplike for the
/// extended comultiplication, fixed by `S`, and with `ε(u) = 1` when a
/// counit exists. `α` and `β` are dropped.
pub fn unitalize(s: &Structure) -> Result<Structure, CatalogError> {
    let old_s = s.require_antipode()?;
    let field = s.field();
    let n = s.dim();
    let m = n + 1;
    let u = n;
    let zero = field.zero();
    let indicator = |cond: bool| if cond { field.one() } else { field.zero() };

    let mu = LinMap::from_fn(field, m, 2, 1, |r, c| {
        let (i, j) = (c / m, c % m);
        match (i == u, j == u) {
            (true, true) => indicator(r == u),
            (true, false) => indicator(r == j),
            (false, true) => indicator(r == i),
            (false, false) if r == u => zero.clone(),
            (false, false) => s.mu().entry(r, i * n + j).clone(),
        }
    });
    let delta = LinMap::from_fn(field, m, 1, 2, |r, c| {
        let (i, j) = (r / m, r % m);
        if c == u {
            indicator(i == u && j == u)
        } else if i == u || j == u {
            zero.clone()
        } else {
            s.delta().entry(i * n + j, c).clone()
        }
    });
    let antipode = LinMap::from_fn(field, m, 1, 1, |r, c| {
        if r == u || c == u {
            indicator(r == c)
        } else {
            old_s.entry(r, c).clone()
        }
    });
    let counit = s
        .counit()
        .map(|e| {
            let mut coords = e.entries().to_vec();
            coords.push(field.one());
            LinMap::functional(field, m, 1, coords)
        })
        .transpose()
        .map_err(StructureError::from)?;
    let basis = s.basis().map(|b| {
        let mut b = b.to_vec();
        b.push("u".into());
        b
    });
    Ok(RawStructure {
        name: format!("{}+u", s.name()),
        field,
        dim: m,
        basis,
        mu,
        delta,
        unit: Some(LinMap::element(field, m, 1, basis_vector(field, m, u)).unwrap()),
        counit,
        antipode: Some(antipode),
        alpha: None,
        beta: None,
    }
    .build()?)
}

/// An invertible, normalized `F ∈ A ⊗ A` together with its verified inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistData {
    f: Vec<Scalar>,
    f_inv: Vec<Scalar>,
}

impl TwistData {
    /// Validates normalization `(ε⊗1)F = (1⊗ε)F = η` and solves for `F⁻¹` in
    /// the algebra `A ⊗ A`.
    pub fn new(s: &Structure, f: Vec<Scalar>) -> Result<TwistData, CatalogError> {
        let n = s.dim();
        if f.len() != n * n {
            return Err(CatalogError::BadTwist(format!("F needs {} coordinates, got {}", n * n, f.len())));
        }
        if f.iter().any(|c| c.field() != s.field()) {
            return Err(CatalogError::BadTwist("F is over a different field".into()));
        }
        let unit = s.require_unit()?;
        let counit = s.require_counit()?;
        let fm = LinMap::element(s.field(), n, 2, f.clone()).map_err(StructureError::from)?;
        let left = counit.tensor(&s.id(1)).unwrap().compose(&fm).unwrap();
        let right = s.id(1).tensor(counit).unwrap().compose(&fm).unwrap();
        if &left != unit || &right != unit {
            return Err(CatalogError::BadTwist("F is not normalized".into()));
        }
        let unit2 = unit.tensor(unit).unwrap();
        let id2 = s.id(2);
        let mul = s.mu_pair();
        let l = mul.compose(&fm.tensor(&id2).unwrap()).unwrap();
        let r = mul.compose(&id2.tensor(&fm).unwrap()).unwrap();
        let mut a = l.entries().to_vec();
        a.extend_from_slice(r.entries());
        let mut b = unit2.entries().to_vec();
        b.extend_from_slice(unit2.entries());
        let f_inv = tensor::solve(s.field(), &a, n * n, &b)
            .ok_or_else(|| CatalogError::BadTwist("F is not invertible in A ⊗ A".into()))?;
        Ok(TwistData { f, f_inv })
    }

    /// `F = η ⊗ η`.
    pub fn trivial(s: &Structure) -> Result<TwistData, CatalogError> {
        let unit = s.require_unit()?;
        TwistData::new(s, unit.tensor(unit).unwrap().entries().to_vec())
    }

    pub fn f(&self) -> &[Scalar] {
        &self.f
    }

    pub fn f_inv(&self) -> &[Scalar] {
        &self.f_inv
    }
}

/// `δ_F(x) = F·δ(x)·F⁻¹` with `α = Σ S(F̄₁)F̄₂`, `β = Σ F₁S(F₂)`.
pub fn twist(s: &Structure, data: &TwistData) -> Result<Structure, CatalogError> {
    if !classify(s).has(Label::Hopf) {
        return Err(CatalogError::NotHopf(s.name().to_string()));
    }
    apply_twist(s, data)
}

fn apply_twist(s: &Structure, data: &TwistData) -> Result<Structure, CatalogError> {
    let (field, n) = (s.field(), s.dim());
    let sm = s.require_antipode()?;
    let id1 = s.id(1);
    let id2 = s.id(2);
    let fm = LinMap::element(field, n, 2, data.f.clone()).map_err(StructureError::from)?;
    let fi = LinMap::element(field, n, 2, data.f_inv.clone()).map_err(StructureError::from)?;
    let mul = s.mu_pair();
    let left = mul.compose(&fm.tensor(&id2).unwrap()).unwrap();
    let right = mul.compose(&id2.tensor(&fi).unwrap()).unwrap();
    let delta = LinMap::chain(&[&left, &right, s.delta()]).unwrap();
    let alpha = LinMap::chain(&[s.mu(), &sm.tensor(&id1).unwrap(), &fi]).unwrap();
    let beta = LinMap::chain(&[s.mu(), &id1.tensor(sm).unwrap(), &fm]).unwrap();
    let mut raw = s.to_raw();
    raw.name = format!("{}_twisted", s.name());
    raw.delta = delta;
    raw.alpha = Some(alpha);
    raw.beta = Some(beta);
    Ok(raw.build()?)
}

/// Outcome of [`search_twist`].
#[derive(Debug, Clone)]
pub struct TwistSearch {
    pub data: TwistData,
    pub attempt: usize,
    /// Whether the twisted comultiplication is still coassociative.
    pub coassociative: bool,
}

/// Draws normalized `F = η⊗η + G` with `G` sampled from entries in −2..=2
/// and projected onto `ker(ε⊗1) ∩ ker(1⊗ε)`. Returns the first invertible
/// `F` whose twist breaks coassociativity, or else the first invertible
/// nontrivial `F` seen within [`TWIST_ATTEMPTS`] draws.
pub fn search_twist(s: &Structure, seed: u64) -> Result<Option<TwistSearch>, CatalogError> {
    if !classify(s).has(Label::Hopf) {
        return Err(CatalogError::NotHopf(s.name().to_string()));
    }
    let (field, n) = (s.field(), s.dim());
    let unit = s.require_unit()?.clone();
    let counit = s.require_counit()?.clone();
    let id1 = s.id(1);
    let eps_left = counit.tensor(&id1).unwrap();
    let eps_right = id1.tensor(&counit).unwrap();
    let unit2 = unit.tensor(&unit).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fallback = None;
    for attempt in 0..TWIST_ATTEMPTS {
        let raw: Vec<Scalar> = (0..n * n)
            .map(|_| Scalar::from_i64(field, rng.random_range(-2..=2)))
            .collect();
        let g = LinMap::element(field, n, 2, raw).unwrap();
        let a = eps_left.compose(&g).unwrap();
        let b = eps_right.compose(&g).unwrap();
        let c = counit.compose(&b).unwrap().entry(0, 0).clone();
        let projected = g
            .sub(&unit.tensor(&a).unwrap())
            .unwrap()
            .sub(&b.tensor(&unit).unwrap())
            .unwrap()
            .add(&unit2.scale(&c))
            .unwrap();
        if projected.is_zero() {
            continue;
        }
        let f = unit2.add(&projected).unwrap();
        let Ok(data) = TwistData::new(s, f.entries().to_vec()) else {
            continue;
        };
        let twisted = apply_twist(s, &data)?;
        let coassociative = check_axiom(&twisted, AxiomId::Coassoc).passed();
        if !coassociative {
            return Ok(Some(TwistSearch { data, attempt, coassociative }));
        }
        if fallback.is_none() {
            fallback = Some(TwistSearch { data, attempt, coassociative });
        }
    }
    Ok(fallback)
}
