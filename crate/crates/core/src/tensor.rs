//! Linear maps `A^{⊗p} → A^{⊗q}` between tensor powers of one base space.
//!
//! A [`LinMap`] is a dense row-major matrix with `n^q` rows and `n^p`
//! columns. Basis tuples `(i₁, …, i_p)` are ordered lexicographically with the
//! leftmost factor most significant, and every module relies on that ordering.
//! Rank 0 is the ground field, a space of dimension one.

use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("rank mismatch: cannot compose a map of source rank {expected} after one of target rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("base dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("bad legs ({i}, {j}) for total rank {rank}")]
    BadLegs { i: usize, j: usize, rank: usize },
    #[error("shape error: {0}")]
    Shape(String),
}

/// `n^rank`, the dimension of `A^{⊗rank}`.
pub fn power(n: usize, rank: usize) -> usize {
    n.pow(rank as u32)
}

/// Position of a basis tuple in the lexicographic ordering.
pub fn tuple_index(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + i)
}

/// Inverse of [`tuple_index`].
pub fn index_tuple(n: usize, rank: usize, mut index: usize) -> Vec<usize> {
    let mut tuple = vec![0; rank];
    for slot in tuple.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    tuple
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    dim: usize,
    src: usize,
    tgt: usize,
    data: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(field: Field, dim: usize, src: usize, tgt: usize) -> LinMap {
        assert!(dim >= 1, "base dimension must be positive");
        let len = power(dim, src) * power(dim, tgt);
        LinMap { field, dim, src, tgt, data: vec![field.zero(); len] }
    }

    /// Builds a map entry by entry; `entry(row, col)` must return scalars of `field`.
    pub fn from_fn(
        field: Field,
        dim: usize,
        src: usize,
        tgt: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> LinMap {
        assert!(dim >= 1, "base dimension must be positive");
        let (rows, cols) = (power(dim, tgt), power(dim, src));
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let value = entry(r, c);
                assert_eq!(value.field(), field, "entry outside the map's field");
                data.push(value);
            }
        }
        LinMap { field, dim, src, tgt, data }
    }

    /// Wraps a row-major entry vector, checking its length and field.
    pub fn from_entries(
        field: Field,
        dim: usize,
        src: usize,
        tgt: usize,
        data: Vec<Scalar>,
    ) -> Result<LinMap, TensorError> {
        if dim == 0 {
            return Err(TensorError::Shape("base dimension must be positive".into()));
        }
        let expected = power(dim, src) * power(dim, tgt);
        if data.len() != expected {
            return Err(TensorError::Shape(format!(
                "expected {expected} entries for rank {src}→{tgt} over dimension {dim}, got {}",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(TensorError::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(LinMap { field, dim, src, tgt, data })
    }

    /// A vector of `A^{⊗rank}` viewed as a map out of the ground field.
    pub fn element(field: Field, dim: usize, rank: usize, coords: Vec<Scalar>) -> Result<LinMap, TensorError> {
        LinMap::from_entries(field, dim, 0, rank, coords)
    }

    /// A functional on `A^{⊗rank}`, viewed as a map into the ground field.
    pub fn functional(field: Field, dim: usize, rank: usize, coords: Vec<Scalar>) -> Result<LinMap, TensorError> {
        LinMap::from_entries(field, dim, rank, 0, coords)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn src_rank(&self) -> usize {
        self.src
    }

    pub fn tgt_rank(&self) -> usize {
        self.tgt
    }

    pub fn rows(&self) -> usize {
        power(self.dim, self.tgt)
    }

    pub fn cols(&self) -> usize {
        power(self.dim, self.src)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        let cols = self.cols();
        self.data[row * cols + col] = value;
    }

    /// The image of the basis vector `col`.
    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.entry(r, col).clone()).collect()
    }

    /// Applies the map to a coordinate vector of the source.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols());
        let cols = self.cols();
        (0..self.rows())
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.data[r * cols..(r + 1) * cols].iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &LinMap) -> Result<(), TensorError> {
        if self.dim != other.dim {
            return Err(TensorError::DimMismatch { left: self.dim, right: other.dim });
        }
        if self.field != other.field {
            return Err(TensorError::FieldMismatch { left: self.field, right: other.field });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &LinMap) -> Result<(), TensorError> {
        self.check_compatible(other)?;
        if (self.src, self.tgt) != (other.src, other.tgt) {
            return Err(TensorError::Shape(format!(
                "rank {}→{} vs rank {}→{}",
                self.src, self.tgt, other.src, other.tgt
            )));
        }
        Ok(())
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &LinMap) -> Result<LinMap, TensorError> {
        self.check_compatible(first)?;
        if self.src != first.tgt {
            return Err(TensorError::RankMismatch { expected: self.src, found: first.tgt });
        }
        let (rows, inner, cols) = (self.rows(), self.cols(), first.cols());
        let mut out = vec![self.field.zero(); rows * cols];
        for i in 0..rows {
            let out_row = &mut out[i * cols..(i + 1) * cols];
            for k in 0..inner {
                let a = &self.data[i * inner + k];
                if a.is_zero() {
                    continue;
                }
                let first_row = &first.data[k * cols..(k + 1) * cols];
                for (slot, b) in out_row.iter_mut().zip(first_row) {
                    if !b.is_zero() {
                        *slot += &(a * b);
                    }
                }
            }
        }
        Ok(LinMap { field: self.field, dim: self.dim, src: first.src, tgt: self.tgt, data: out })
    }

    /// Composes right to left: `chain(&[h, g, f])` is `h ∘ g ∘ f`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap, TensorError> {
        let (last, rest) = maps.split_last().expect("chain of at least one map");
        rest.iter().rev().try_fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    /// Kronecker product; ranks add on both sides.
    pub fn tensor(&self, other: &LinMap) -> Result<LinMap, TensorError> {
        self.check_compatible(other)?;
        let (r1, c1, r2, c2) = (self.rows(), self.cols(), other.rows(), other.cols());
        let cols = c1 * c2;
        let mut out = vec![self.field.zero(); r1 * r2 * cols];
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = &self.data[i1 * c1 + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = &other.data[i2 * c2 + j2];
                        if !b.is_zero() {
                            out[(i1 * r2 + i2) * cols + j1 * c2 + j2] = a * b;
                        }
                    }
                }
            }
        }
        Ok(LinMap {
            field: self.field,
            dim: self.dim,
            src: self.src + other.src,
            tgt: self.tgt + other.tgt,
            data: out,
        })
    }

    /// Tensor product of several maps, left to right.
    pub fn tensor_all(maps: &[&LinMap]) -> Result<LinMap, TensorError> {
        let (first, rest) = maps.split_first().expect("at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.tensor(m))
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, TensorError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(LinMap { data, ..self.clone() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, TensorError> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(LinMap { data, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let data = self.data.iter().map(|a| a * c).collect();
        LinMap { data, ..self.clone() }
    }

    /// `self ∘ P` where `P` is the leg permutation sending input leg
    /// `perm[k]` to output leg `k`; equivalent to composing with
    /// [`permutation`] but done by reindexing columns.
    pub fn permute_source(&self, perm: &[usize]) -> Result<LinMap, TensorError> {
        check_permutation(perm, self.src)?;
        let n = self.dim;
        let cols = self.cols();
        // column x of the result is column P(x) of self
        let targets: Vec<usize> = (0..cols)
            .map(|x| {
                let legs = index_tuple(n, self.src, x);
                let moved: Vec<usize> = perm.iter().map(|&k| legs[k]).collect();
                tuple_index(n, &moved)
            })
            .collect();
        Ok(LinMap::from_fn(self.field, n, self.src, self.tgt, |r, c| {
            self.entry(r, targets[c]).clone()
        }))
    }
}

fn check_permutation(perm: &[usize], rank: usize) -> Result<(), TensorError> {
    let mut seen = vec![false; rank];
    if perm.len() != rank {
        return Err(TensorError::Shape(format!("permutation of length {} on rank {rank}", perm.len())));
    }
    for &k in perm {
        if k >= rank || std::mem::replace(&mut seen[k], true) {
            return Err(TensorError::Shape(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

/// The identity on `A^{⊗rank}`.
pub fn identity(field: Field, dim: usize, rank: usize) -> LinMap {
    LinMap::from_fn(field, dim, rank, rank, |r, c| {
        if r == c {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The symmetry `c : A⊗A → A⊗A`, `(i, j) ↦ (j, i)`. It is its own inverse.
pub fn swap(field: Field, dim: usize) -> LinMap {
    LinMap::from_fn(field, dim, 2, 2, |r, c| {
        let (i, j) = (c / dim, c % dim);
        if r == j * dim + i {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The leg permutation map: output leg `k` carries input leg `perm[k]`.
pub fn permutation(field: Field, dim: usize, perm: &[usize]) -> Result<LinMap, TensorError> {
    identity(field, dim, perm.len()).permute_source(perm)
}

/// The adjacent transposition of legs `k` and `k + 1` (0-based) on rank `rank`.
fn adjacent_swap(field: Field, dim: usize, k: usize, rank: usize) -> Result<LinMap, TensorError> {
    LinMap::tensor_all(&[
        &identity(field, dim, k),
        &swap(field, dim),
        &identity(field, dim, rank - k - 2),
    ])
}

/// `f` acting on legs `i` and `j` (1-based, `i < j ≤ rank`) of `A^{⊗rank}`
/// and as the identity on the others.
///
/// Conjugates `f ⊗ 1` by the permutation moving legs `i`, `j` to the front,
/// built from adjacent swaps.
pub fn place_on_legs(f: &LinMap, legs: (usize, usize), rank: usize) -> Result<LinMap, TensorError> {
    let (i, j) = legs;
    if i == 0 || i >= j || j > rank {
        return Err(TensorError::BadLegs { i, j, rank });
    }
    if f.src_rank() != 2 || f.tgt_rank() != 2 {
        return Err(TensorError::Shape(format!(
            "place_on_legs needs a rank 2→2 map, got {}→{}",
            f.src_rank(),
            f.tgt_rank()
        )));
    }
    let (field, n) = (f.field(), f.dim());
    // Transpositions applied in order: bubble leg i to the front, then leg j to slot 2.
    let mut steps = Vec::new();
    for k in (0..i - 1).rev() {
        steps.push(adjacent_swap(field, n, k, rank)?);
    }
    for k in (1..j - 1).rev() {
        steps.push(adjacent_swap(field, n, k, rank)?);
    }
    let lifted = f.tensor(&identity(field, n, rank - 2))?;
    let mut out = lifted;
    for s in steps.iter().rev() {
        out = out.compose(s)?;
    }
    for s in steps.iter().rev() {
        out = s.compose(&out)?;
    }
    Ok(out)
}

/// Exact Gaussian elimination: some `x` with `a·x = b`, or `None` when the
/// system is inconsistent. `a` is row-major with `cols` columns.
pub fn solve(field: Field, a: &[Scalar], cols: usize, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = b.len();
    assert_eq!(a.len(), rows * cols);
    let width = cols + 1;
    let mut m: Vec<Scalar> = Vec::with_capacity(rows * width);
    for r in 0..rows {
        m.extend_from_slice(&a[r * cols..(r + 1) * cols]);
        m.push(b[r].clone());
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r * width + col].is_zero()) else {
            continue;
        };
        for c in 0..width {
            m.swap(row * width + c, p * width + c);
        }
        let inv = m[row * width + col].inv().expect("nonzero pivot");
        for c in 0..width {
            m[row * width + c] = &m[row * width + c] * &inv;
        }
        for r in 0..rows {
            if r == row || m[r * width + col].is_zero() {
                continue;
            }
            let factor = m[r * width + col].clone();
            for c in 0..width {
                let delta = &factor * &m[row * width + c];
                m[r * width + c] = &m[r * width + c] - &delta;
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if (row..rows).any(|r| !m[r * width + cols].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r * width + cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn int_map(dim: usize, src: usize, tgt: usize, values: &[i64]) -> LinMap {
        let data = values.iter().map(|&v| Scalar::from_i64(Q, v)).collect();
        LinMap::from_entries(Q, dim, src, tgt, data).unwrap()
    }

    // k[Z/2] with basis (e, g): mu and the grouplike delta, written out by hand.
    fn z2_mu() -> LinMap {
        // columns ee, eg, ge, gg
        int_map(2, 2, 1, &[1, 0, 0, 1, 0, 1, 1, 0])
    }

    fn z2_delta() -> LinMap {
        // rows ee, eg, ge, gg; columns e, g
        int_map(2, 1, 2, &[1, 0, 0, 0, 0, 0, 0, 1])
    }

    #[test]
    fn identity_laws() {
        let f = int_map(2, 2, 2, &(0..16).map(|v| v - 5).collect::<Vec<_>>());
        let id = identity(Q, 2, 2);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        assert_eq!(id, int_map(2, 2, 2, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]));
        let unit_map = identity(Q, 5, 0);
        assert_eq!((unit_map.rows(), unit_map.cols()), (1, 1));
        assert!(unit_map.entry(0, 0).is_one());
    }

    #[test]
    fn squaring_map_of_z2() {
        // x ↦ x·x sends e ↦ e and g ↦ e
        let sq = z2_mu().compose(&z2_delta()).unwrap();
        assert_eq!(sq, int_map(2, 1, 1, &[1, 1, 0, 0]));
    }

    #[test]
    fn delta_tensor_one_on_z2() {
        let d1 = z2_delta().tensor(&identity(Q, 2, 1)).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (8, 4));
        let expected = LinMap::from_fn(Q, 2, 2, 3, |r, c| {
            let (x, y) = (c / 2, c % 2);
            Scalar::from_i64(Q, (r == tuple_index(2, &[x, x, y])) as i64)
        });
        assert_eq!(d1, expected);
        assert_eq!(identity(Q, 2, 1).tensor(&identity(Q, 2, 1)).unwrap(), identity(Q, 2, 2));
    }

    #[test]
    fn swap_basics() {
        let c = swap(Q, 2);
        assert_eq!(c.compose(&c).unwrap(), identity(Q, 2, 2));
        // basis (0,1) is column 1, lands on (1,0) = row 2
        assert!(c.entry(2, 1).is_one());
        assert!(c.entry(1, 1).is_zero());
        assert_eq!(z2_mu().compose(&c).unwrap(), z2_mu());
    }

    #[test]
    fn compose_errors() {
        let mu = z2_mu();
        assert!(matches!(mu.compose(&mu), Err(TensorError::RankMismatch { .. })));
        let other = identity(Q, 3, 1);
        assert!(matches!(identity(Q, 2, 1).compose(&other), Err(TensorError::DimMismatch { .. })));
        let f5 = identity(Field::Prime(5), 2, 1);
        assert!(matches!(identity(Q, 2, 1).compose(&f5), Err(TensorError::FieldMismatch { .. })));
        assert!(LinMap::from_entries(Q, 2, 1, 1, vec![Q.one(); 3]).is_err());
    }

    #[test]
    fn legs_simple_cases() {
        let f = int_map(2, 2, 2, &(0..16).collect::<Vec<_>>());
        let id1 = identity(Q, 2, 1);
        assert_eq!(place_on_legs(&f, (1, 2), 3).unwrap(), f.tensor(&id1).unwrap());
        let one_c = id1.tensor(&swap(Q, 2)).unwrap();
        let conj = LinMap::chain(&[&one_c, &f.tensor(&id1).unwrap(), &one_c]).unwrap();
        assert_eq!(place_on_legs(&f, (1, 3), 3).unwrap(), conj);
        assert!(matches!(place_on_legs(&f, (2, 2), 3), Err(TensorError::BadLegs { .. })));
        assert!(matches!(place_on_legs(&f, (1, 4), 3), Err(TensorError::BadLegs { .. })));
        assert!(matches!(place_on_legs(&f, (0, 1), 3), Err(TensorError::BadLegs { .. })));
    }

    /// Applies `f` to coordinates `i`, `j` of every basis tuple directly.
    fn legs_oracle(f: &LinMap, legs: (usize, usize), rank: usize) -> LinMap {
        let n = f.dim();
        let (i, j) = (legs.0 - 1, legs.1 - 1);
        let size = power(n, rank);
        let mut out = LinMap::zero(Q, n, rank, rank);
        for col in 0..size {
            let tuple = index_tuple(n, rank, col);
            let pair = tuple[i] * n + tuple[j];
            for image in 0..n * n {
                let coeff = f.entry(image, pair);
                if coeff.is_zero() {
                    continue;
                }
                let mut target = tuple.clone();
                target[i] = image / n;
                target[j] = image % n;
                out.set(tuple_index(n, &target), col, coeff.clone());
            }
        }
        out
    }

    #[test]
    fn legs_match_oracle_on_all_placements() {
        let f = int_map(2, 2, 2, &[3, -1, 0, 2, 1, 1, -2, 0, 0, 4, 1, -1, 2, 0, 0, 5]);
        for rank in 2..=4 {
            for i in 1..=rank {
                for j in i + 1..=rank {
                    assert_eq!(
                        place_on_legs(&f, (i, j), rank).unwrap(),
                        legs_oracle(&f, (i, j), rank),
                        "legs ({i},{j}) rank {rank}"
                    );
                }
            }
        }
    }

    #[test]
    fn permute_source_matches_dense_permutation() {
        let m = LinMap::from_fn(Q, 2, 4, 1, |r, c| Scalar::from_i64(Q, (r * 16 + c) as i64));
        let perm = [0, 2, 1, 3];
        let middle_swap = LinMap::tensor_all(&[&identity(Q, 2, 1), &swap(Q, 2), &identity(Q, 2, 1)]).unwrap();
        assert_eq!(m.permute_source(&perm).unwrap(), m.compose(&middle_swap).unwrap());
        assert_eq!(permutation(Q, 2, &perm).unwrap(), middle_swap);
        let cyc = [1, 2, 0];
        let p = permutation(Q, 3, &cyc).unwrap();
        // output leg k carries input leg cyc[k]: (a,b,c) ↦ (b,c,a)
        let col = tuple_index(3, &[0, 1, 2]);
        assert!(p.entry(tuple_index(3, &[1, 2, 0]), col).is_one());
        assert!(m.permute_source(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn solver_finds_solutions_and_detects_inconsistency() {
        let a: Vec<Scalar> = [2, 1, 1, 3].iter().map(|&v| Scalar::from_i64(Q, v)).collect();
        let b: Vec<Scalar> = [3, 4].iter().map(|&v| Scalar::from_i64(Q, v)).collect();
        let x = solve(Q, &a, 2, &b).unwrap();
        assert_eq!(x, vec![Q.one(), Q.one()]);
        let singular: Vec<Scalar> = [1, 1, 1, 1].iter().map(|&v| Scalar::from_i64(Q, v)).collect();
        assert!(solve(Q, &singular, 2, &b).is_none());
        let x = solve(Q, &singular, 2, &[Q.one(), Q.one()]).unwrap();
        assert!((&x[0] + &x[1]).is_one());
    }

    fn arb_map(src: usize, tgt: usize) -> impl Strategy<Value = LinMap> {
        let len = power(2, src) * power(2, tgt);
        proptest::collection::vec(-3i64..=3, len).prop_map(move |v| int_map(2, src, tgt, &v))
    }

    proptest! {
        #[test]
        fn interchange_law(f in arb_map(1, 1), g in arb_map(1, 1), h in arb_map(1, 1), k in arb_map(1, 1)) {
            let lhs = g.compose(&f).unwrap().tensor(&k.compose(&h).unwrap()).unwrap();
            let rhs = g.tensor(&k).unwrap().compose(&f.tensor(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn identity_is_neutral(f in arb_map(2, 1)) {
            prop_assert_eq!(identity(Q, 2, 1).compose(&f).unwrap(), f.clone());
            prop_assert_eq!(f.compose(&identity(Q, 2, 2)).unwrap(), f);
        }

        #[test]
        fn swap_is_natural(f in arb_map(1, 1), g in arb_map(1, 1)) {
            let c = swap(Q, 2);
            prop_assert_eq!(
                c.compose(&f.tensor(&g).unwrap()).unwrap(),
                g.tensor(&f).unwrap().compose(&c).unwrap()
            );
        }

        #[test]
        fn disjoint_placements_commute(f in arb_map(2, 2), g in arb_map(2, 2)) {
            let a = place_on_legs(&f, (1, 3), 4).unwrap();
            let b = place_on_legs(&g, (2, 4), 4).unwrap();
            prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
        }
    }
}
