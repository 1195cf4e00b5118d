//! Dense matrices of neutrosophic numbers.

use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, AlgebraMode};
use crate::error::{Error, Result};
use crate::number::NeutroNumber;
use crate::scalar::ExtReal;

/// How the k-terms `a_ik ⊗ b_kj` of a matrix product are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionOp {
    /// Fold with componentwise `min`.
    TropicalMin,
    /// Fold with componentwise `max`.
    TropicalMax,
    /// Fold with `⊗`, i.e. classical componentwise summation of the terms.
    /// Not a semiring product; kept because it reproduces the published
    /// worked product with the `2×3` and `3×4` matrices.
    PlusFold,
}

impl ReductionOp {
    /// The lawful reduction for `mode`.
    pub fn tropical(mode: AlgebraMode) -> Self {
        match mode {
            AlgebraMode::Min => ReductionOp::TropicalMin,
            AlgebraMode::Max => ReductionOp::TropicalMax,
        }
    }

    pub fn is_tropical(self) -> bool {
        !matches!(self, ReductionOp::PlusFold)
    }

    fn combine(self, acc: NeutroNumber, term: NeutroNumber, mode: AlgebraMode) -> NeutroNumber {
        match self {
            ReductionOp::TropicalMin => algebra::add_min(acc, term),
            ReductionOp::TropicalMax => algebra::add_max(acc, term),
            ReductionOp::PlusFold => algebra::mul(acc, term, mode),
        }
    }
}

/// A `rows × cols` matrix stored row-major. Both dimensions are at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NeutroNumber>,
}

/// Kleene closure together with its cycle diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub matrix: NeutroMatrix,
    /// Set when some closed walk has a negative determinate part in `Min`
    /// mode (positive in `Max` mode); the closure is then not a fixpoint.
    pub cycle_warning: bool,
}

impl NeutroMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<NeutroNumber>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "a {rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(NeutroMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<NeutroNumber>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {n_cols}",
                rows[bad].len()
            )));
        }
        NeutroMatrix::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn filled(rows: usize, cols: usize, value: NeutroNumber) -> Result<Self> {
        NeutroMatrix::new(rows, cols, vec![value; rows * cols])
    }

    /// `0 + 0I` on the diagonal, the additive identity of `mode` elsewhere.
    pub fn identity(n: usize, mode: AlgebraMode) -> Result<Self> {
        let zero = mode.additive_identity();
        let entries = (0..n * n)
            .map(|idx| {
                if idx / n == idx % n {
                    algebra::multiplicative_identity()
                } else {
                    zero
                }
            })
            .collect();
        NeutroMatrix::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[NeutroNumber] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Option<NeutroNumber> {
        (row < self.rows && col < self.cols).then(|| self.entries[row * self.cols + col])
    }

    pub fn row(&self, row: usize) -> &[NeutroNumber] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn map(&self, f: impl FnMut(&NeutroNumber) -> NeutroNumber) -> NeutroMatrix {
        NeutroMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Elementwise `⊕` (Min) or `⊕′` (Max).
    pub fn tropical_add(&self, other: &NeutroMatrix, mode: AlgebraMode) -> Result<NeutroMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(NeutroMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&x, &z)| mode.add(x, z))
                .collect(),
        })
    }

    /// `c_ij = fold_k (a_ik ⊗ b_kj)` with the fold given by `reduce`, taken in
    /// ascending `k`.
    pub fn product(
        &self,
        other: &NeutroMatrix,
        mode: AlgebraMode,
        reduce: ReductionOp,
    ) -> Result<NeutroMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let lhs = self.row(i);
            for j in 0..other.cols {
                let term = |k: usize| algebra::mul(lhs[k], other.entries[k * other.cols + j], mode);
                let cell =
                    (1..self.cols).fold(term(0), |acc, k| reduce.combine(acc, term(k), mode));
                entries.push(cell);
            }
        }
        Ok(NeutroMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `α ⊗ a_ij` for every entry.
    pub fn scale(&self, alpha: NeutroNumber, mode: AlgebraMode) -> NeutroMatrix {
        self.map(|&x| algebra::mul(alpha, x, mode))
    }

    /// `k`-fold product `A ⊗ A ⊗ … ⊗ A`, evaluated left to right. `A⁰` is the
    /// identity of `mode` and only exists for tropical reductions.
    pub fn power(&self, k: u32, mode: AlgebraMode, reduce: ReductionOp) -> Result<NeutroMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if k == 0 {
            if !reduce.is_tropical() {
                return Err(Error::Domain(
                    "zeroth power needs a tropical reduction; PlusFold has no identity".into(),
                ));
            }
            return NeutroMatrix::identity(self.rows, mode);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self, mode, reduce)?;
        }
        Ok(acc)
    }

    /// Kleene star `I ⊕ A ⊕ A² ⊕ … ⊕ Aⁿ⁻¹` under the tropical reduction of
    /// `mode`.
    ///
    /// The cycle warning looks at the diagonal of `A ⊕ … ⊕ Aⁿ`, so simple
    /// cycles through all `n` nodes are detected too.
    pub fn closure(&self, mode: AlgebraMode) -> Result<Closure> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "closure of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let reduce = ReductionOp::tropical(mode);
        let mut star = NeutroMatrix::identity(n, mode)?;
        let mut walk = star.clone();
        let mut cyclic = false;
        for step in 1..=n {
            walk = walk.product(self, mode, reduce)?;
            cyclic |= (0..n).any(|i| improves_on_empty_walk(walk.entries[i * n + i], mode));
            if step < n {
                star = star.tropical_add(&walk, mode)?;
            }
        }
        Ok(Closure {
            matrix: star,
            cycle_warning: cyclic,
        })
    }
}

fn improves_on_empty_walk(diag: NeutroNumber, mode: AlgebraMode) -> bool {
    match mode {
        AlgebraMode::Min => diag.a < ExtReal::ZERO,
        AlgebraMode::Max => diag.a > ExtReal::ZERO,
    }
}

impl Index<(usize, usize)> for NeutroMatrix {
    type Output = NeutroNumber;

    fn index(&self, (row, col): (usize, usize)) -> &NeutroNumber {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[row * self.cols + col]
    }
}
