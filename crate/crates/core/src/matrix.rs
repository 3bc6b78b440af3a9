//! Dense `2^n x 2^n` complex matrices.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the qubit count of a dense realization.
pub const DEFAULT_QUBIT_CAP: usize = 10;

/// Square complex matrix whose dimension is a power of two.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn from_dmatrix(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
        }
        if !m.nrows().is_power_of_two() {
            return Err(Error::Parse(format!("matrix dimension {} is not a power of two", m.nrows())));
        }
        Ok(Self(m))
    }

    pub(crate) fn from_dmatrix_unchecked(m: DMatrix<Complex64>) -> Self {
        debug_assert!(m.is_square() && m.nrows().is_power_of_two());
        Self(m)
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_dmatrix_unchecked(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_dmatrix_unchecked(DMatrix::zeros(dim, dim))
    }

    /// Builds a matrix from row-major rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
        }
        Self::from_dmatrix(DMatrix::from_fn(dim, dim, |r, c| rows[r][c]))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Number of qubits, `log2(dim)`.
    pub fn num_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        crate::error::check_dim(self.dim(), rhs.dim())?;
        Ok(Self(&self.0 * &rhs.0))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        crate::error::check_dim(self.dim(), rhs.dim())?;
        Ok(Self(&self.0 - &rhs.0))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self(&self.0 * factor)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖A − B‖_F`.
    pub fn distance(&self, rhs: &Self) -> Result<f64> {
        crate::error::check_dim(self.dim(), rhs.dim())?;
        Ok(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt())
    }

    /// Largest entrywise modulus of `A − B`.
    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        crate::error::check_dim(self.dim(), rhs.dim())?;
        Ok(self.0.iter().zip(rhs.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// `‖A A† − 1‖_F`.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = &self.0 * self.0.adjoint();
        let mut acc = 0.0;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let target = if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                acc += (prod[(r, c)] - target).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn determinant(&self) -> Complex64 {
        self.0.clone().determinant()
    }

    /// `‖A − A†‖_F`.
    pub fn hermiticity_residual(&self) -> f64 {
        self.0.iter().zip(self.0.adjoint().iter()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }

    /// Row-major rows of `[re, im]` pairs, the JSON wire shape.
    pub fn to_pairs(&self) -> Vec<Vec<[f64; 2]>> {
        (0..self.dim()).map(|r| (0..self.dim()).map(|c| [self.0[(r, c)].re, self.0[(r, c)].im]).collect()).collect()
    }

    pub fn from_pairs(rows: &[Vec<[f64; 2]>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> =
            rows.iter().map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{}", self.0)
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(deserializer)?;
        Self::from_pairs(&rows).map_err(serde::de::Error::custom)
    }
}
