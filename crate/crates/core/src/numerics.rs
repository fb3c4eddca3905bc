//! Dense complex linear algebra for small orders.
//!
//! Everything here is double precision and dense. Matrices are stored
//! column-major because the constructions consume them column by column:
//! column `k` of a unitary is a [`StateVector`].

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);

/// Numerical thresholds used by every orthonormality and same-phase decision.
///
/// Two unit vectors are treated as equal up to global phase when
/// `|<u|w>| >= tau_same`, as distinct when `|<u|w>| <= 1 - band_low`, and
/// anything in between is refused as ambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_unit: f64,
    pub tau_same: f64,
    pub band_low: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_unit: 1e-9,
            tau_same: 1.0 - 1e-8,
            band_low: 1e-5,
        }
    }
}

impl Tolerance {
    pub fn new(eps_unit: f64, tau_same: f64, band_low: f64) -> Result<Self> {
        let tol = Tolerance {
            eps_unit,
            tau_same,
            band_low,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.eps_unit.is_finite() && self.tau_same.is_finite() && self.band_low.is_finite();
        if !finite {
            return Err(Error::InvalidTolerance("non-finite value".into()));
        }
        if !(0.0 < self.eps_unit && self.eps_unit < self.band_low && self.band_low < 1.0) {
            return Err(Error::InvalidTolerance(format!(
                "need 0 < eps_unit ({}) < band_low ({}) < 1",
                self.eps_unit, self.band_low
            )));
        }
        if !(self.tau_same > 1.0 - self.band_low && self.tau_same < 1.0) {
            return Err(Error::InvalidTolerance(format!(
                "need 1 - band_low ({}) < tau_same ({}) < 1",
                1.0 - self.band_low,
                self.tau_same
            )));
        }
        Ok(())
    }

    /// Upper edge of the "clearly distinct" region.
    pub fn distinct_limit(&self) -> f64 {
        1.0 - self.band_low
    }
}

/// `exp(2 pi i k / n)` with `k` reduced modulo `n` first.
///
/// Quarter turns are returned exactly so that e.g. `F_2` and `F_4` contain
/// genuine zeros in their imaginary parts.
pub fn root_of_unity(n: usize, k: usize) -> Complex {
    assert!(n > 0, "root of unity of order zero");
    let k = k % n;
    if (4 * k) % n == 0 {
        return match 4 * k / n {
            0 => ONE,
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        };
    }
    Complex::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

/// A unit vector in `C^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex>,
}

impl StateVector {
    /// Checks finiteness and unit norm against the default tolerance.
    pub fn new(amps: Vec<Complex>) -> Result<Self> {
        Self::with_tolerance(amps, &Tolerance::default())
    }

    pub fn with_tolerance(amps: Vec<Complex>, tol: &Tolerance) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::Shape("state vector of dimension zero".into()));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = norm(&amps);
        if (norm - 1.0).abs() > tol.eps_unit {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector { amps })
    }

    /// Rescales `amps` to unit length.
    pub fn normalized(amps: Vec<Complex>) -> Result<Self> {
        let n = norm(&amps);
        if !n.is_finite() || n == 0.0 {
            return Err(Error::ZeroVector);
        }
        Self::new(amps.into_iter().map(|a| a / n).collect())
    }

    /// Computational basis vector `|k>` of `C^dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut amps = vec![ZERO; dim];
        amps[k] = ONE;
        StateVector { amps }
    }

    pub(crate) fn from_unit_unchecked(amps: Vec<Complex>) -> Self {
        debug_assert!((norm(&amps) - 1.0).abs() < 1e-6);
        StateVector { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }

    /// Multiplies by a unit-modulus scalar.
    pub fn with_phase(&self, theta: f64) -> Self {
        let p = Complex::from_polar(1.0, theta);
        StateVector {
            amps: self.amps.iter().map(|a| a * p).collect(),
        }
    }

    /// Places this vector into coordinates `offset..offset+dim` of `C^ambient`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Self {
        assert!(offset + self.dim() <= ambient);
        let mut amps = vec![ZERO; ambient];
        amps[offset..offset + self.dim()].copy_from_slice(&self.amps);
        StateVector { amps }
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.amps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.6}{:+.6}i", a.re, a.im)?;
        }
        write!(f, ")")
    }
}

pub(crate) fn norm(amps: &[Complex]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// `sum_k conj(u_k) w_k` over raw amplitude slices of equal length.
pub(crate) fn dot(u: &[Complex], w: &[Complex]) -> Complex {
    u.iter().zip(w).map(|(a, b)| a.conj() * b).sum()
}

/// `<u|w>`: conjugate-linear in the first argument.
pub fn inner(u: &StateVector, w: &StateVector) -> Result<Complex> {
    if u.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: w.dim(),
        });
    }
    Ok(dot(&u.amps, &w.amps))
}

/// `u (x) w`, with component `a * w.dim() + b` equal to `u_a w_b`.
pub fn tensor(u: &StateVector, w: &StateVector) -> StateVector {
    let mut amps = Vec::with_capacity(u.dim() * w.dim());
    for a in &u.amps {
        for b in &w.amps {
            amps.push(a * b);
        }
    }
    StateVector { amps }
}

/// Dense square complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for k in 0..dim {
            m.set(k, k, ONE);
        }
        m
    }

    /// Builds a matrix from `f(row, col)`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for col in 0..dim {
            for row in 0..dim {
                data.push(f(row, col));
            }
        }
        Matrix { dim, data }
    }

    /// Columns must all have length `columns.len()`.
    pub fn from_columns(columns: &[Vec<Complex>]) -> Result<Self> {
        let dim = columns.len();
        let mut data = Vec::with_capacity(dim * dim);
        for c in columns {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
            data.extend_from_slice(c);
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.data[col * self.dim + row]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex) {
        self.data[col * self.dim + row] = value;
    }

    pub fn column(&self, col: usize) -> &[Complex] {
        &self.data[col * self.dim..(col + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for c in 0..n {
            for k in 0..n {
                let b = rhs.get(k, c);
                if b == ZERO {
                    continue;
                }
                for r in 0..n {
                    out.data[c * n + r] += self.get(r, k) * b;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut out = vec![ZERO; self.dim];
        for (c, x) in v.iter().enumerate() {
            if *x == ZERO {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                *o += self.get(r, c) * x;
            }
        }
        Ok(out)
    }

    /// `max |(M^dagger M - I)_{jk}|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for j in 0..n {
            for k in j..n {
                let g = dot(self.column(j), self.column(k));
                let target = if j == k { ONE } else { ZERO };
                worst = worst.max((g - target).norm());
            }
        }
        worst
    }
}

/// Outcome of [`is_unitary`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitarityReport {
    pub unitary: bool,
    pub max_deviation: f64,
}

pub fn is_unitary(m: &Matrix, tol: &Tolerance) -> UnitarityReport {
    let max_deviation = m.unitarity_deviation();
    UnitarityReport {
        unitary: max_deviation <= tol.eps_unit,
        max_deviation,
    }
}

/// A [`Matrix`] that passed the unitarity check (or is unitary by construction).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(Matrix);

impl UnitaryMatrix {
    pub fn new(m: Matrix, tol: &Tolerance) -> Result<Self> {
        let report = is_unitary(&m, tol);
        if !report.unitary {
            return Err(Error::NotUnitary {
                deviation: report.max_deviation,
            });
        }
        Ok(UnitaryMatrix(m))
    }

    pub fn identity(dim: usize) -> Self {
        UnitaryMatrix(Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.0.get(row, col)
    }

    pub fn column(&self, col: usize) -> StateVector {
        StateVector::from_unit_unchecked(self.0.column(col).to_vec())
    }

    pub fn columns(&self) -> Vec<StateVector> {
        (0..self.dim()).map(|c| self.column(c)).collect()
    }

    pub fn adjoint(&self) -> Self {
        UnitaryMatrix(self.0.adjoint())
    }

    /// Products of unitaries are unitary.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<Self> {
        Ok(UnitaryMatrix(self.0.mul(&rhs.0)?))
    }

    /// Image of the computational basis vector `|k>`.
    pub fn apply_basis(&self, k: usize) -> StateVector {
        self.column(k)
    }
}

/// `F_v(k, l) = exp(2 pi i k l / v) / sqrt(v)`.
pub fn fourier_matrix(v: usize) -> UnitaryMatrix {
    assert!(v >= 1, "Fourier matrix of order zero");
    let scale = 1.0 / (v as f64).sqrt();
    UnitaryMatrix(Matrix::from_fn(v, |k, l| root_of_unity(v, k * l) * scale))
}

/// `F_v` with its first row multiplied by `exp(i theta)`.
pub fn phased_fourier(v: usize, theta: f64) -> UnitaryMatrix {
    let mut m = fourier_matrix(v).0;
    let p = Complex::from_polar(1.0, theta);
    for l in 0..v {
        let x = m.get(0, l);
        m.set(0, l, x * p);
    }
    UnitaryMatrix(m)
}

/// Block-diagonal composition; off-block entries are exactly zero.
pub fn block_diag(blocks: &[UnitaryMatrix]) -> Result<UnitaryMatrix> {
    if blocks.is_empty() {
        return Err(Error::Shape("block_diag needs at least one block".into()));
    }
    let dim: usize = blocks.iter().map(UnitaryMatrix::dim).sum();
    let mut m = Matrix::zeros(dim);
    let mut offset = 0;
    for b in blocks {
        for c in 0..b.dim() {
            for r in 0..b.dim() {
                m.set(offset + r, offset + c, b.get(r, c));
            }
        }
        offset += b.dim();
    }
    Ok(UnitaryMatrix(m))
}
