//! Phase structure between unitary matrices.
//!
//! The cardinality of `U` with `V` counts columns of `U` that agree with no
//! column of `V` up to global phase. Padded phased-Fourier matrices
//! `diag(I_{v-s}, F_s^theta)` are the building block every construction uses
//! to inject a controlled number of new vectors.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{block_diag, dot, is_unitary, phased_fourier, Tolerance, UnitaryMatrix};

/// Largest block size the default phase audit accepts.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// An angle in `[0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct PhaseAngle(f64);

impl PhaseAngle {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta.is_finite() && (0.0..PI).contains(&theta)) {
            return Err(Error::InvalidParameters(format!("phase angle {theta} is outside [0, pi)")));
        }
        Ok(PhaseAngle(theta))
    }

    pub const ZERO: PhaseAngle = PhaseAngle(0.0);

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// `diag(I_{dim - block_size}, F_{block_size}^theta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PaddedPhasedFourier {
    pub dim: usize,
    pub block_size: usize,
    pub theta: PhaseAngle,
    pub matrix: UnitaryMatrix,
}

pub fn padded_phased_fourier(v: usize, s: usize, theta: PhaseAngle) -> Result<PaddedPhasedFourier> {
    if s < 2 || s > v {
        return Err(Error::InvalidBlockSize { size: s, dim: v });
    }
    let tail = phased_fourier(s, theta.radians());
    let matrix = if s == v {
        tail
    } else {
        block_diag(&[UnitaryMatrix::identity(v - s), tail])?
    };
    Ok(PaddedPhasedFourier {
        dim: v,
        block_size: s,
        theta,
        matrix,
    })
}

/// Like [`padded_phased_fourier`], but `d = 0` yields the identity.
pub(crate) fn rotation(v: usize, d: usize, theta: PhaseAngle) -> Result<UnitaryMatrix> {
    if d == 0 {
        Ok(UnitaryMatrix::identity(v))
    } else {
        Ok(padded_phased_fourier(v, d, theta)?.matrix)
    }
}

/// Per-column verdict of [`unitary_cardinality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColumnMatch {
    /// Equal up to phase to this column of the reference matrix.
    Matched(usize),
    Distinct,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitaryCardinality {
    pub count: usize,
    pub witness: Vec<ColumnMatch>,
}

/// Number of columns of `u` distinct up to global phase from every column of `w`.
pub fn unitary_cardinality(u: &UnitaryMatrix, w: &UnitaryMatrix, tol: &Tolerance) -> Result<UnitaryCardinality> {
    tol.validate()?;
    let v = u.dim();
    if w.dim() != v {
        return Err(Error::DimensionMismatch { expected: v, found: w.dim() });
    }
    for m in [u, w] {
        let r = is_unitary(m.matrix(), tol);
        if !r.unitary {
            return Err(Error::NotUnitary { deviation: r.max_deviation });
        }
    }
    let limit = tol.distinct_limit();
    let mut witness = Vec::with_capacity(v);
    for a in 0..v {
        let col = u.matrix().column(a);
        let mut matched = None;
        for b in 0..v {
            let overlap = dot(col, w.matrix().column(b)).norm();
            if overlap >= tol.tau_same {
                matched.get_or_insert(b);
            } else if overlap > limit {
                return Err(Error::AmbiguousPhase { overlap, first: a, second: b });
            }
        }
        witness.push(matched.map_or(ColumnMatch::Distinct, ColumnMatch::Matched));
    }
    let count = witness.iter().filter(|m| **m == ColumnMatch::Distinct).count();
    if count == 1 {
        return Err(Error::InconsistentCardinality {
            count,
            order: v,
            reason: "exactly one distinct column cannot occur between unitaries".into(),
        });
    }
    Ok(UnitaryCardinality { count, witness })
}

/// Options for [`phase_family_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFamilyOptions {
    pub tolerance: Tolerance,
    /// Accept block sizes above [`DEFAULT_MAX_ORDER`]; the audit still runs.
    pub allow_large_order: bool,
}

impl Default for PhaseFamilyOptions {
    fn default() -> Self {
        PhaseFamilyOptions {
            tolerance: Tolerance::default(),
            allow_large_order: false,
        }
    }
}

/// Largest `|<u|w>|` between matching columns of `F_d^a` and `F_d^b` when
/// the angles differ by `delta`: `|e^{i delta} + d - 1| / d`.
pub fn same_column_overlap(d: usize, delta: f64) -> f64 {
    let d = d as f64;
    (d * d - 2.0 * (d - 1.0) * (1.0 - delta.cos())).max(0.0).sqrt() / d
}

/// `count` equally spaced angles `a pi / (count + 1)`, `a = 1..=count`.
///
/// Fails when the closest pair would leave some block of size up to `v_max`
/// with an overlap within ten ambiguity bands of 1.
pub fn phase_family(count: usize, v_max: usize) -> Result<Vec<PhaseAngle>> {
    phase_family_with(count, v_max, &PhaseFamilyOptions::default())
}

pub fn phase_family_with(count: usize, v_max: usize, opts: &PhaseFamilyOptions) -> Result<Vec<PhaseAngle>> {
    opts.tolerance.validate()?;
    if count == 0 {
        return Err(Error::InvalidParameters("a phase family needs at least one angle".into()));
    }
    if v_max > DEFAULT_MAX_ORDER && !opts.allow_large_order {
        return Err(Error::UnsupportedOrder {
            order: v_max,
            reason: format!("phase separation is only certified up to order {DEFAULT_MAX_ORDER} by default"),
        });
    }
    let step = PI / (count + 1) as f64;
    if count > 1 {
        let overlap = same_column_overlap(v_max.max(2), step);
        let limit = 1.0 - 10.0 * opts.tolerance.band_low;
        if overlap > limit {
            return Err(Error::InsufficientSeparation {
                count,
                max_block: v_max,
                overlap,
                limit,
            });
        }
    }
    Ok((1..=count).map(|a| PhaseAngle(a as f64 * step)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{fourier_matrix, Matrix};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn self_cardinality_is_zero() {
        let f = phased_fourier(5, 0.4);
        assert_eq!(unitary_cardinality(&f, &f, &tol()).unwrap().count, 0);
    }

    #[test]
    fn fourier_with_distinct_phases() {
        let a = phased_fourier(4, 0.3);
        let b = phased_fourier(4, 1.1);
        let r = unitary_cardinality(&a, &b, &tol()).unwrap();
        assert_eq!(r.count, 4);
        assert!(r.witness.iter().all(|w| *w == ColumnMatch::Distinct));
    }

    #[test]
    fn padded_against_identity() {
        let p = padded_phased_fourier(4, 2, PhaseAngle::new(PI / 3.0).unwrap()).unwrap();
        let r = unitary_cardinality(&p.matrix, &UnitaryMatrix::identity(4), &tol()).unwrap();
        assert_eq!(r.count, 2);
        assert_eq!(r.witness[0], ColumnMatch::Matched(0));
        assert_eq!(r.witness[1], ColumnMatch::Matched(1));
    }

    #[test]
    fn permutation_has_no_new_columns() {
        let p = Matrix::from_fn(4, |r, c| if r == (c + 1) % 4 { crate::numerics::ONE } else { crate::numerics::ZERO });
        let p = UnitaryMatrix::new(p, &tol()).unwrap();
        let r = unitary_cardinality(&p, &UnitaryMatrix::identity(4), &tol()).unwrap();
        assert_eq!(r.count, 0);
        assert_eq!(r.witness[0], ColumnMatch::Matched(1));
    }

    #[test]
    fn padded_shapes() {
        let theta = PhaseAngle::new(0.9).unwrap();
        assert_eq!(
            padded_phased_fourier(4, 4, theta).unwrap().matrix,
            phased_fourier(4, 0.9)
        );
        let p = padded_phased_fourier(5, 2, PhaseAngle::new(PI / 4.0).unwrap()).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let e = if r == c { 1.0 } else { 0.0 };
                assert_eq!(p.matrix.get(r, c), crate::numerics::Complex::new(e, 0.0));
            }
        }
        assert_eq!(
            padded_phased_fourier(3, 1, theta).unwrap_err(),
            Error::InvalidBlockSize { size: 1, dim: 3 }
        );
        assert!(padded_phased_fourier(3, 4, theta).is_err());
    }

    #[test]
    fn ambiguous_overlap_is_refused() {
        // matching columns overlap cos(delta / 2), about 1 - 5e-6
        let a = fourier_matrix(2);
        let b = phased_fourier(2, 0.0063);
        let r = unitary_cardinality(&a, &b, &tol());
        assert!(matches!(r, Err(Error::AmbiguousPhase { .. })), "{r:?}");
    }

    #[test]
    fn family_examples() {
        let f = phase_family(1, 8).unwrap();
        assert_eq!(f, vec![PhaseAngle(PI / 2.0)]);
        let f = phase_family(3, 4).unwrap();
        let expect = [PI / 4.0, PI / 2.0, 3.0 * PI / 4.0];
        for (a, e) in f.iter().zip(expect) {
            assert!((a.radians() - e).abs() < 1e-15);
        }
        assert!(matches!(phase_family(200, 64), Err(Error::InsufficientSeparation { .. })));
        assert!(matches!(phase_family(2, 65), Err(Error::UnsupportedOrder { .. })));
        let wide = PhaseFamilyOptions {
            allow_large_order: true,
            ..Default::default()
        };
        assert!(phase_family_with(2, 65, &wide).is_ok());
        assert!(phase_family(0, 4).is_err());
    }

    #[test]
    fn family_audit_matches_brute_force() {
        let fam = phase_family(3, 4).unwrap();
        let mut worst: f64 = 0.0;
        for (i, a) in fam.iter().enumerate() {
            for b in &fam[i + 1..] {
                let x = phased_fourier(4, a.radians());
                let y = phased_fourier(4, b.radians());
                for p in 0..4 {
                    for q in 0..4 {
                        worst = worst.max(dot(x.matrix().column(p), y.matrix().column(q)).norm());
                    }
                }
            }
        }
        assert!(worst < 1.0 - 1e-4, "{worst}");
        assert!((worst - same_column_overlap(4, PI / 4.0)).abs() < 1e-12);
    }

    #[test]
    fn angle_range() {
        assert!(PhaseAngle::new(PI).is_err());
        assert!(PhaseAngle::new(-0.1).is_err());
        assert!(PhaseAngle::new(0.0).is_ok());
    }
}
