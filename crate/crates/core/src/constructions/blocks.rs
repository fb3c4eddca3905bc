//! Block parameters shared by the recursive constructions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::UnitaryMatrix;
use crate::phase::{phase_family, rotation, PhaseAngle};

/// `diag(I, F_size^theta)` inside an ambient block; `size == 0` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasedBlock {
    pub size: usize,
    pub theta: PhaseAngle,
}

impl PhasedBlock {
    pub const IDENTITY: PhasedBlock = PhasedBlock {
        size: 0,
        theta: PhaseAngle::ZERO,
    };

    pub fn new(size: usize, theta: PhaseAngle) -> Self {
        PhasedBlock { size, theta }
    }

    pub(crate) fn matrix(&self, dim: usize) -> Result<UnitaryMatrix> {
        rotation(dim, self.size, self.theta)
    }

    fn check(&self, cap: usize, what: &str) -> Result<()> {
        if self.size == 0 || (2..=cap).contains(&self.size) {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "{what}: block size {} is not 0 or in [2, {cap}]",
                self.size
            )))
        }
    }
}

/// Rotation parameters for one construction.
///
/// * `Wilson`: `rotations[a - 1][i]` for `a in 1..t`, `i in 0..t`, acting on
///   row band `a` and column band `i`; `corner` rotates the tail block.
/// * `Wilson1`: `rotations[a - 1][i]` for `i in 0..t-1`; `tails[a - 1]` for
///   `a in 1..t-1` rotate the last band; `corner` acts on the last band plus
///   the extra coordinate.
/// * `DirectProduct`: `rotations[i - 1][j]` for `i in 1..t`, `j in 0..t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockSpec {
    None,
    Wilson {
        rotations: Vec<Vec<PhasedBlock>>,
        corner: PhasedBlock,
    },
    Wilson1 {
        rotations: Vec<Vec<PhasedBlock>>,
        tails: Vec<PhasedBlock>,
        corner: PhasedBlock,
    },
    DirectProduct {
        rotations: Vec<Vec<PhasedBlock>>,
    },
}

/// One term of a cardinality prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    pub slot: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardinalityAccounting {
    pub base: usize,
    pub contributions: Vec<Contribution>,
    pub predicted_c: usize,
}

impl CardinalityAccounting {
    pub(crate) fn new(base: usize, contributions: Vec<Contribution>) -> Self {
        let predicted_c = base + contributions.iter().map(|c| c.count).sum::<usize>();
        CardinalityAccounting {
            base,
            contributions,
            predicted_c,
        }
    }
}

fn shape_error(what: &str, expected: usize, found: usize) -> Error {
    Error::InvalidParameters(format!("{what}: expected {expected} entries, found {found}"))
}

fn check_grid(rows: &[Vec<PhasedBlock>], n_rows: usize, n_cols: usize, cap: usize) -> Result<()> {
    if rows.len() != n_rows {
        return Err(shape_error("rotation rows", n_rows, rows.len()));
    }
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(shape_error("rotation row", n_cols, row.len()));
        }
        for (i, b) in row.iter().enumerate() {
            b.check(cap, &format!("rotation ({}, {i})", a + 1))?;
        }
    }
    Ok(())
}

/// Nontrivial rotations acting on the same subspace need distinct angles.
fn check_distinct<'a>(blocks: impl Iterator<Item = &'a PhasedBlock>, what: &str) -> Result<()> {
    let mut seen: Vec<f64> = Vec::new();
    for b in blocks.filter(|b| b.size > 0) {
        let th = b.theta.radians();
        if seen.contains(&th) {
            return Err(Error::InvalidParameters(format!(
                "{what}: two rotations share the angle {th}"
            )));
        }
        seen.push(th);
    }
    Ok(())
}

fn column_distinct(rows: &[Vec<PhasedBlock>], what: &str) -> Result<()> {
    let width = rows.first().map_or(0, Vec::len);
    for i in 0..width {
        check_distinct(rows.iter().map(|r| &r[i]), &format!("{what} {i}"))?;
    }
    Ok(())
}

/// Row `a` of `sizes` gets angle `angles[a]`.
fn assign(sizes: &[Vec<usize>], angles: &[PhaseAngle]) -> Result<Vec<Vec<PhasedBlock>>> {
    if sizes.len() != angles.len() {
        return Err(shape_error("rotation rows", angles.len(), sizes.len()));
    }
    Ok(sizes
        .iter()
        .zip(angles)
        .map(|(row, &th)| row.iter().map(|&d| PhasedBlock::new(d, th)).collect())
        .collect())
}

fn grid_terms(rows: &[Vec<PhasedBlock>], prefix: &str) -> Vec<Contribution> {
    let mut out = Vec::new();
    for (a, row) in rows.iter().enumerate() {
        for (i, b) in row.iter().enumerate() {
            if b.size > 0 {
                out.push(Contribution {
                    slot: format!("{prefix}[{}][{i}]", a + 1),
                    count: b.size,
                });
            }
        }
    }
    out
}

impl BlockSpec {
    pub(crate) fn validate_wilson(&self, m: usize, t: usize, s: usize) -> Result<(&[Vec<PhasedBlock>], PhasedBlock)> {
        let BlockSpec::Wilson { rotations, corner } = self else {
            return Err(Error::InvalidParameters("expected Wilson blocks".into()));
        };
        check_grid(rotations, t - 1, t, m)?;
        corner.check(s, "corner")?;
        column_distinct(rotations, "band")?;
        Ok((rotations, *corner))
    }

    pub(crate) fn validate_wilson1(
        &self,
        m: usize,
        t: usize,
    ) -> Result<(&[Vec<PhasedBlock>], &[PhasedBlock], PhasedBlock)> {
        let BlockSpec::Wilson1 { rotations, tails, corner } = self else {
            return Err(Error::InvalidParameters("expected Wilson blocks for order mt+1".into()));
        };
        check_grid(rotations, t - 1, t - 1, m)?;
        if tails.len() != t - 2 {
            return Err(shape_error("tail rotations", t - 2, tails.len()));
        }
        for (a, b) in tails.iter().enumerate() {
            b.check(m, &format!("tail {}", a + 1))?;
        }
        corner.check(m + 1, "corner")?;
        column_distinct(rotations, "band")?;
        check_distinct(tails.iter(), "tail band")?;
        Ok((rotations, tails, *corner))
    }

    pub(crate) fn validate_direct_product(&self, m: usize, t: usize) -> Result<&[Vec<PhasedBlock>]> {
        let BlockSpec::DirectProduct { rotations } = self else {
            return Err(Error::InvalidParameters("expected direct product blocks".into()));
        };
        check_grid(rotations, t - 1, t, m)?;
        column_distinct(rotations, "block")?;
        Ok(rotations)
    }

    /// Blocks for a Wilson square of order `mt + s` with the given sizes.
    ///
    /// Row `a` uses angle `a pi / (t + 1)`, the corner uses `t pi / (t + 1)`.
    pub fn wilson(m: usize, t: usize, s: usize, sizes: &[Vec<usize>], corner: usize) -> Result<Self> {
        super::wilson::check_params(m, t, s)?;
        let fam = phase_family(t, m.max(s))?;
        let spec = BlockSpec::Wilson {
            rotations: assign(sizes, &fam[..t - 1])?,
            corner: PhasedBlock::new(corner, fam[t - 1]),
        };
        spec.validate_wilson(m, t, s)?;
        Ok(spec)
    }

    /// Blocks for a Wilson square of order `mt + 1` with the given sizes.
    pub fn wilson1(m: usize, t: usize, sizes: &[Vec<usize>], tails: &[usize], corner: usize) -> Result<Self> {
        super::wilson1::check_params(m, t)?;
        let fam = phase_family(2 * t - 2, m + 1)?;
        if tails.len() > t - 2 {
            return Err(shape_error("tail rotations", t - 2, tails.len()));
        }
        let spec = BlockSpec::Wilson1 {
            rotations: assign(sizes, &fam[..t - 1])?,
            tails: tails.iter().zip(&fam[t - 1..]).map(|(&d, &th)| PhasedBlock::new(d, th)).collect(),
            corner: PhasedBlock::new(corner, fam[2 * t - 3]),
        };
        spec.validate_wilson1(m, t)?;
        Ok(spec)
    }

    /// Blocks for a direct product square of order `mt` with the given sizes.
    pub fn direct_product(m: usize, t: usize, sizes: &[Vec<usize>]) -> Result<Self> {
        super::direct_product::check_params(m, t)?;
        let fam = phase_family(t - 1, m)?;
        let spec = BlockSpec::DirectProduct {
            rotations: assign(sizes, &fam)?,
        };
        spec.validate_direct_product(m, t)?;
        Ok(spec)
    }

    /// Predicted cardinality for a square of order `base` built from these blocks.
    pub fn accounting(&self, base: usize) -> CardinalityAccounting {
        let terms = match self {
            BlockSpec::None => Vec::new(),
            BlockSpec::Wilson { rotations, corner } => {
                let mut t = grid_terms(rotations, "rotation");
                if corner.size > 0 {
                    t.push(Contribution { slot: "corner".into(), count: corner.size });
                }
                t
            }
            BlockSpec::Wilson1 { rotations, tails, corner } => {
                let mut t = grid_terms(rotations, "rotation");
                for (a, b) in tails.iter().enumerate().filter(|(_, b)| b.size > 0) {
                    t.push(Contribution { slot: format!("tail[{}]", a + 1), count: b.size });
                }
                if corner.size > 0 {
                    t.push(Contribution { slot: "corner".into(), count: corner.size });
                }
                t
            }
            BlockSpec::DirectProduct { rotations } => grid_terms(rotations, "rotation"),
        };
        CardinalityAccounting::new(base, terms)
    }
}
