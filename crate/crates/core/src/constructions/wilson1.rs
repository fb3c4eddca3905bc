use super::blocks::BlockSpec;
use super::canvas::Canvas;
use crate::error::{Error, Result};
use crate::latin::{corner_ls, cyclic_ls, idempotent_ls, LatinSquare};
use crate::numerics::{StateVector, Tolerance, UnitaryMatrix};
use crate::square::{basis_qls, Qls};

pub(crate) fn check_params(m: usize, t: usize) -> Result<()> {
    if m < 2 || t < 3 {
        return Err(Error::InvalidParameters(format!(
            "the order mt+1 construction needs m >= 2 and t >= 3, got m = {m}, t = {t}"
        )));
    }
    Ok(())
}

/// Square of order `mt + 1` from a built-in idempotent Latin square of order `t`.
pub fn wilson1_qls(m: usize, t: usize, blocks: &BlockSpec) -> Result<Qls> {
    check_params(m, t)?;
    wilson1_qls_with(m, t, blocks, &idempotent_ls(t)?)
}

/// Bands `R_a = [ma, ma + m)` plus the single extra coordinate `mt`.
///
/// Off-diagonal band pairs use the vectors `U_a |m L(a, b) + k>`. Diagonal
/// pairs `a < t - 1` are enlarged by `|mt>`. The last diagonal pair is an
/// `(m + 1)`-block over the columns of the corner rotation acting on
/// `R_{t-1}` and `mt`.
///
/// The tail rotation of row band `t - 1` never reaches the square (that band
/// meets `R_{t-1}` only on the diagonal), so there is no slot for it.
pub fn wilson1_qls_with(m: usize, t: usize, blocks: &BlockSpec, l: &LatinSquare) -> Result<Qls> {
    check_params(m, t)?;
    if l.order() != t || !l.is_idempotent() {
        return Err(Error::InvalidParameters(format!("need an idempotent Latin square of order {t}")));
    }
    let (rotations, tails, corner) = blocks.validate_wilson1(m, t)?;
    let tol = Tolerance::default();
    let v = m * t + 1;
    let extra = m * t;
    let small = cyclic_ls(m);
    let big = corner_ls(m + 1);
    let mut canvas = Canvas::new(v);

    let band_matrix = |a: usize, band: usize| -> Result<UnitaryMatrix> {
        if a == 0 || (band == t - 1 && a == t - 1) {
            Ok(UnitaryMatrix::identity(m))
        } else if band == t - 1 {
            tails[a - 1].matrix(m)
        } else {
            rotations[a - 1][band].matrix(m)
        }
    };

    for a in 0..t {
        for b in 0..t {
            if a == t - 1 && b == t - 1 {
                continue;
            }
            let band = l.get(a, b);
            let u = band_matrix(a, band)?;
            let mut basis: Vec<StateVector> = (0..m).map(|k| u.column(k).embed(v, m * band)).collect();
            if a != b {
                let block = basis_qls(&small, &basis, &tol)?;
                for p in 0..m {
                    for q in 0..m {
                        canvas.place(m * a + p, m * b + q, &block[p * m + q])?;
                    }
                }
            } else {
                basis.push(StateVector::basis(v, extra));
                let block = basis_qls(&big, &basis, &tol)?;
                let row = |p: usize| if p < m { m * a + p } else { extra };
                let col = |q: usize| if q < m { m * b + q } else { extra };
                for p in 0..=m {
                    for q in 0..=m {
                        if p == m && q == m {
                            continue;
                        }
                        canvas.place(row(p), col(q), &block[p * (m + 1) + q])?;
                    }
                }
            }
        }
    }

    let w = corner.matrix(m + 1)?;
    let off = m * (t - 1);
    let basis: Vec<StateVector> = (0..=m).map(|k| w.column(k).embed(v, off)).collect();
    let block = basis_qls(&cyclic_ls(m + 1), &basis, &tol)?;
    for p in 0..=m {
        for q in 0..=m {
            canvas.place(off + p, off + q, &block[p * (m + 1) + q])?;
        }
    }
    canvas.finish()
}
