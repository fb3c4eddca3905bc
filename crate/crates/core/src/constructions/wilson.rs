use super::blocks::BlockSpec;
use super::canvas::Canvas;
use crate::error::{Error, Result};
use crate::latin::{corner_ls, cyclic_ls, ols_pair, OlsPair};
use crate::numerics::{StateVector, Tolerance};
use crate::square::{basis_qls, Qls};

pub(crate) fn check_params(m: usize, t: usize, s: usize) -> Result<()> {
    if m < 2 || t < 3 || s < 2 || s >= t {
        return Err(Error::InvalidParameters(format!(
            "Wilson's construction needs m >= 2, t >= 3 and 2 <= s < t, got m = {m}, t = {t}, s = {s}"
        )));
    }
    Ok(())
}

/// Square of order `mt + s` from a built-in pair of orthogonal Latin squares
/// of order `t`.
pub fn wilson_qls(m: usize, t: usize, s: usize, blocks: &BlockSpec) -> Result<Qls> {
    check_params(m, t, s)?;
    wilson_qls_with(m, t, s, blocks, &ols_pair(t)?)
}

/// Rows and columns split into bands `R_a = [ma, ma + m)` and a tail
/// `S = [mt, mt + s)`.
///
/// For each band pair `(a, b)` the entries come from the vectors
/// `U_a |m L(a, b) + k>`. When `L'(a, b) < s` the block is enlarged by the
/// tail coordinate `mt + L'(a, b)`. The `S x S` corner holds the columns of
/// the corner rotation.
pub fn wilson_qls_with(m: usize, t: usize, s: usize, blocks: &BlockSpec, pair: &OlsPair) -> Result<Qls> {
    check_params(m, t, s)?;
    if pair.order() != t {
        return Err(Error::InvalidParameters(format!(
            "orthogonal pair has order {}, expected {t}",
            pair.order()
        )));
    }
    let (rotations, corner) = blocks.validate_wilson(m, t, s)?;
    let tol = Tolerance::default();
    let v = m * t + s;
    let (l, lp) = (pair.first(), pair.second());
    let small = cyclic_ls(m);
    let big = corner_ls(m + 1);
    let mut canvas = Canvas::new(v);

    for a in 0..t {
        for b in 0..t {
            let band = l.get(a, b);
            let u = if a == 0 {
                crate::numerics::UnitaryMatrix::identity(m)
            } else {
                rotations[a - 1][band].matrix(m)?
            };
            let mut basis: Vec<StateVector> = (0..m).map(|k| u.column(k).embed(v, m * band)).collect();
            let tail = lp.get(a, b);
            if tail >= s {
                let block = basis_qls(&small, &basis, &tol)?;
                for p in 0..m {
                    for q in 0..m {
                        canvas.place(m * a + p, m * b + q, &block[p * m + q])?;
                    }
                }
            } else {
                let extra = m * t + tail;
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

    let w = corner.matrix(s)?;
    let basis: Vec<StateVector> = (0..s).map(|k| w.column(k).embed(v, m * t)).collect();
    let block = basis_qls(&cyclic_ls(s), &basis, &tol)?;
    for p in 0..s {
        for q in 0..s {
            canvas.place(m * t + p, m * t + q, &block[p * s + q])?;
        }
    }
    canvas.finish()
}
