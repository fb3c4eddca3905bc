use super::blocks::BlockSpec;
use super::canvas::Canvas;
use crate::error::{Error, Result};
use crate::latin::{cyclic_ls, LatinSquare};
use crate::numerics::UnitaryMatrix;
use crate::square::Qls;

pub(crate) fn check_params(m: usize, t: usize) -> Result<()> {
    if m < 2 || t < 2 {
        return Err(Error::InvalidParameters(format!(
            "direct product needs m >= 2 and t >= 2, got m = {m}, t = {t}"
        )));
    }
    Ok(())
}

/// Square of order `mt` from cyclic Latin squares of orders `t` and `m`.
///
/// Row `m i + k`, column `m j + l` holds `U_i (|L_t(i, j)> (x) |L_m(k, l)>)`
/// where `U_i` acts on the `L_t(i, j)`-th block of size `m` by
/// `blocks.rotations[i - 1][L_t(i, j)]`, and `U_0` is the identity.
pub fn direct_product_qls(m: usize, t: usize, blocks: &BlockSpec) -> Result<Qls> {
    direct_product_qls_with(m, t, blocks, &cyclic_ls(t), &cyclic_ls(m))
}

pub fn direct_product_qls_with(
    m: usize,
    t: usize,
    blocks: &BlockSpec,
    outer: &LatinSquare,
    inner: &LatinSquare,
) -> Result<Qls> {
    check_params(m, t)?;
    if outer.order() != t || inner.order() != m {
        return Err(Error::InvalidParameters("Latin square orders do not match (t, m)".into()));
    }
    let rotations = blocks.validate_direct_product(m, t)?;
    let v = m * t;
    let mut canvas = Canvas::new(v);
    for i in 0..t {
        let mats: Vec<UnitaryMatrix> = (0..t)
            .map(|b| {
                if i == 0 {
                    Ok(UnitaryMatrix::identity(m))
                } else {
                    rotations[i - 1][b].matrix(m)
                }
            })
            .collect::<Result<_>>()?;
        for j in 0..t {
            let b = outer.get(i, j);
            for k in 0..m {
                for l in 0..m {
                    let cell = mats[b].column(inner.get(k, l)).embed(v, m * b);
                    canvas.place(m * i + k, m * j + l, &cell)?;
                }
            }
        }
    }
    canvas.finish()
}
