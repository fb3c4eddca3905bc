use crate::error::{Error, Result};
use crate::numerics::{root_of_unity, Complex, StateVector};
use crate::square::{Grid, Qls};
use crate::Tolerance;

/// Exponent of `omega` in component `k` of `M*_i`: the diagonal
/// `(1, w^{2i}, w^{i}, w^{3i}, ..., w^{(v-1)i})`, i.e. `k i` with the
/// second and third entries exchanged.
fn diagonal_exponent(k: usize, i: usize) -> usize {
    match k {
        1 => 2 * i,
        2 => i,
        _ => k * i,
    }
}

/// Entry `(i, j)`: column `j` of `M*_i F_v`, with component `k` equal to
/// `omega^{e_k(i) + k j} / sqrt(v)`.
pub fn maximal_cell(v: usize, i: usize, j: usize) -> StateVector {
    let scale = 1.0 / (v as f64).sqrt();
    let amps: Vec<Complex> = (0..v)
        .map(|k| root_of_unity(v, diagonal_exponent(k, i) % v + (k * j) % v) * scale)
        .collect();
    StateVector::from_unit_unchecked(amps)
}

/// A square of order `v` whose `v^2` entries are pairwise distinct up to phase.
pub fn maximal_qls(v: usize) -> Result<Qls> {
    if v < 4 {
        return Err(Error::OrderTooSmall { order: v, min: 4 });
    }
    let cells = (0..v * v)
        .map(|k| maximal_cell(v, k / v, k % v).into_amplitudes())
        .collect();
    Qls::new(Grid::new(v, cells)?, &Tolerance::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::fourier_matrix;

    #[test]
    fn first_row_is_fourier() {
        for v in 4..=7 {
            let f = fourier_matrix(v);
            let q = maximal_qls(v).unwrap();
            for j in 0..v {
                assert_eq!(q.get(0, j), &f.column(j));
            }
        }
    }

    #[test]
    fn small_orders_rejected() {
        for v in 0..4 {
            assert!(matches!(maximal_qls(v), Err(Error::OrderTooSmall { .. })));
        }
    }
}
