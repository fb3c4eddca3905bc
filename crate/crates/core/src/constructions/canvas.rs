use crate::error::{Error, Result};
use crate::numerics::{Complex, StateVector, Tolerance};
use crate::square::{Grid, Qls};

/// A partially filled square; every cell must be written exactly once.
pub(crate) struct Canvas {
    order: usize,
    cells: Vec<Option<Vec<Complex>>>,
}

impl Canvas {
    pub(crate) fn new(order: usize) -> Self {
        Canvas {
            order,
            cells: vec![None; order * order],
        }
    }

    pub(crate) fn place(&mut self, row: usize, col: usize, v: &StateVector) -> Result<()> {
        let slot = &mut self.cells[row * self.order + col];
        if slot.is_some() {
            return Err(Error::InvalidParameters(format!("cell ({row}, {col}) written twice")));
        }
        *slot = Some(v.amplitudes().to_vec());
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<Qls> {
        let v = self.order;
        let mut cells = Vec::with_capacity(v * v);
        for (k, c) in self.cells.into_iter().enumerate() {
            cells.push(c.ok_or_else(|| Error::InvalidParameters(format!("cell ({}, {}) never written", k / v, k % v)))?);
        }
        Qls::new(Grid::new(v, cells)?, &Tolerance::default())
    }
}
