//! Quantum Latin squares: verification and cardinality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::latin::LatinSquare;
use crate::numerics::{dot, norm, Complex, StateVector, Tolerance};

/// Components at or below this magnitude are never used as a phase pivot.
pub const PIVOT_THRESHOLD: f64 = 1e-6;

/// An unverified `v x v` array of amplitude vectors, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    order: usize,
    cells: Vec<Vec<Complex>>,
}

impl Grid {
    /// `cells[i * order + j]` is the vector at row `i`, column `j`.
    pub fn new(order: usize, cells: Vec<Vec<Complex>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Shape("order must be positive".into()));
        }
        if cells.len() != order * order {
            return Err(Error::Shape(format!(
                "expected {} cells for order {order}, found {}",
                order * order,
                cells.len()
            )));
        }
        if let Some((k, c)) = cells.iter().enumerate().find(|(_, c)| c.len() != order) {
            return Err(Error::Shape(format!(
                "cell ({}, {}) has dimension {}, expected {order}",
                k / order,
                k % order,
                c.len()
            )));
        }
        if cells.iter().flatten().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Grid { order, cells })
    }

    pub fn from_rows(rows: Vec<Vec<Vec<Complex>>>) -> Result<Self> {
        let order = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(Error::Shape(format!("row {i} has {} cells, expected {order}", r.len())));
        }
        Grid::new(order, rows.into_iter().flatten().collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cell(&self, row: usize, col: usize) -> &[Complex] {
        &self.cells[row * self.order + col]
    }

    pub fn cell_mut(&mut self, row: usize, col: usize) -> &mut Vec<Complex> {
        &mut self.cells[row * self.order + col]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureKind {
    Norm,
    RowOrthogonality,
    ColumnOrthogonality,
}

/// Indices are `(row, col, col')` for row failures, `(col, row, row')` for
/// column failures and `(row, col, col)` for norm failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub indices: (usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub worst_row_deviation: f64,
    pub worst_col_deviation: f64,
    pub worst_norm_deviation: f64,
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn worst_deviation(&self) -> f64 {
        self.worst_row_deviation
            .max(self.worst_col_deviation)
            .max(self.worst_norm_deviation)
    }
}

/// Checks that every row and every column is an orthonormal basis.
pub fn verify_qls(grid: &Grid, tol: &Tolerance) -> Result<VerificationReport> {
    tol.validate()?;
    let v = grid.order;
    let mut rep = VerificationReport {
        pass: true,
        worst_row_deviation: 0.0,
        worst_col_deviation: 0.0,
        worst_norm_deviation: 0.0,
        first_failure: None,
    };
    let note = |rep: &mut VerificationReport, dev: f64, kind: FailureKind, idx: (usize, usize, usize)| {
        if dev > tol.eps_unit && rep.first_failure.is_none() {
            rep.pass = false;
            rep.first_failure = Some(Failure { kind, indices: idx });
        }
    };
    for i in 0..v {
        for j in 0..v {
            let dev = (norm(grid.cell(i, j)) - 1.0).abs();
            rep.worst_norm_deviation = rep.worst_norm_deviation.max(dev);
            note(&mut rep, dev, FailureKind::Norm, (i, j, j));
        }
    }
    for i in 0..v {
        for j in 0..v {
            for k in j + 1..v {
                let dev = dot(grid.cell(i, j), grid.cell(i, k)).norm();
                rep.worst_row_deviation = rep.worst_row_deviation.max(dev);
                note(&mut rep, dev, FailureKind::RowOrthogonality, (i, j, k));
            }
        }
    }
    for j in 0..v {
        for i in 0..v {
            for k in i + 1..v {
                let dev = dot(grid.cell(i, j), grid.cell(k, j)).norm();
                rep.worst_col_deviation = rep.worst_col_deviation.max(dev);
                note(&mut rep, dev, FailureKind::ColumnOrthogonality, (j, i, k));
            }
        }
    }
    Ok(rep)
}

/// A verified quantum Latin square.
#[derive(Debug, Clone, PartialEq)]
pub struct Qls {
    order: usize,
    cells: Vec<StateVector>,
}

impl Qls {
    /// Verifies `grid` and wraps it; failures become [`Error::InvalidQls`].
    pub fn new(grid: Grid, tol: &Tolerance) -> Result<Self> {
        let rep = verify_qls(&grid, tol)?;
        if !rep.pass {
            let f = rep.first_failure.expect("failed report names a failure");
            return Err(Error::InvalidQls(format!(
                "{:?} check failed at {:?} (worst deviation {:e})",
                f.kind,
                f.indices,
                rep.worst_deviation()
            )));
        }
        Ok(Qls::from_verified(grid))
    }

    pub(crate) fn from_verified(grid: Grid) -> Self {
        Qls {
            order: grid.order,
            cells: grid.cells.into_iter().map(StateVector::from_unit_unchecked).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &StateVector {
        &self.cells[row * self.order + col]
    }

    pub fn to_grid(&self) -> Grid {
        Grid {
            order: self.order,
            cells: self.cells.iter().map(|c| c.amplitudes().to_vec()).collect(),
        }
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Qls {
        let v = self.order;
        let cells = (0..v * v).map(|k| self.cells[perm[k / v] * v + k % v].clone()).collect();
        Qls { order: v, cells }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> Qls {
        let v = self.order;
        let cells = (0..v * v).map(|k| self.cells[(k / v) * v + perm[k % v]].clone()).collect();
        Qls { order: v, cells }
    }

    /// Multiplies one cell by `exp(i theta)`.
    pub fn with_cell_phase(&self, row: usize, col: usize, theta: f64) -> Qls {
        let mut out = self.clone();
        let k = row * self.order + col;
        out.cells[k] = out.cells[k].with_phase(theta);
        out
    }

    pub fn verify(&self, tol: &Tolerance) -> VerificationReport {
        verify_qls(&self.to_grid(), tol).expect("a Qls always has a valid shape")
    }

    pub fn cardinality(&self, tol: &Tolerance) -> Result<CardinalityReport> {
        qls_cardinality(self, tol)
    }
}

/// `grid[i][j] = |L(i, j)>`.
pub fn classical_qls(l: &LatinSquare) -> Qls {
    let v = l.order();
    let cells = (0..v * v).map(|k| StateVector::basis(v, l.get(k / v, k % v))).collect();
    Qls { order: v, cells }
}

/// `block[i][j] = basis[L(i, j)]`, a row-major `L.order()^2` block.
///
/// The basis vectors may live in a larger ambient space; they only need to
/// be orthonormal.
pub fn basis_qls(l: &LatinSquare, basis: &[StateVector], tol: &Tolerance) -> Result<Vec<StateVector>> {
    let n = l.order();
    if basis.len() != n {
        return Err(Error::Shape(format!("basis has {} vectors, square has order {n}", basis.len())));
    }
    let dim = basis[0].dim();
    if dim < n {
        return Err(Error::Shape(format!("{n} orthonormal vectors cannot live in dimension {dim}")));
    }
    let mut worst: f64 = 0.0;
    for (a, u) in basis.iter().enumerate() {
        if u.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: u.dim() });
        }
        for w in &basis[a..] {
            let target = if std::ptr::eq(u, w) { 1.0 } else { 0.0 };
            worst = worst.max((dot(u.amplitudes(), w.amplitudes()).norm() - target).abs());
        }
    }
    if worst > tol.eps_unit {
        return Err(Error::NonOrthonormalBasis { deviation: worst });
    }
    Ok((0..n * n).map(|k| basis[l.get(k / n, k % n)].clone()).collect())
}

/// Rescales `u` so its first component above [`PIVOT_THRESHOLD`] is real and positive.
pub fn canonical_phase(u: &StateVector, tol: &Tolerance) -> Result<StateVector> {
    if (u.norm() - 1.0).abs() > tol.eps_unit {
        return Err(Error::NotNormalized { norm: u.norm() });
    }
    let pivot = u
        .amplitudes()
        .iter()
        .find(|a| a.norm() > PIVOT_THRESHOLD)
        .ok_or(Error::ZeroVector)?;
    let rot = pivot.conj() / pivot.norm();
    let mut amps: Vec<Complex> = u.amplitudes().iter().map(|a| a * rot).collect();
    // the pivot is made exactly real so a second pass is a no-op
    if let Some(p) = amps.iter_mut().find(|a| a.norm() > PIVOT_THRESHOLD) {
        *p = Complex::new(p.norm(), 0.0);
    }
    Ok(StateVector::from_unit_unchecked(amps))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CardinalityReport {
    pub order: usize,
    pub c: usize,
    /// Phase classes as `(row, col)` lists, ordered by first row-major cell.
    pub groups: Vec<Vec<(usize, usize)>>,
    /// Class index of each cell, row-major.
    pub class_of: Vec<usize>,
    /// Smallest overlap between two cells of the same class (1 if none).
    pub min_same_overlap: f64,
    /// Largest overlap between cells of different classes (0 if none).
    pub max_distinct_overlap: f64,
}

impl CardinalityReport {
    /// `sizes[k]` is the number of classes with `k + 1` cells.
    pub fn class_size_histogram(&self) -> Vec<usize> {
        let largest = self.groups.iter().map(Vec::len).max().unwrap_or(0);
        let mut h = vec![0; largest];
        for g in &self.groups {
            h[g.len() - 1] += 1;
        }
        h
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Groups the `v^2` cells into classes equal up to global phase.
///
/// Cells join when `|<u|w>| >= tau_same`. Any overlap strictly between
/// `1 - band_low` and `tau_same` aborts, as does a class containing a pair
/// that is not itself above `tau_same`.
pub fn qls_cardinality(q: &Qls, tol: &Tolerance) -> Result<CardinalityReport> {
    tol.validate()?;
    let v = q.order;
    let n = v * v;
    let limit = tol.distinct_limit();
    let amps: Vec<&[Complex]> = q.cells.iter().map(|c| c.amplitudes()).collect();

    let mut parent: Vec<usize> = (0..n).collect();
    let mut max_distinct: f64 = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            let o = dot(amps[a], amps[b]).norm();
            if o >= tol.tau_same {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            } else if o > limit {
                return Err(Error::AmbiguousPhase { overlap: o, first: a, second: b });
            } else {
                max_distinct = max_distinct.max(o);
            }
        }
    }

    let mut class_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut root_class = vec![usize::MAX; n];
    for k in 0..n {
        let r = find(&mut parent, k);
        if root_class[r] == usize::MAX {
            root_class[r] = groups.len();
            groups.push(Vec::new());
        }
        class_of[k] = root_class[r];
        groups[root_class[r]].push((k / v, k % v));
    }

    // Transitivity audit: every pair inside a class must itself match.
    // Pairs at or below `limit` were recorded as distinct in the first pass;
    // if any of them ended up inside one class the audit rejects it, so
    // `max_distinct` only covers genuine cross-class pairs.
    let mut min_same: f64 = 1.0;
    for g in &groups {
        for (x, &(i, j)) in g.iter().enumerate() {
            for &(k, l) in &g[x + 1..] {
                let (a, b) = (i * v + j, k * v + l);
                let o = dot(amps[a], amps[b]).norm();
                if o < tol.tau_same {
                    return Err(Error::InconsistentGrouping { overlap: o, first: a, second: b });
                }
                min_same = min_same.min(o);
            }
        }
    }
    let c = groups.len();
    if c < v || c > n {
        return Err(Error::InconsistentCardinality {
            count: c,
            order: v,
            reason: format!("cardinality must lie in [{v}, {n}]"),
        });
    }
    if c == v + 1 {
        return Err(Error::InconsistentCardinality {
            count: c,
            order: v,
            reason: "no quantum Latin square has cardinality v + 1".into(),
        });
    }
    Ok(CardinalityReport {
        order: v,
        c,
        groups,
        class_of,
        min_same_overlap: min_same,
        max_distinct_overlap: max_distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::cyclic_ls;
    use crate::numerics::{fourier_matrix, ONE, ZERO};
    use std::f64::consts::PI;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn classical_entries_and_cardinality() {
        let q = classical_qls(&cyclic_ls(3));
        assert_eq!(q.get(0, 1), &StateVector::basis(3, 1));
        for v in 2..=8 {
            let q = classical_qls(&cyclic_ls(v));
            let rep = q.verify(&tol());
            assert!(rep.pass);
            assert_eq!(rep.worst_deviation(), 0.0);
            assert_eq!(qls_cardinality(&q, &tol()).unwrap().c, v);
        }
    }

    #[test]
    fn repeated_cell_fails_row_check() {
        let mut g = classical_qls(&cyclic_ls(4)).to_grid();
        let dup = g.cell(0, 0).to_vec();
        *g.cell_mut(0, 1) = dup;
        let rep = verify_qls(&g, &tol()).unwrap();
        assert!(!rep.pass);
        assert_eq!(
            rep.first_failure,
            Some(Failure { kind: FailureKind::RowOrthogonality, indices: (0, 0, 1) })
        );
        assert!(matches!(Qls::new(g, &tol()), Err(Error::InvalidQls(_))));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(Grid::new(2, vec![vec![ONE, ZERO]; 3]), Err(Error::Shape(_))));
        assert!(matches!(Grid::new(2, vec![vec![ONE]; 4]), Err(Error::Shape(_))));
        assert!(matches!(
            Grid::from_rows(vec![vec![vec![ONE, ZERO]], vec![vec![ZERO, ONE]]]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn basis_blocks() {
        let basis = [StateVector::basis(8, 5), StateVector::basis(8, 6)];
        let b = basis_qls(&cyclic_ls(2), &basis, &tol()).unwrap();
        assert_eq!(b, vec![basis[0].clone(), basis[1].clone(), basis[1].clone(), basis[0].clone()]);

        let f = fourier_matrix(4);
        let fb = [f.column(0), f.column(1)];
        let b = basis_qls(&cyclic_ls(2), &fb, &tol()).unwrap();
        assert_eq!(b[1], f.column(1));

        let dup = [StateVector::basis(3, 0), StateVector::basis(3, 0)];
        assert!(matches!(
            basis_qls(&cyclic_ls(2), &dup, &tol()),
            Err(Error::NonOrthonormalBasis { .. })
        ));
    }

    #[test]
    fn canonical_phase_examples() {
        let t = tol();
        let u = StateVector::basis(3, 2).with_phase(PI / 3.0);
        let c = canonical_phase(&u, &t).unwrap();
        assert!((c.amplitudes()[2] - ONE).norm() < 1e-15);
        assert_eq!(canonical_phase(&c, &t).unwrap(), c);

        let h = 1.0 / 2f64.sqrt();
        let u = StateVector::new(vec![Complex::new(0.0, h), Complex::new(0.0, h)]).unwrap();
        let c = canonical_phase(&u, &t).unwrap();
        assert!((c.amplitudes()[0] - Complex::new(h, 0.0)).norm() < 1e-15);
        assert!((c.amplitudes()[1] - Complex::new(h, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn permutations_and_phases_preserve_cardinality() {
        let q = classical_qls(&cyclic_ls(5));
        let p = q.permute_rows(&[3, 1, 4, 0, 2]).permute_cols(&[1, 0, 2, 4, 3]);
        assert!(p.verify(&tol()).pass);
        assert_eq!(qls_cardinality(&p, &tol()).unwrap().c, 5);
        let r = q.with_cell_phase(2, 3, 1.234);
        let a = qls_cardinality(&q, &tol()).unwrap();
        let b = qls_cardinality(&r, &tol()).unwrap();
        assert_eq!(a.groups, b.groups);
    }

    #[test]
    fn histogram() {
        let rep = qls_cardinality(&classical_qls(&cyclic_ls(4)), &tol()).unwrap();
        assert_eq!(rep.class_size_histogram(), vec![0, 0, 0, 4]);
        assert_eq!(rep.min_same_overlap, 1.0);
        assert_eq!(rep.max_distinct_overlap, 0.0);
    }
}
