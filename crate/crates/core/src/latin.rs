//! Latin squares, idempotent Latin squares and orthogonal pairs.
//!
//! All checks here are exact integer logic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The first constraint a candidate Latin square (or pair) breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatinViolation {
    Empty,
    Ragged { row: usize, len: usize, order: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    RowRepeat { row: usize, value: usize },
    ColumnRepeat { col: usize, value: usize },
    OrderMismatch { first: usize, second: usize },
    PairRepeat { first: usize, second: usize },
    NotIdempotent { index: usize, value: usize },
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LatinViolation::*;
        match self {
            Empty => write!(f, "square has no rows"),
            Ragged { row, len, order } => write!(f, "row {row} has {len} cells, expected {order}"),
            OutOfRange { row, col, value } => write!(f, "cell ({row}, {col}) holds {value}, outside the symbol range"),
            RowRepeat { row, value } => write!(f, "row {row} repeats {value}"),
            ColumnRepeat { col, value } => write!(f, "column {col} repeats {value}"),
            OrderMismatch { first, second } => write!(f, "pair mixes orders {first} and {second}"),
            PairRepeat { first, second } => write!(f, "ordered pair ({first}, {second}) occurs more than once"),
            NotIdempotent { index, value } => write!(f, "diagonal cell {index} holds {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<Vec<usize>>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<usize>>) -> std::result::Result<Self, LatinViolation> {
        check_cells(&cells)?;
        Ok(LatinSquare {
            order: cells.len(),
            cells,
        })
    }

    fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let cells = (0..order).map(|i| (0..order).map(|j| f(i, j)).collect()).collect();
        LatinSquare { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|i| self.cells[i][i] == i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OlsPair {
    first: LatinSquare,
    second: LatinSquare,
}

impl OlsPair {
    pub fn new(first: LatinSquare, second: LatinSquare) -> std::result::Result<Self, LatinViolation> {
        check_orthogonal(&first, &second)?;
        Ok(OlsPair { first, second })
    }

    pub fn order(&self) -> usize {
        self.first.order
    }

    pub fn first(&self) -> &LatinSquare {
        &self.first
    }

    pub fn second(&self) -> &LatinSquare {
        &self.second
    }
}

fn check_cells(cells: &[Vec<usize>]) -> std::result::Result<(), LatinViolation> {
    let v = cells.len();
    if v == 0 {
        return Err(LatinViolation::Empty);
    }
    for (row, r) in cells.iter().enumerate() {
        if r.len() != v {
            return Err(LatinViolation::Ragged { row, len: r.len(), order: v });
        }
        let mut seen = vec![false; v];
        for (col, &value) in r.iter().enumerate() {
            if value >= v {
                return Err(LatinViolation::OutOfRange { row, col, value });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(LatinViolation::RowRepeat { row, value });
            }
        }
    }
    for col in 0..v {
        let mut seen = vec![false; v];
        for r in cells {
            if std::mem::replace(&mut seen[r[col]], true) {
                return Err(LatinViolation::ColumnRepeat { col, value: r[col] });
            }
        }
    }
    Ok(())
}

fn check_orthogonal(a: &LatinSquare, b: &LatinSquare) -> std::result::Result<(), LatinViolation> {
    if a.order != b.order {
        return Err(LatinViolation::OrderMismatch { first: a.order, second: b.order });
    }
    let t = a.order;
    let mut seen = vec![false; t * t];
    for i in 0..t {
        for j in 0..t {
            let (x, y) = (a.cells[i][j], b.cells[i][j]);
            if std::mem::replace(&mut seen[x * t + y], true) {
                return Err(LatinViolation::PairRepeat { first: x, second: y });
            }
        }
    }
    Ok(())
}

/// Validates raw cells without constructing a [`LatinSquare`].
pub fn validate_ls(cells: &[Vec<usize>]) -> std::result::Result<(), LatinViolation> {
    check_cells(cells)
}

/// Both components must be Latin squares and jointly cover every ordered pair.
pub fn validate_ols(first: &[Vec<usize>], second: &[Vec<usize>]) -> std::result::Result<(), LatinViolation> {
    check_cells(first)?;
    check_cells(second)?;
    let a = LatinSquare { order: first.len(), cells: first.to_vec() };
    let b = LatinSquare { order: second.len(), cells: second.to_vec() };
    check_orthogonal(&a, &b)
}

/// `L(i, j) = (i + j) mod v`.
pub fn cyclic_ls(v: usize) -> LatinSquare {
    assert!(v >= 1);
    LatinSquare::from_fn(v, |i, j| (i + j) % v)
}

/// `L(i, j) = (i + j + 1) mod v`, which puts `v - 1` in the bottom-right cell.
pub fn corner_ls(v: usize) -> LatinSquare {
    assert!(v >= 1);
    LatinSquare::from_fn(v, |i, j| (i + j + 1) % v)
}

// Found by backtracking search; each is checked in the tests below.
const IDEMPOTENT_4: [[usize; 4]; 4] = [[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]];
const IDEMPOTENT_6: [[usize; 6]; 6] = [
    [0, 2, 1, 4, 5, 3],
    [2, 1, 3, 5, 0, 4],
    [4, 5, 2, 0, 3, 1],
    [1, 4, 5, 3, 2, 0],
    [5, 3, 0, 1, 4, 2],
    [3, 0, 4, 2, 1, 5],
];
const IDEMPOTENT_8: [[usize; 8]; 8] = [
    [0, 2, 1, 4, 3, 6, 7, 5],
    [2, 1, 0, 5, 6, 7, 3, 4],
    [1, 0, 2, 6, 7, 4, 5, 3],
    [4, 5, 7, 3, 0, 1, 2, 6],
    [3, 6, 5, 7, 4, 0, 1, 2],
    [6, 7, 3, 0, 2, 5, 4, 1],
    [7, 3, 4, 1, 5, 2, 6, 0],
    [5, 4, 6, 2, 1, 3, 0, 7],
];
const IDEMPOTENT_10: [[usize; 10]; 10] = [
    [0, 2, 1, 4, 3, 6, 5, 8, 9, 7],
    [2, 1, 0, 5, 6, 3, 4, 9, 7, 8],
    [1, 0, 2, 6, 7, 8, 9, 3, 4, 5],
    [4, 5, 6, 3, 8, 9, 7, 0, 1, 2],
    [3, 6, 5, 9, 4, 7, 8, 1, 2, 0],
    [6, 3, 7, 8, 9, 5, 1, 2, 0, 4],
    [5, 8, 9, 7, 0, 2, 6, 4, 3, 1],
    [8, 9, 3, 0, 1, 4, 2, 7, 5, 6],
    [9, 7, 4, 2, 5, 1, 0, 6, 8, 3],
    [7, 4, 8, 1, 2, 0, 3, 5, 6, 9],
];
const IDEMPOTENT_12: [[usize; 12]; 12] = [
    [0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 11, 9],
    [2, 1, 0, 5, 6, 3, 4, 9, 10, 11, 7, 8],
    [1, 0, 2, 6, 5, 4, 3, 10, 11, 8, 9, 7],
    [4, 5, 6, 3, 0, 1, 2, 11, 9, 7, 8, 10],
    [3, 7, 8, 9, 4, 10, 11, 0, 1, 2, 5, 6],
    [6, 8, 7, 10, 11, 5, 9, 1, 0, 3, 2, 4],
    [5, 9, 10, 7, 8, 11, 6, 2, 3, 0, 4, 1],
    [8, 3, 4, 11, 1, 9, 10, 7, 2, 5, 6, 0],
    [7, 10, 11, 0, 9, 2, 1, 4, 8, 6, 3, 5],
    [10, 11, 5, 8, 2, 0, 7, 6, 4, 9, 1, 3],
    [11, 6, 9, 1, 7, 8, 0, 3, 5, 4, 10, 2],
    [9, 4, 3, 2, 10, 7, 8, 5, 6, 1, 0, 11],
];

fn from_table<const N: usize>(t: &[[usize; N]; N]) -> LatinSquare {
    LatinSquare {
        order: N,
        cells: t.iter().map(|r| r.to_vec()).collect(),
    }
}

/// An idempotent Latin square (`L(i, i) = i`).
///
/// Odd orders use `L(i, j) = ((v + 1) / 2)(i + j) mod v`; even orders up to
/// 12 come from fixed tables. Order 2 has no idempotent square.
pub fn idempotent_ls(v: usize) -> Result<LatinSquare> {
    match v {
        0 => Err(Error::UnsupportedOrder { order: 0, reason: "empty square".into() }),
        2 => Err(Error::UnsupportedOrder {
            order: 2,
            reason: "no idempotent Latin square of order 2 exists".into(),
        }),
        4 => Ok(from_table(&IDEMPOTENT_4)),
        6 => Ok(from_table(&IDEMPOTENT_6)),
        8 => Ok(from_table(&IDEMPOTENT_8)),
        10 => Ok(from_table(&IDEMPOTENT_10)),
        12 => Ok(from_table(&IDEMPOTENT_12)),
        v if v % 2 == 1 => {
            let h = (v + 1) / 2;
            Ok(LatinSquare::from_fn(v, |i, j| h * (i + j) % v))
        }
        v => Err(Error::UnsupportedOrder {
            order: v,
            reason: "even idempotent squares above 12 are not built in; supply one from a file".into(),
        }),
    }
}

/// Multiplication in GF(2^k) with the given reduction polynomial (bit k set).
fn gf_mul(mut a: usize, mut b: usize, k: u32, poly: usize) -> usize {
    let mut out = 0;
    while b != 0 {
        if b & 1 == 1 {
            out ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & (1 << k) != 0 {
            a ^= poly;
        }
    }
    out
}

/// `(x + y, a x + y)` over GF(2^k), `a` the class of the indeterminate.
fn field_pair(k: u32, poly: usize) -> OlsPair {
    let q = 1usize << k;
    OlsPair {
        first: LatinSquare::from_fn(q, |x, y| x ^ y),
        second: LatinSquare::from_fn(q, |x, y| gf_mul(2, x, k, poly) ^ y),
    }
}

fn odd_pair(t: usize) -> OlsPair {
    OlsPair {
        first: LatinSquare::from_fn(t, |i, j| (i + j) % t),
        second: LatinSquare::from_fn(t, |i, j| (i + 2 * j) % t),
    }
}

fn product_square(a: &LatinSquare, b: &LatinSquare) -> LatinSquare {
    let (p, q) = (a.order, b.order);
    LatinSquare::from_fn(p * q, |i, j| a.get(i / q, j / q) * q + b.get(i % q, j % q))
}

fn product_pair(a: &OlsPair, b: &OlsPair) -> OlsPair {
    OlsPair {
        first: product_square(&a.first, &b.first),
        second: product_square(&a.second, &b.second),
    }
}

/// A pair of orthogonal Latin squares of order `t`.
///
/// Covers every `t >= 3` with `t mod 4 != 2`: odd orders by a linear formula,
/// 4 and 8 by finite-field squares, and the rest as products of those.
pub fn ols_pair(t: usize) -> Result<OlsPair> {
    if t == 2 || t == 6 {
        return Err(Error::UnsupportedOrder {
            order: t,
            reason: "no pair of orthogonal Latin squares exists".into(),
        });
    }
    if t < 3 {
        return Err(Error::UnsupportedOrder { order: t, reason: "order too small".into() });
    }
    if t % 4 == 2 {
        return Err(Error::UnsupportedOrder {
            order: t,
            reason: "orders congruent to 2 mod 4 are not built in; supply a pair from a file".into(),
        });
    }
    let mut twos = t.trailing_zeros();
    let odd = t >> twos;
    let mut pair = if odd > 1 { Some(odd_pair(odd)) } else { None };
    while twos > 0 {
        // 2^k with k >= 2 splits into factors 4 and 8 only
        let step = if twos == 3 || twos >= 5 { 3 } else { 2 };
        let f = if step == 3 { field_pair(3, 0b1011) } else { field_pair(2, 0b111) };
        pair = Some(match pair {
            None => f,
            Some(p) => product_pair(&p, &f),
        });
        twos -= step;
    }
    Ok(pair.expect("t >= 3 has a nontrivial factor"))
}
