//! Dense linear algebra over ℚ: row reduction, particular solutions and
//! span membership.

use num_traits::Zero;

use super::rational::Rational;

/// Row-reduced echelon form of a matrix together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

/// Reduces `rows` (all of length `cols`) to reduced row echelon form.
/// Pivots are chosen on the earliest possible columns.
pub fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

/// Solves `A·x = b`, where `a` is given row by row with `cols` columns.
/// Free variables are set to zero, so the result is the particular solution
/// supported on the earliest pivot columns. Returns `None` when the system
/// is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let augmented: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.resize(cols, Rational::zero());
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = rref(augmented, cols + 1);
    if ech.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// A basis of `{x : A·x = 0}`, one vector per free column.
pub fn nullspace(a: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let ech = rref(a.to_vec(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::from_integer(1.into());
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn rank(vectors: &[Vec<Rational>], cols: usize) -> usize {
    rref(vectors.to_vec(), cols).pivots.len()
}

/// True when the vectors are linearly independent.
pub fn independent(vectors: &[Vec<Rational>], cols: usize) -> bool {
    rank(vectors, cols) == vectors.len()
}

/// A subspace of ℚⁿ kept in reduced echelon form for fast membership tests.
#[derive(Debug, Clone)]
pub struct Span {
    dim: usize,
    basis: Echelon,
}

impl Span {
    pub fn new(vectors: &[Vec<Rational>], dim: usize) -> Self {
        let padded: Vec<Vec<Rational>> = vectors
            .iter()
            .map(|v| {
                let mut v = v.clone();
                v.resize(dim, Rational::zero());
                v
            })
            .collect();
        Span {
            dim,
            basis: rref(padded, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Tests membership by clearing each pivot coordinate in turn.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w: Vec<Rational> = v.to_vec();
        w.resize(self.dim.max(v.len()), Rational::zero());
        if w[self.dim..].iter().any(|x| !x.is_zero()) {
            return false;
        }
        for (row, &p) in self.basis.rows.iter().zip(&self.basis.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                *x -= &factor * y;
            }
        }
        w.iter().all(Zero::is_zero)
    }
}
