//! Dense matrices over ℚ and exact linear solving.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = QMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        let mut m = QMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.nonzeros() {
            m.set(c, r, v.clone());
        }
        m
    }

    pub fn scale(&self, k: &Q) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &QMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product; index `(a, b)` maps to `a * other.rows + b`.
    pub fn kron(&self, other: &QMatrix) -> Self {
        let mut m = QMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1, v1) in self.nonzeros() {
            for (r2, c2, v2) in other.nonzeros() {
                m.set(r1 * other.rows + r2, c1 * other.cols + c2, v1 * v2);
            }
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzeros().all(|(r, c, _)| r == c)
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimensions");
        let mut m = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] += a * b;
                    }
                }
            }
        }
        m
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `A x = b` exactly. Free variables are set to zero; `None` if inconsistent.
pub fn solve(a: &QMatrix, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.rows(), b.len());
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Q> = (0..cols).map(|c| a.get(r, c).clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        let Some(p) = (pr..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pr, p);
        let inv = m[pr][c].recip();
        for v in m[pr].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pr && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                let pivot = m[pr].clone();
                for (v, p) in m[r].iter_mut().zip(&pivot).skip(c) {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    if m[pr..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_consistent_and_inconsistent() {
        let mut a = QMatrix::zeros(2, 2);
        a.set(0, 0, q_int(2));
        a.set(0, 1, q_int(1));
        a.set(1, 0, q_int(1));
        a.set(1, 1, q_int(3));
        let x = solve(&a, &[q_int(3), q_int(4)]).unwrap();
        assert_eq!(x, vec![q_int(1), q_int(1)]);

        let mut s = QMatrix::zeros(2, 2);
        s.set(0, 0, q_int(1));
        s.set(1, 0, q_int(1));
        assert!(solve(&s, &[q_int(1), q_int(2)]).is_none());
        assert_eq!(solve(&s, &[q_int(1), q_int(1)]).unwrap(), vec![q_int(1), q_int(0)]);
    }

    #[test]
    fn kron_and_commutator() {
        let i2 = QMatrix::identity(2);
        let k = i2.kron(&i2);
        assert_eq!(k, QMatrix::identity(4));
        let mut e = QMatrix::zeros(2, 2);
        e.set(1, 0, q_int(1));
        let f = e.transpose();
        // [E,F] for the 2x2 elementary raising/lowering pair
        let h = e.commutator(&f);
        assert_eq!(h, QMatrix::diagonal(&[q_int(-1), q_int(1)]));
    }
}
