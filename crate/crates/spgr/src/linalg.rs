//! Exact rational matrices: fraction-free Bareiss determinants, minors,
//! rank, right kernels, and seeded random solutions of linear systems.
//!
//! No floating point anywhere; every verdict is an exact [`Rat`].

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use std::fmt;

/// Arbitrary-precision rational, always reduced, positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|e| Error::Parse(format!("bad numerator {num:?}: {e}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|e| Error::Parse(format!("bad denominator {d:?}: {e}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RatMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                acc += self.at(r, k) * other.at(k, c);
            }
            acc
        }))
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} cols onto {} cols",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// Rows are scaled to integers first so all intermediate divisions are
    /// exact integer divisions; the scale is divided back out at the end.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "determinant of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        // clear denominators row by row
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut scale = BigInt::one();
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = lcm.lcm(self.at(r, c).denom());
            }
            m.push(
                (0..n)
                    .map(|c| {
                        let v = self.at(r, c);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect(),
            );
            scale *= lcm;
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(piv) => {
                        m.swap(k, piv);
                        sign = -sign;
                    }
                    None => return Ok(Rat::zero()),
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = &m[r][c] * &m[k][k] - &m[r][k] * &m[k][c];
                    // Bareiss division is exact in the integers
                    m[r][c] = num / &prev;
                }
                m[r][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = Rat::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }

    /// Cofactor-expansion determinant; cross-check oracle for small sizes.
    pub fn det_cofactor(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "determinant of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        fn go(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> Rat {
            if rows.is_empty() {
                return Rat::one();
            }
            let r = rows[0];
            let rest: Vec<usize> = rows[1..].to_vec();
            let mut acc = Rat::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.at(r, c);
                if entry.is_zero() {
                    continue;
                }
                let sub: Vec<usize> = cols
                    .iter()
                    .copied()
                    .filter(|&cc| cc != c)
                    .collect();
                let term = entry * go(m, &rest, &sub);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(go(self, &all, &all))
    }

    /// Determinant of the submatrix on the given 1-based rows (all columns).
    pub fn minor_rows(&self, row_set: &[usize]) -> Result<Rat> {
        if row_set.len() != self.cols {
            return Err(Error::CardinalityMismatch {
                left: row_set.len(),
                right: self.cols,
            });
        }
        for &r in row_set {
            if r < 1 || r > self.rows {
                return Err(Error::InvalidArgument(format!(
                    "row index {r} out of range 1..={}",
                    self.rows
                )));
            }
        }
        let sub = RatMatrix::from_fn(row_set.len(), self.cols, |r, c| {
            self.at(row_set[r] - 1, c).clone()
        });
        sub.det()
    }

    /// Reduced row echelon form; returns (matrix, pivot columns).
    fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let piv = match (r..m.rows).find(|&rr| !m.at(rr, c).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            for cc in 0..m.cols {
                let tmp = m.at(piv, cc).clone();
                *m.at_mut(piv, cc) = m.at(r, cc).clone();
                *m.at_mut(r, cc) = tmp;
            }
            let inv = m.at(r, c).recip();
            for cc in 0..m.cols {
                let v = m.at(r, cc) * &inv;
                *m.at_mut(r, cc) = v;
            }
            for rr in 0..m.rows {
                if rr != r && !m.at(rr, c).is_zero() {
                    let f = m.at(rr, c).clone();
                    for cc in 0..m.cols {
                        let v = m.at(rr, cc) - &f * m.at(r, cc);
                        *m.at_mut(rr, cc) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::zero(); self.cols];
                v[fc] = Rat::one();
                for (ri, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.at(ri, fc).clone();
                }
                v
            })
            .collect()
    }

    /// One particular solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = RatMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = m.at(ri, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = RatMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular("matrix not invertible".into()));
        }
        Ok(RatMatrix::from_fn(n, n, |r, c| m.at(r, n + c).clone()))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Random element of the solution set of `a * x = b`: a particular solution
/// plus a random integer combination (coefficients in `[-bound, bound]`) of
/// the kernel basis. Deterministic given the caller's RNG state.
pub fn random_solution(
    a: &RatMatrix,
    b: &[Rat],
    rng: &mut impl Rng,
    bound: i64,
) -> Result<Vec<Rat>> {
    let particular = a.solve(b)?.ok_or(Error::InconsistentSystem)?;
    let kernel = a.kernel_basis();
    let coeffs: Vec<Rat> = (0..kernel.len())
        .map(|_| rat(rng.gen_range(-bound..=bound)))
        .collect();
    let mut x = particular;
    for (c, k) in coeffs.iter().zip(&kernel) {
        for (xi, ki) in x.iter_mut().zip(k) {
            *xi += c * ki;
        }
    }
    Ok(x)
}
