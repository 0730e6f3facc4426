//! Sparse multivariate polynomials over exact rationals.
//!
//! Small by design: the symbolic identity checks only ever see matrices of
//! size at most 8 and a few dozen chart variables, so cofactor expansion and
//! naive term-by-term multiplication are the right tools.

use crate::linalg::Rat;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rat) -> Self {
        let mut p = MPoly::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(vec![0; nvars], value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rat::one())
    }

    /// The variable `x_k` (0-based).
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[k] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(exp, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_arity(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ShapeMismatch(format!(
                "polynomial arity {} vs {}",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    fn insert(&mut self, exp: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> MPoly {
        if factor.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_arity(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exp, ca * cb);
            }
        }
        Ok(out)
    }

    /// Substitutes rational values for all variables.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "eval point arity {} vs {}",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Rat::zero();
        for (exp, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exp) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(k, &p)| {
                        if p == 1 {
                            format!("x{k}")
                        } else {
                            format!("x{k}^{p}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else if (-c).is_one() {
                    format!("-{}", vars.join("*"))
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exact symbolic determinant of a square matrix of polynomials, by
/// cofactor expansion along the sparsest available structure (first row).
pub fn poly_det(matrix: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::ShapeMismatch("empty matrix".into()));
    }
    let nvars = matrix[0][0].nvars();
    for row in matrix {
        if row.len() != n {
            return Err(Error::ShapeMismatch("non-square polynomial matrix".into()));
        }
        for p in row {
            if p.nvars() != nvars {
                return Err(Error::ShapeMismatch("mixed polynomial arities".into()));
            }
        }
    }
    fn go(m: &[Vec<MPoly>], rows: &[usize], cols: &[usize], nvars: usize) -> Result<MPoly> {
        if rows.is_empty() {
            return Ok(MPoly::one(nvars));
        }
        let r = rows[0];
        let rest = &rows[1..];
        let mut acc = MPoly::zero(nvars);
        for (k, &c) in cols.iter().enumerate() {
            let entry = &m[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
            let cof = go(m, rest, &sub, nvars)?;
            let term = entry.mul(&cof)?;
            acc = if k % 2 == 0 {
                acc.add(&term)?
            } else {
                acc.sub(&term)?
            };
        }
        Ok(acc)
    }
    let all: Vec<usize> = (0..n).collect();
    go(matrix, &all, &all, nvars)
}
