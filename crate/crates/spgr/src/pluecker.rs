//! Points of `Gr(d, 2n)` and flags as exact matrices, Plücker coordinate
//! evaluation, standardized chart presentations, the symplectic pairing, and
//! sparse degree-1 sections in Plücker coordinates.

use crate::combinat::IndexSet;
use crate::linalg::{parse_rat, Rat, RatMatrix};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A point of `Gr(d, 2n)` presented as a full-column-rank `2n x d` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceMatrix {
    mat: RatMatrix,
}

impl SubspaceMatrix {
    /// Wraps a presentation matrix; requires even row count, `d <= 2n`, and
    /// full column rank.
    pub fn new(mat: RatMatrix) -> Result<Self> {
        if mat.rows() == 0 || mat.rows() % 2 != 0 {
            return Err(Error::ShapeMismatch(format!(
                "ambient dimension must be even and positive, got {}",
                mat.rows()
            )));
        }
        if mat.cols() > mat.rows() {
            return Err(Error::ShapeMismatch(format!(
                "more columns ({}) than rows ({})",
                mat.cols(),
                mat.rows()
            )));
        }
        if mat.rank() != mat.cols() {
            return Err(Error::Singular(
                "presentation matrix does not have full column rank".into(),
            ));
        }
        Ok(SubspaceMatrix { mat })
    }

    /// The coordinate point `e_i`: columns are standard basis vectors.
    pub fn coordinate_point(i: &IndexSet) -> Self {
        let mut mat = RatMatrix::zeros(i.two_n(), i.len());
        for (c, &row) in i.entries().iter().enumerate() {
            *mat.at_mut(row - 1, c) = Rat::one();
        }
        SubspaceMatrix { mat }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.mat
    }

    pub fn two_n(&self) -> usize {
        self.mat.rows()
    }

    pub fn n(&self) -> usize {
        self.mat.rows() / 2
    }

    pub fn d(&self) -> usize {
        self.mat.cols()
    }

    fn check_index(&self, i: &IndexSet) -> Result<()> {
        if i.two_n() != self.two_n() {
            return Err(Error::AmbientMismatch {
                left: i.two_n(),
                right: self.two_n(),
            });
        }
        if i.len() != self.d() {
            return Err(Error::CardinalityMismatch {
                left: i.len(),
                right: self.d(),
            });
        }
        Ok(())
    }

    /// The Plücker coordinate `p_i`: the minor on rows `i`.
    pub fn plucker(&self, i: &IndexSet) -> Result<Rat> {
        self.check_index(i)?;
        self.mat.minor_rows(i.entries())
    }

    /// Returns the presentation `M * (M_j)^{-1}` whose row-`j` block is the
    /// identity. Fails outside the chart `A_j` (that is, when `p_j = 0`).
    pub fn standardize(&self, j: &IndexSet) -> Result<SubspaceMatrix> {
        self.check_index(j)?;
        let d = self.d();
        let block = RatMatrix::from_fn(d, d, |r, c| self.mat.at(j.entries()[r] - 1, c).clone());
        let inv = block
            .inverse()
            .map_err(|_| Error::Singular(format!("point lies outside chart A_{j}")))?;
        Ok(SubspaceMatrix {
            mat: self.mat.mul(&inv)?,
        })
    }

    /// The symplectic pairing `C(M, s, t) = c_s^T J c_t` of two 1-based
    /// columns, with `J` carrying `+1` on the upper anti-diagonal block.
    pub fn pairing(&self, s: usize, t: usize) -> Result<Rat> {
        let d = self.d();
        if s < 1 || t < 1 || s > d || t > d {
            return Err(Error::InvalidArgument(format!(
                "columns must lie in [1, {d}], got ({s},{t})"
            )));
        }
        let two_n = self.two_n();
        let mut acc = Rat::zero();
        for k in 1..=self.n() {
            let a = self.mat.at(k - 1, s - 1) * self.mat.at(two_n - k, t - 1);
            let b = self.mat.at(two_n - k, s - 1) * self.mat.at(k - 1, t - 1);
            acc += a - b;
        }
        Ok(acc)
    }

    /// True iff the pairing vanishes on every column pair.
    pub fn is_isotropic(&self) -> bool {
        let d = self.d();
        for s in 1..=d {
            for t in s + 1..=d {
                if !self.pairing(s, t).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// The standard symplectic form as a stored matrix; the pairing formula is
/// the primary route, this exists to pin the sign convention in tests.
pub fn symplectic_form_matrix(two_n: usize) -> RatMatrix {
    let n = two_n / 2;
    let mut j = RatMatrix::zeros(two_n, two_n);
    for k in 1..=n {
        *j.at_mut(k - 1, two_n - k) = Rat::one();
        *j.at_mut(two_n - k, k - 1) = -Rat::one();
    }
    j
}

/// A flag presentation: `2n x n` matrix whose column prefixes present the
/// nested subspaces `V_d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagMatrix {
    mat: RatMatrix,
}

impl FlagMatrix {
    /// Requires every column prefix to have full rank.
    pub fn new(mat: RatMatrix) -> Result<Self> {
        if mat.rows() == 0 || mat.rows() % 2 != 0 || mat.cols() != mat.rows() / 2 {
            return Err(Error::ShapeMismatch(format!(
                "flag presentation must be 2n x n, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        for d in 1..=mat.cols() {
            let prefix = RatMatrix::from_fn(mat.rows(), d, |r, c| mat.at(r, c).clone());
            if prefix.rank() != d {
                return Err(Error::Singular(format!(
                    "column prefix {d} is rank-deficient"
                )));
            }
        }
        Ok(FlagMatrix { mat })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.mat
    }

    pub fn n(&self) -> usize {
        self.mat.cols()
    }

    pub fn two_n(&self) -> usize {
        self.mat.rows()
    }

    /// The point of `Gr(d, 2n)` spanned by the first `d` columns.
    pub fn prefix(&self, d: usize) -> Result<SubspaceMatrix> {
        if d == 0 || d > self.n() {
            return Err(Error::InvalidArgument(format!(
                "prefix length must lie in [1, {}], got {d}",
                self.n()
            )));
        }
        let mat = RatMatrix::from_fn(self.two_n(), d, |r, c| self.mat.at(r, c).clone());
        SubspaceMatrix::new(mat)
    }
}

/// A sparse degree-1 section in Plücker coordinates: a finite sum
/// `Σ coeff · p_index` over `d`-subsets of `{1,..,2n}`.
///
/// Terms iterate in lexicographic index order; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSection {
    d: usize,
    two_n: usize,
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl LinearSection {
    pub fn zero(d: usize, two_n: usize) -> Self {
        LinearSection {
            d,
            two_n,
            terms: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn two_n(&self) -> usize {
        self.two_n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff * p_index`, merging and dropping exact zeros.
    pub fn add_term(&mut self, index: &IndexSet, coeff: Rat) -> Result<()> {
        if index.two_n() != self.two_n {
            return Err(Error::AmbientMismatch {
                left: index.two_n(),
                right: self.two_n,
            });
        }
        if index.len() != self.d {
            return Err(Error::CardinalityMismatch {
                left: index.len(),
                right: self.d,
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let key = index.entries().to_vec();
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(index.entries());
        }
        Ok(())
    }

    /// Terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &Rat)> {
        self.terms.iter().map(|(k, v)| {
            (
                IndexSet::new(k.clone(), self.two_n).expect("stored keys are valid"),
                v,
            )
        })
    }

    pub fn coeff(&self, index: &IndexSet) -> Rat {
        self.terms
            .get(index.entries())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, factor: &Rat) -> LinearSection {
        if factor.is_zero() {
            return LinearSection::zero(self.d, self.two_n);
        }
        LinearSection {
            d: self.d,
            two_n: self.two_n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &LinearSection) -> Result<LinearSection> {
        if self.d != other.d || self.two_n != other.two_n {
            return Err(Error::ShapeMismatch(format!(
                "section shapes ({},{}) vs ({},{})",
                self.d, self.two_n, other.d, other.two_n
            )));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let entry = out.terms.entry(k.clone()).or_insert_with(Rat::zero);
            *entry += v;
            if entry.is_zero() {
                out.terms.remove(k);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinearSection) -> Result<LinearSection> {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Evaluates the section at a point: `Σ coeff · p_index(v)`.
    pub fn evaluate(&self, v: &SubspaceMatrix) -> Result<Rat> {
        if v.two_n() != self.two_n || v.d() != self.d {
            return Err(Error::ShapeMismatch(format!(
                "section over ({}, {}) evaluated at point of shape ({}, {})",
                self.d,
                self.two_n,
                v.d(),
                v.two_n()
            )));
        }
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            acc += c * v.matrix().minor_rows(k)?;
        }
        Ok(acc)
    }

    /// The coefficient vector over all of `I_{d,2n}` in lexicographic order.
    pub fn coefficient_vector(&self) -> Result<Vec<Rat>> {
        let all = crate::combinat::enumerate_indices(self.d, self.two_n, false, None)?;
        Ok(all.iter().map(|i| self.coeff(i)).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SectionJson::from(self)).expect("section serializes")
    }

    pub fn from_json(text: &str) -> Result<LinearSection> {
        let raw: SectionJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad section JSON: {e}")))?;
        raw.try_into()
    }
}

impl fmt::Debug for LinearSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx: String = k.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                if c.is_one() {
                    format!("p[{idx}]")
                } else if (-c).is_one() {
                    format!("-p[{idx}]")
                } else {
                    format!("{c}*p[{idx}]")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct SectionTermJson {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SectionJson {
    d: usize,
    two_n: usize,
    terms: Vec<SectionTermJson>,
}

impl From<&LinearSection> for SectionJson {
    fn from(s: &LinearSection) -> Self {
        SectionJson {
            d: s.d,
            two_n: s.two_n,
            terms: s
                .terms
                .iter()
                .map(|(k, v)| SectionTermJson {
                    index: k.clone(),
                    coeff: v.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SectionJson> for LinearSection {
    type Error = Error;

    fn try_from(raw: SectionJson) -> Result<LinearSection> {
        let mut out = LinearSection::zero(raw.d, raw.two_n);
        for term in raw.terms {
            let idx = IndexSet::new(term.index, raw.two_n)?;
            out.add_term(&idx, parse_rat(&term.coeff)?)?;
        }
        Ok(out)
    }
}

/// Rows = sample points, columns = `I_{d,2n}` in lexicographic order,
/// entries = Plücker values. The right kernel is the space of degree-1
/// sections vanishing on the whole sample.
pub fn evaluation_matrix(points: &[SubspaceMatrix], d: usize, two_n: usize) -> Result<RatMatrix> {
    let columns = crate::combinat::enumerate_indices(d, two_n, false, None)?;
    let mut rows = Vec::with_capacity(points.len());
    for p in points {
        if p.d() != d || p.two_n() != two_n {
            return Err(Error::ShapeMismatch(format!(
                "point of shape ({}, {}) in evaluation over ({d}, {two_n})",
                p.d(),
                p.two_n()
            )));
        }
        let mut row = Vec::with_capacity(columns.len());
        for i in &columns {
            row.push(p.plucker(i)?);
        }
        rows.push(row);
    }
    RatMatrix::from_rows(rows)
}
