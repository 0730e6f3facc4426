//! Counts of surviving local equations on Schubert varieties,
//! complete-intersection criteria, and the tangent-space smoothness
//! analysis at the identity coset.
//!
//! Closed forms are always paired with their brute-force route: the
//! classification driver asserts every cross-check and aborts on the first
//! offending index.

use crate::combinat::{enumerate_indices, FlagWord, IndexSet};
use crate::equations::restriction_zero;
use crate::linalg::{Rat, RatMatrix};
use crate::{binomial, Error, Result};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// `N_{j,i}`: the number of pairs `s < t` whose section
/// `E_{j \ {j_s, j_t}}` survives restriction to `X^A(i)`.
pub fn count_nonzero(j: &IndexSet, i: &IndexSet) -> Result<usize> {
    if !j.is_symplectic() {
        return Err(Error::NotSymplectic(j.to_string()));
    }
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    if !j.bruhat_leq(i)? {
        return Err(Error::InvalidArgument(format!(
            "need j <= i in Bruhat order, got j = {j}, i = {i}"
        )));
    }
    let d = j.len();
    let mut count = 0;
    for s in 1..=d {
        for t in s + 1..=d {
            if !restriction_zero(&j.remove_positions(s, t)?, i)? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `#{s < t : i_s + i_t > 2n}`; equals the codimension of `X^C(i)` in
/// `X^A(i)`.
pub fn codim_pairs(i: &IndexSet) -> Result<usize> {
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    let e = i.entries();
    let two_n = i.two_n();
    let mut count = 0;
    for s in 0..e.len() {
        for t in s + 1..e.len() {
            if e[s] + e[t] > two_n {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `min{a : i_a >= a + 1}`, 1-based; `None` on the staircase.
pub fn first_excess(i: &IndexSet) -> Option<usize> {
    i.entries()
        .iter()
        .enumerate()
        .find(|(k, &v)| v >= k + 2)
        .map(|(k, _)| k + 1)
}

/// `min{a : i_a >= a + 2}`, 1-based; `None` when no entry exceeds its slot
/// by two (treated as infinity in the closed form).
pub fn second_excess(i: &IndexSet) -> Option<usize> {
    i.entries()
        .iter()
        .enumerate()
        .find(|(k, &v)| v >= k + 3)
        .map(|(k, _)| k + 1)
}

/// `q = 2n + 1 - i_d`.
pub fn tail_gap(i: &IndexSet) -> Result<usize> {
    match i.entries().last() {
        Some(&last) => Ok(i.two_n() + 1 - last),
        None => Err(Error::InvalidArgument("empty index set".into())),
    }
}

/// Closed form for `N_{id,i}` when `N_{i,i} > 0`:
/// `C(d - (r1-1), 2) - C(min{r2, q} - (r1-1), 2)`.
///
/// The subtrahend counts the section pairs killed by the staircase head: a
/// pair survives iff it does not remove two values `<= min{r2, q}` (after
/// shifting away the common prefix of length `r1 - 1`).
pub fn n_id_closed_form(i: &IndexSet) -> Result<usize> {
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    if count_nonzero(i, i)? == 0 {
        return Err(Error::InvalidArgument(format!(
            "closed form needs N_(i,i) > 0, but every section dies on {i}"
        )));
    }
    let d = i.len();
    let r1 = first_excess(i).expect("N_(i,i) > 0 rules out the staircase");
    let q = tail_gap(i)?;
    let cutoff = match second_excess(i) {
        Some(r2) => r2.min(q),
        None => q,
    };
    Ok(binomial(d - (r1 - 1), 2) - binomial(cutoff - (r1 - 1), 2))
}

/// Local-complete-intersection test: `i_s + i_t > 2n` for all
/// `r1 <= s < t <= d`. When no section survives at all (`N_{i,i} = 0`,
/// i.e. `X^C(i) = X^A(i)`) this is vacuously true.
pub fn is_lci(i: &IndexSet) -> Result<bool> {
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    if codim_pairs(i)? == 0 {
        return Ok(true);
    }
    let r1 = first_excess(i).expect("codim > 0 rules out the staircase");
    let e = i.entries();
    let two_n = i.two_n();
    for s in r1..=e.len() {
        for t in s + 1..=e.len() {
            if e[s - 1] + e[t - 1] <= two_n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Flag-level local-complete-intersection test: the sorted value set must
/// match `(1, .., r1-1, n, n+2, .., 2n+1-r1)` for
/// `r1 = min{a <= n : a not in w}`; the full staircase (no such `a`) is the
/// degenerate `X^C = X^A` case. The pattern is itself symplectic, so a
/// non-symplectic word never matches.
pub fn flag_is_lci(w: &FlagWord) -> Result<bool> {
    if !w.is_full() {
        return Err(Error::InvalidArgument(format!(
            "flag lci needs a full word of {} values, got {}",
            w.n(),
            w.len()
        )));
    }
    let n = w.n();
    let top = w.sorted();
    let r1 = match (1..=n).find(|a| !top.contains(*a)) {
        Some(a) => a,
        None => return Ok(true),
    };
    let mut pattern: Vec<usize> = (1..r1).collect();
    pattern.push(n);
    pattern.extend(n + 2..=2 * n + 1 - r1);
    Ok(top.entries() == pattern.as_slice())
}

/// 1-based chart coordinates `(a, s)` that stay free on the tangent space
/// of `X^A(i)` at the identity coset: `sort((1..d) \ {s} ∪ {a}) <= i`.
fn free_coordinates(i: &IndexSet) -> Vec<(usize, usize)> {
    let d = i.len();
    let two_n = i.two_n();
    let mut free = Vec::new();
    for s in 1..=d {
        for a in d + 1..=two_n {
            let mut contributor: Vec<usize> = (1..=d).filter(|&v| v != s).collect();
            contributor.push(a);
            contributor.sort_unstable();
            let idx = IndexSet::new(contributor, two_n).expect("valid contributor index");
            if idx.bruhat_leq(i).expect("same shape") {
                free.push((a, s));
            }
        }
    }
    free
}

/// Dimension of the tangent space of `X^A(i)` at the identity coset: the
/// number of free chart coordinates.
pub fn tangent_dim_a(i: &IndexSet) -> usize {
    free_coordinates(i).len()
}

/// Codimension of the symplectic tangent space inside the type-A one at the
/// identity coset, by exact rank of the restricted hyperplane system
/// `{x_{2n+1-s,t} - x_{2n+1-t,s}}`. The hyperplanes are pairwise
/// variable-disjoint, so the rank equals the number of pairs touching a
/// free coordinate; both routes are computed and must agree.
pub fn tangent_codim_c_direct(i: &IndexSet) -> Result<usize> {
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    let d = i.len();
    let two_n = i.two_n();
    let free = free_coordinates(i);
    let coord_pos = |a: usize, s: usize| free.iter().position(|&(fa, fs)| fa == a && fs == s);

    let mut counted = 0;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in 1..=d {
        for t in s + 1..=d {
            let first = coord_pos(two_n + 1 - s, t);
            let second = coord_pos(two_n + 1 - t, s);
            if first.is_some() || second.is_some() {
                counted += 1;
            }
            let mut row = vec![Rat::zero(); free.len()];
            if let Some(p) = first {
                row[p] = Rat::one();
            }
            if let Some(p) = second {
                row[p] -= Rat::one();
            }
            rows.push(row);
        }
    }
    let rank = if rows.is_empty() {
        0
    } else {
        RatMatrix::from_rows(rows)?.rank()
    };
    debug_assert_eq!(rank, counted, "disjoint-variable argument failed at {i}");
    Ok(rank)
}

/// Closed form for the tangent codimension:
/// `C(d-r+1, 2) - C(q-r, 2)` when `q <= d`, else `0`; zero by convention on
/// the staircase.
pub fn tangent_codim_c_closed_form(i: &IndexSet) -> Result<usize> {
    if !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    let r = match first_excess(i) {
        Some(r) => r,
        None => return Ok(0),
    };
    let d = i.len();
    let q = tail_gap(i)?;
    if q > d {
        return Ok(0);
    }
    Ok(binomial(d - r + 1, 2) - binomial(q.saturating_sub(r), 2))
}

/// Smoothness of `X^A(i)`: the index is a staircase prefix followed by one
/// consecutive run. Must agree with `tangent_dim_a(i) == length_a(i)`.
pub fn smooth_a(i: &IndexSet) -> bool {
    let e = i.entries();
    let mut k = 0;
    while k < e.len() && e[k] == k + 1 {
        k += 1;
    }
    e[k..].windows(2).all(|w| w[1] == w[0] + 1)
}

/// Smoothness of `X^C(i)` via the tangent-dimension test at the identity
/// coset: `tangent_dim_a - tangent_codim_c == dim X^C`.
pub fn smooth_c(i: &IndexSet) -> Result<bool> {
    let codim = tangent_codim_c_closed_form(i)?;
    Ok(tangent_dim_a(i) - codim == i.length_c()?)
}

/// Per-index report of the full §4–§5 analysis.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub index: String,
    pub dim_a: usize,
    pub dim_c: usize,
    pub n_self: usize,
    pub n_id: usize,
    pub r1: Option<usize>,
    pub r2: Option<usize>,
    pub q: usize,
    pub r: Option<usize>,
    pub lci: bool,
    pub tangent_dim_a: usize,
    pub tangent_codim_c: usize,
    pub smooth_a: bool,
    pub smooth_c: bool,
}

/// Classifies one symplectic index, asserting every internal cross-check.
pub fn classify_one(i: &IndexSet) -> Result<ClassificationRecord> {
    let (dim_a, dim_c) = i.dims()?;
    let n_self = count_nonzero(i, i)?;
    let pairs = codim_pairs(i)?;
    if n_self != pairs || n_self != dim_a - dim_c {
        return Err(Error::InvalidArgument(format!(
            "codimension cross-check failed at {i}: N = {n_self}, pairs = {pairs}, gap = {}",
            dim_a - dim_c
        )));
    }
    let id = IndexSet::staircase(i.len(), i.two_n())?;
    let n_id = count_nonzero(&id, i)?;
    if n_self > 0 {
        let closed = n_id_closed_form(i)?;
        if closed != n_id {
            return Err(Error::InvalidArgument(format!(
                "closed form cross-check failed at {i}: direct = {n_id}, closed = {closed}"
            )));
        }
    }
    let lci = is_lci(i)?;
    if lci != (n_id == n_self) {
        return Err(Error::InvalidArgument(format!(
            "lci cross-check failed at {i}: criterion = {lci}, N_id = {n_id}, N_self = {n_self}"
        )));
    }
    let t_dim = tangent_dim_a(i);
    let t_codim = tangent_codim_c_closed_form(i)?;
    let direct = tangent_codim_c_direct(i)?;
    if t_codim != direct {
        return Err(Error::InvalidArgument(format!(
            "tangent cross-check failed at {i}: closed = {t_codim}, direct = {direct}"
        )));
    }
    let sa = smooth_a(i);
    if sa != (t_dim == dim_a) {
        return Err(Error::InvalidArgument(format!(
            "type-A smoothness cross-check failed at {i}"
        )));
    }
    Ok(ClassificationRecord {
        index: i.to_string(),
        dim_a,
        dim_c,
        n_self,
        n_id,
        r1: first_excess(i),
        r2: second_excess(i),
        q: tail_gap(i)?,
        r: first_excess(i),
        lci,
        tangent_dim_a: t_dim,
        tangent_codim_c: t_codim,
        smooth_a: sa,
        smooth_c: t_dim - t_codim == dim_c,
    })
}

/// One record per symplectic index of `I^Sp_{d,2n}`, in lexicographic
/// order. Indices are classified in parallel; any cross-check failure
/// aborts with the offending index.
pub fn classify(d: usize, two_n: usize) -> Result<Vec<ClassificationRecord>> {
    let indices = enumerate_indices(d, two_n, true, None)?;
    indices.par_iter().map(classify_one).collect()
}

/// Pinned CSV header for classification output.
pub const CLASSIFY_CSV_HEADER: [&str; 14] = [
    "index",
    "dim_a",
    "dim_c",
    "n_self",
    "n_id",
    "r1",
    "r2",
    "q",
    "r",
    "lci",
    "tangent_dim_a",
    "tangent_codim_c",
    "smooth_a",
    "smooth_c",
];

impl ClassificationRecord {
    /// Field values in header order; unset derived indices print as "inf"
    /// (they are minima over empty sets).
    pub fn csv_fields(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map_or_else(|| "inf".to_string(), |x| x.to_string());
        vec![
            self.index.clone(),
            self.dim_a.to_string(),
            self.dim_c.to_string(),
            self.n_self.to_string(),
            self.n_id.to_string(),
            opt(self.r1),
            opt(self.r2),
            self.q.to_string(),
            opt(self.r),
            self.lci.to_string(),
            self.tangent_dim_a.to_string(),
            self.tangent_codim_c.to_string(),
            self.smooth_a.to_string(),
            self.smooth_c.to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(e: &[usize], two_n: usize) -> IndexSet {
        IndexSet::new(e.to_vec(), two_n).unwrap()
    }

    #[test]
    fn count_nonzero_pinned() {
        let i137 = idx(&[1, 3, 7], 8);
        assert_eq!(count_nonzero(&i137, &i137).unwrap(), 1);
        // the worked-example erratum: brute force gives 1, not 2
        assert_eq!(count_nonzero(&idx(&[1, 2, 3], 8), &i137).unwrap(), 1);
        assert_eq!(
            count_nonzero(&idx(&[1, 2], 8), &idx(&[5, 8], 8)).unwrap(),
            1
        );
        assert!(count_nonzero(&idx(&[1, 4], 8), &i137).is_err());
        assert!(count_nonzero(&idx(&[2, 3, 8], 8), &i137).is_err());
    }

    #[test]
    fn codim_pairs_pinned() {
        assert_eq!(codim_pairs(&idx(&[1, 3, 7], 8)).unwrap(), 1);
        assert_eq!(codim_pairs(&idx(&[1, 2, 3], 8)).unwrap(), 0);
        assert_eq!(codim_pairs(&idx(&[2, 6, 8], 8)).unwrap(), 2);
    }

    #[test]
    fn derived_indices() {
        let i = idx(&[1, 3, 7], 8);
        assert_eq!(first_excess(&i), Some(2));
        assert_eq!(second_excess(&i), Some(3));
        assert_eq!(tail_gap(&i).unwrap(), 2);
        assert_eq!(first_excess(&idx(&[1, 2, 3], 8)), None);
        assert_eq!(second_excess(&idx(&[2, 3, 4], 10)), None);
    }

    #[test]
    fn n_id_closed_form_pinned() {
        assert_eq!(n_id_closed_form(&idx(&[1, 3, 7], 8)).unwrap(), 1);
        assert_eq!(n_id_closed_form(&idx(&[2, 6, 8], 8)).unwrap(), 3);
        assert_eq!(n_id_closed_form(&idx(&[6, 7, 8], 8)).unwrap(), 3);
        // inapplicable when every section dies
        assert!(n_id_closed_form(&idx(&[1, 2, 3], 8)).is_err());
    }

    #[test]
    fn n_id_closed_form_deep_cutoff() {
        // first indices where the cutoff subtrahend exceeds a single count
        let i = idx(&[2, 3, 5, 7], 10);
        let id = IndexSet::staircase(4, 10).unwrap();
        assert_eq!(count_nonzero(&id, &i).unwrap(), 3);
        assert_eq!(n_id_closed_form(&i).unwrap(), 3);
        let i = idx(&[2, 3, 6, 7], 10);
        assert_eq!(count_nonzero(&id, &i).unwrap(), 3);
        assert_eq!(n_id_closed_form(&i).unwrap(), 3);
    }

    #[test]
    fn lci_pinned() {
        assert!(is_lci(&idx(&[1, 3, 7], 8)).unwrap());
        assert!(!is_lci(&idx(&[2, 6, 8], 8)).unwrap());
        assert!(is_lci(&idx(&[1, 2, 3], 8)).unwrap());
        assert!(is_lci(&idx(&[3, 4], 4)).unwrap());
    }

    #[test]
    fn flag_lci_pattern() {
        let w = FlagWord::new(vec![1, 2, 3, 4], 8).unwrap();
        assert!(flag_is_lci(&w).unwrap());
        let w = FlagWord::new(vec![4, 6, 7, 8], 8).unwrap();
        assert!(flag_is_lci(&w).unwrap());
        let w = FlagWord::new(vec![6, 4, 8, 7], 8).unwrap();
        assert!(flag_is_lci(&w).unwrap()); // order inside the word is free
        // the sorted-set pattern test; this set is not even symplectic
        let w = FlagWord::new(vec![3, 6, 7, 8], 8).unwrap();
        assert!(!flag_is_lci(&w).unwrap());
        assert!(flag_is_lci(&FlagWord::new(vec![3, 1], 8).unwrap()).is_err());
        // pattern match implies the Grassmannian criterion
        for n in [2usize, 3, 4] {
            for w in crate::combinat::enumerate_flag_words(n, true).unwrap() {
                if flag_is_lci(&w).unwrap() {
                    assert!(is_lci(&w.sorted()).unwrap());
                }
            }
        }
    }

    #[test]
    fn tangent_dims_pinned() {
        assert_eq!(tangent_dim_a(&idx(&[1, 3, 7], 8)), 8);
        assert_eq!(tangent_dim_a(&idx(&[1, 6, 7], 8)), 8);
        assert_eq!(tangent_dim_a(&IndexSet::maximal(3, 8).unwrap()), 15);
        assert_eq!(tangent_codim_c_direct(&idx(&[1, 3, 7], 8)).unwrap(), 1);
        assert_eq!(tangent_codim_c_direct(&idx(&[5, 6], 8)).unwrap(), 0);
        assert_eq!(
            tangent_codim_c_direct(&IndexSet::maximal(3, 8).unwrap()).unwrap(),
            3
        );
        assert_eq!(tangent_codim_c_closed_form(&idx(&[1, 3, 7], 8)).unwrap(), 1);
        assert_eq!(tangent_codim_c_closed_form(&idx(&[5, 6], 8)).unwrap(), 0);
        assert_eq!(
            tangent_codim_c_closed_form(&idx(&[6, 7, 8], 8)).unwrap(),
            3
        );
    }

    #[test]
    fn smoothness_pinned() {
        assert!(smooth_a(&idx(&[1, 6, 7], 8)));
        assert!(!smooth_a(&idx(&[1, 3, 7], 8)));
        assert!(smooth_a(&idx(&[1, 2, 3], 8)));
        assert!(smooth_c(&idx(&[1, 6, 7], 8)).unwrap());
        assert!(smooth_c(&idx(&[1, 2, 3], 8)).unwrap());
        // the research-gap witness: smooth in type A, singular in type C
        let witness = idx(&[5, 6], 8);
        assert!(smooth_a(&witness));
        assert!(!smooth_c(&witness).unwrap());
    }

    #[test]
    fn classify_small_sweeps() {
        let records = classify(2, 4).unwrap();
        assert_eq!(records.len(), 4);
        let records = classify(3, 8).unwrap();
        assert_eq!(records.len(), 32);
        let records = classify(1, 8).unwrap();
        assert!(records
            .iter()
            .all(|r| r.n_self == 0 && r.smooth_a && r.smooth_c));
    }

    #[test]
    fn csv_fields_align_with_header() {
        let rec = classify_one(&idx(&[1, 3, 7], 8)).unwrap();
        let fields = rec.csv_fields();
        assert_eq!(fields.len(), CLASSIFY_CSV_HEADER.len());
        assert_eq!(fields[0], "1,3,7");
        assert_eq!(fields[1], "5");
        assert_eq!(fields[2], "4");
        assert_eq!(fields[3], "1");
        assert_eq!(fields[4], "1");
        // staircase prints inf for the unset minima
        let rec = classify_one(&idx(&[1, 2], 8)).unwrap();
        assert_eq!(rec.csv_fields()[5], "inf");
        assert_eq!(rec.csv_fields()[8], "inf");
    }
}
