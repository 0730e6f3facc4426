//! Verification suites: every identity and closed form in the library is
//! re-derived against its independent oracle and reported as a PASS/FAIL
//! line. Shipped in the binary (`spgr verify`) so the cross-checking is a
//! first-class user feature, and reused verbatim by the acceptance tests.

use crate::combinat::{enumerate_flag_words, enumerate_indices, FlagWord, IndexSet};
use crate::equations::{
    build_e, check_flag_relation, check_local_relation, check_pairing_identity,
    e_coefficient_matrix, lemma_partition_identity, restriction_zero, vanishing_kernel,
    IdentityMode,
};
use crate::linalg::RatMatrix;
use crate::pluecker::SubspaceMatrix;
use crate::sampler::{sample_flag, sample_isotropic, sample_schubert, SampleConfig};
use crate::schubert::{
    classify, codim_pairs, count_nonzero, first_excess, is_lci, n_id_closed_form, smooth_a,
    smooth_c, tail_gap, tangent_codim_c_closed_form, tangent_codim_c_direct, tangent_dim_a,
};
use crate::{binomial, Result};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

/// One PASS/FAIL line; `detail` carries the counterexample on failure.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_outcome(name: impl Into<String>, failures: Vec<String>, ok_detail: String) -> Self {
        if failures.is_empty() {
            CheckResult::pass(name, ok_detail)
        } else {
            CheckResult::fail(name, format!("first counterexample: {}", failures[0]))
        }
    }
}

/// Suite knobs; defaults match the documented desk-scale runs.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub two_n_max: usize,
    pub seed: u64,
    pub samples: usize,
    pub trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            two_n_max: 8,
            seed: 0,
            samples: 100,
            trials: 100,
        }
    }
}

fn even_sizes(two_n_max: usize) -> Vec<usize> {
    (2..=two_n_max / 2).map(|n| 2 * n).collect()
}

/// Pairing, local-relation, and flag-relation identities with pinned signs.
pub fn suite_identities(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();

    // symbolic pairing identity, d <= 3, 2n <= min(two_n_max, 8)
    let mut failures = Vec::new();
    let mut cases = 0;
    for two_n in even_sizes(opts.two_n_max.min(8)) {
        let n = two_n / 2;
        for d in 2..=n.min(3) {
            for i in enumerate_indices(d, two_n, false, None)? {
                for s in 1..=d {
                    for t in s + 1..=d {
                        cases += 1;
                        let r =
                            check_pairing_identity(&i, s, t, IdentityMode::Symbolic, 1, opts.seed)?;
                        let expected: i8 = if (s + t + 1) % 2 == 0 { 1 } else { -1 };
                        if !r.holds || r.pinned_sign != expected {
                            failures.push(format!("i={i} (s,t)=({s},{t})"));
                        }
                    }
                }
            }
        }
    }
    out.push(CheckResult::from_outcome(
        "identities/pairing-symbolic",
        failures,
        format!("{cases} cases, sign (-1)^(s+t+1)"),
    ));

    // sampled pairing identity, d <= 5, full range
    let mut all_cases = Vec::new();
    for two_n in even_sizes(opts.two_n_max) {
        let n = two_n / 2;
        for d in 2..=n.min(5) {
            for i in enumerate_indices(d, two_n, false, None)? {
                for s in 1..=d {
                    for t in s + 1..=d {
                        all_cases.push((i.clone(), s, t));
                    }
                }
            }
        }
    }
    let failures: Vec<String> = all_cases
        .par_iter()
        .filter_map(|(i, s, t)| {
            let r = check_pairing_identity(
                i,
                *s,
                *t,
                IdentityMode::Sampled,
                opts.trials,
                opts.seed ^ 0x9e3779b9,
            )
            .ok()?;
            let expected: i8 = if (s + t + 1) % 2 == 0 { 1 } else { -1 };
            if !r.holds || r.pinned_sign != expected {
                Some(format!("i={i} (s,t)=({s},{t})"))
            } else {
                None
            }
        })
        .collect();
    out.push(CheckResult::from_outcome(
        "identities/pairing-sampled",
        failures,
        format!("{} cases x {} trials", all_cases.len(), opts.trials),
    ));

    // local relation: exhaustive (j', i) for small sizes, global sign -1
    let mut cases = Vec::new();
    for two_n in even_sizes(opts.two_n_max.min(8)) {
        let n = two_n / 2;
        for d in 2..=n {
            for i in enumerate_indices(d, two_n, false, None)? {
                for j_prime in enumerate_indices(d - 2, two_n, false, None)? {
                    cases.push((j_prime, i.clone()));
                }
            }
        }
    }
    let trials = opts.trials.min(12).max(4);
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(j_prime, i)| {
            match check_local_relation(j_prime, i, trials, opts.seed ^ 0x51f15eed) {
                Ok(r) if r.holds && r.pinned_sign == -1 => None,
                Ok(_) => Some(format!("j'={j_prime} i={i}")),
                Err(e) => Some(format!("j'={j_prime} i={i}: {e}")),
            }
        })
        .collect();
    out.push(CheckResult::from_outcome(
        "identities/local-relation",
        failures,
        format!("{} cases x {trials} trials, global sign -1", cases.len()),
    ));

    // flag relation: full n = 3 sweep plus 2n = 8 spot checks
    let mut cases: Vec<(FlagWord, usize, usize, usize, usize)> = Vec::new();
    for w in enumerate_flag_words(3, false)? {
        cases.push((w, 2, 3, 1, 2));
    }
    if opts.two_n_max >= 8 {
        for w in enumerate_flag_words(4, true)?.into_iter().step_by(37) {
            for (d1, d2) in [(2, 3), (2, 4), (3, 4)] {
                for s in 1..=d1 {
                    for t in s + 1..=d1 {
                        cases.push((w.clone(), d1, d2, s, t));
                    }
                }
            }
        }
    }
    let flag_trials = opts.trials.min(10).max(4);
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(w, d1, d2, s, t)| {
            match check_flag_relation(w, *d1, *d2, *s, *t, flag_trials, opts.seed ^ 0xf1a6) {
                Ok(r) => {
                    let expected: i8 = if (s + t + r.s_prime + r.t_prime) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    if r.report.holds && r.report.pinned_sign == expected {
                        None
                    } else {
                        Some(format!("w={w} d1={d1} d2={d2} (s,t)=({s},{t})"))
                    }
                }
                Err(e) => Some(format!("w={w}: {e}")),
            }
        })
        .collect();
    out.push(CheckResult::from_outcome(
        "identities/flag-relation",
        failures,
        format!(
            "{} cases x {flag_trials} trials, sign (-1)^(s+t+s'+t')",
            cases.len()
        ),
    ));

    Ok(out)
}

/// Partition identity for every half at m = 1, 2, 3 with one sign per m.
pub fn suite_lemma(_opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=3usize {
        let n = 2 * m;
        let expected: i8 = if (m - 1) % 2 == 0 { 1 } else { -1 };
        let mut failures = Vec::new();
        let mut cases = 0;
        for half in enumerate_indices(m, 2 * n, false, None)? {
            if half.entries().iter().any(|&v| v > n) {
                continue;
            }
            cases += 1;
            let r = lemma_partition_identity(half.entries(), m)?;
            if !r.holds || r.pinned_sign != expected {
                failures.push(format!("half={half}"));
            }
        }
        out.push(CheckResult::from_outcome(
            format!("lemma/partition-m{m}"),
            failures,
            format!("{cases} halves, sign {expected:+}"),
        ));
    }
    Ok(out)
}

/// The degree-1 span: E-family rank, sampled vanishing kernel, and the
/// two-inclusion stacked-rank test.
pub fn suite_span(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let shapes: Vec<(usize, usize, usize)> = vec![
        (2, 4, 100),
        (2, 6, 100),
        (3, 6, 150),
        (2, 8, 100),
        (3, 8, 300),
        (4, 8, 150),
    ]
    .into_iter()
    .filter(|&(_, two_n, _)| two_n <= opts.two_n_max)
    .collect();
    let results: Vec<CheckResult> = shapes
        .par_iter()
        .map(|&(d, two_n, points)| -> Result<CheckResult> {
            let name = format!("span/theorem-main1-d{d}-2n{two_n}");
            let expected = binomial(two_n, d - 2);
            let coeff = e_coefficient_matrix(d, two_n)?;
            let rank = coeff.rank();
            if rank != expected {
                return Ok(CheckResult::fail(
                    name,
                    format!("E-family rank {rank}, expected {expected}"),
                ));
            }
            let points = points.max(binomial(two_n, d));
            let (dim, kernel) = vanishing_kernel(d, two_n, points, opts.seed)?;
            if dim != expected {
                return Ok(CheckResult::fail(
                    name,
                    format!("sampled kernel dimension {dim}, expected {expected}"),
                ));
            }
            let kernel_rows = RatMatrix::from_rows(kernel)?;
            let stacked = coeff.stack(&kernel_rows)?;
            if stacked.rank() != expected {
                return Ok(CheckResult::fail(
                    name,
                    format!("kernel escapes the E span: stacked rank {}", stacked.rank()),
                ));
            }
            Ok(CheckResult::pass(
                name,
                format!("rank = kernel dim = {expected}, kernel inside E span"),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(results)
}

/// Theorem 2.2 vanishing: every section is exactly zero at every sampled
/// isotropic point.
pub fn suite_vanishing(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let shapes: Vec<(usize, usize)> = vec![(2, 4), (2, 6), (3, 6), (2, 8), (3, 8), (4, 8)]
        .into_iter()
        .filter(|&(_, two_n)| two_n <= opts.two_n_max)
        .collect();
    let results: Vec<CheckResult> = shapes
        .par_iter()
        .map(|&(d, two_n)| -> Result<CheckResult> {
            let name = format!("vanishing/isotropic-d{d}-2n{two_n}");
            let n = two_n / 2;
            let cfg = SampleConfig::with_seed(opts.seed);
            let sections: Vec<_> = enumerate_indices(d - 2, two_n, false, None)?
                .iter()
                .map(|ip| build_e(ip, n))
                .collect::<Result<Vec<_>>>()?;
            for draw in 0..opts.samples {
                let p = sample_isotropic(d, two_n, &cfg, draw as u64)?;
                for (k, e) in sections.iter().enumerate() {
                    if !e.evaluate(&p)?.is_zero() {
                        return Ok(CheckResult::fail(
                            name,
                            format!("section #{k} nonzero at draw {draw}"),
                        ));
                    }
                }
            }
            Ok(CheckResult::pass(
                name,
                format!(
                    "{} sections x {} samples all exact zero",
                    sections.len(),
                    opts.samples
                ),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(results)
}

/// Exhaustive §4 consistency: the three-way codimension equality, the
/// closed form, monotonicity along Bruhat chains, and the lci criterion.
pub fn suite_counts(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for two_n in even_sizes(opts.two_n_max) {
        let n = two_n / 2;
        let mut failures = Vec::new();
        let mut cases = 0;
        for d in 1..=n {
            let symplectic = enumerate_indices(d, two_n, true, None)?;
            let fails: Vec<String> = symplectic
                .par_iter()
                .filter_map(|i| {
                    let run = || -> Result<Option<String>> {
                        let n_self = count_nonzero(i, i)?;
                        let pairs = codim_pairs(i)?;
                        let (la, lc) = i.dims()?;
                        if n_self != pairs || n_self != la - lc {
                            return Ok(Some(format!("three-way equality at {i}")));
                        }
                        let id = IndexSet::staircase(d, two_n)?;
                        let n_id = count_nonzero(&id, i)?;
                        if n_self > 0 && n_id_closed_form(i)? != n_id {
                            return Ok(Some(format!("closed form at {i}")));
                        }
                        if is_lci(i)? != (n_id == n_self) {
                            return Ok(Some(format!("lci criterion at {i}")));
                        }
                        // monotonicity along all comparable pairs below i
                        let below: Vec<&IndexSet> = symplectic
                            .iter()
                            .filter(|j| j.bruhat_leq(i).unwrap_or(false))
                            .collect();
                        let counts: Vec<usize> = below
                            .iter()
                            .map(|l| count_nonzero(l, i))
                            .collect::<Result<_>>()?;
                        for (l, &cl) in below.iter().zip(&counts) {
                            for (j, &cj) in below.iter().zip(&counts) {
                                if l.bruhat_leq(j)? && cl < cj {
                                    return Ok(Some(format!("monotonicity at l={l} j={j} i={i}")));
                                }
                            }
                        }
                        Ok(None)
                    };
                    run().unwrap_or_else(|e| Some(format!("error at {i}: {e}")))
                })
                .collect();
            cases += symplectic.len();
            failures.extend(fails);
        }
        out.push(CheckResult::from_outcome(
            format!("counts/section4-2n{two_n}"),
            failures,
            format!("{cases} symplectic indices, all cross-checks"),
        ));
    }
    Ok(out)
}

/// Exhaustive §5 consistency: tangent closed form vs direct rank, the
/// smoothness pattern tests, the corrected trichotomy, and the witness.
pub fn suite_tangent(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for two_n in even_sizes(opts.two_n_max) {
        let n = two_n / 2;
        let mut failures = Vec::new();
        let mut cases = 0;
        for d in 1..=n {
            for i in enumerate_indices(d, two_n, false, None)? {
                cases += 1;
                if smooth_a(&i) != (tangent_dim_a(&i) == i.length_a()) {
                    failures.push(format!("smooth_a pattern at {i}"));
                    continue;
                }
                if !i.is_symplectic() {
                    continue;
                }
                let closed = tangent_codim_c_closed_form(&i).unwrap();
                let direct = tangent_codim_c_direct(&i).unwrap();
                if closed != direct {
                    failures.push(format!("tangent codim at {i}: {closed} vs {direct}"));
                    continue;
                }
                let sc = smooth_c(&i).unwrap();
                // corrected trichotomy: the trivial branch is X^C = X^A
                if smooth_a(&i) && 1 < d && d < n {
                    let trivial = codim_pairs(&i).unwrap() == 0;
                    let tri = trivial
                        || match first_excess(&i) {
                            Some(r) => {
                                let q = tail_gap(&i).unwrap();
                                q == r || q == r + 1
                            }
                            None => true,
                        };
                    if tri != sc {
                        failures.push(format!("trichotomy at {i}"));
                    }
                }
            }
        }
        out.push(CheckResult::from_outcome(
            format!("tangent/section5-2n{two_n}"),
            failures,
            format!("{cases} indices, closed = direct, patterns agree"),
        ));
    }
    // the research-gap witness
    if opts.two_n_max >= 8 {
        let witness = IndexSet::new(vec![5, 6], 8)?;
        let ok = smooth_a(&witness) && !smooth_c(&witness)?;
        out.push(if ok {
            CheckResult::pass(
                "tangent/witness-5-6",
                "smooth_a = true, smooth_c = false at (5,6) in Gr(2,8)",
            )
        } else {
            CheckResult::fail("tangent/witness-5-6", "witness classification changed")
        });
    }
    Ok(out)
}

/// Set-theoretic vanishing on Schubert cells: the combinatorial restriction
/// test agrees with exact evaluation at sampled cell points.
pub fn suite_schubert_vanishing(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let seeds = 50usize;
    let mut out = Vec::new();
    for two_n in even_sizes(opts.two_n_max.min(8)) {
        let n = two_n / 2;
        let mut cases = 0;
        let mut failures = Vec::new();
        for d in 2..=n {
            let indices = enumerate_indices(d, two_n, true, None)?;
            let sections: Vec<(IndexSet, crate::pluecker::LinearSection)> =
                enumerate_indices(d - 2, two_n, false, None)?
                    .into_iter()
                    .map(|ip| build_e(&ip, n).map(|e| (ip, e)))
                    .collect::<Result<Vec<_>>>()?;
            let fails: Vec<String> = indices
                .par_iter()
                .filter_map(|i| {
                    let run = || -> Result<Option<String>> {
                        let cfg = SampleConfig::with_seed(opts.seed ^ 0xce11);
                        let points: Vec<SubspaceMatrix> = (0..seeds)
                            .map(|draw| sample_schubert(i, false, &cfg, draw as u64))
                            .collect::<Result<Vec<_>>>()?;
                        for (ip, e) in &sections {
                            let zero = restriction_zero(ip, i)?;
                            let mut saw_nonzero = false;
                            for p in &points {
                                let value = e.evaluate(p)?;
                                if zero && !value.is_zero() {
                                    return Ok(Some(format!(
                                        "E_({ip}) claimed zero on X^A({i}) but a sample disagrees"
                                    )));
                                }
                                saw_nonzero |= !value.is_zero();
                            }
                            if !zero && !saw_nonzero {
                                return Ok(Some(format!(
                                    "E_({ip}) claimed nonzero on X^A({i}) but all samples vanish"
                                )));
                            }
                        }
                        Ok(None)
                    };
                    run().unwrap_or_else(|e| Some(format!("error at {i}: {e}")))
                })
                .collect();
            cases += indices.len();
            failures.extend(fails);
        }
        out.push(CheckResult::from_outcome(
            format!("schubert-vanishing/cells-2n{two_n}"),
            failures,
            format!("{cases} indices x {seeds} seeds, restriction test matches samples"),
        ));
    }
    Ok(out)
}

/// Flag layer: dimension recomputation, the lci pattern, and sampled
/// symplectic flags honouring chart and vanishing postconditions.
pub fn suite_flags(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    // dims against the codimension-gap recomputation
    for two_n in even_sizes(opts.two_n_max.min(8)) {
        let n = two_n / 2;
        let mut failures = Vec::new();
        let words = enumerate_flag_words(n, true)?;
        for w in &words {
            let (da, dc) = w.dims()?;
            let top = w.sorted();
            let recomputed = da - codim_pairs(&top)?;
            if dc != recomputed {
                failures.push(format!("dims at {w}: {dc} vs {recomputed}"));
            }
            // lci pattern is internally consistent with the sorted prefix
            let lci = crate::schubert::flag_is_lci(w)?;
            if lci && !is_lci(&top)? {
                failures.push(format!("lci pattern vs criterion at {w}"));
            }
        }
        out.push(CheckResult::from_outcome(
            format!("flags/dims-lci-2n{two_n}"),
            failures,
            format!("{} symplectic words", words.len()),
        ));
    }
    // sampled symplectic flags at n = 3: chart and vanishing postconditions
    if opts.two_n_max >= 6 {
        let n = 3;
        let words = enumerate_flag_words(n, true)?;
        let cfg = SampleConfig::with_seed(opts.seed ^ 0xf1a9);
        let sections: Vec<_> = enumerate_indices(n - 2, 2 * n, false, None)?
            .iter()
            .map(|ip| build_e(ip, n))
            .collect::<Result<Vec<_>>>()?;
        let failures: Vec<String> = (0..1000usize)
            .into_par_iter()
            .filter_map(|seed_idx| {
                let w = &words[seed_idx % words.len()];
                let run = || -> Result<Option<String>> {
                    let f = sample_flag(w, true, &cfg, seed_idx as u64)?;
                    for d in 1..=n {
                        let prefix = f.prefix(d)?;
                        if prefix.plucker(&w.prefix(d)?)?.is_zero() {
                            return Ok(Some(format!("chart condition at {w}, prefix {d}")));
                        }
                    }
                    let top = f.prefix(n)?;
                    if !top.is_isotropic() {
                        return Ok(Some(format!("isotropy at {w}")));
                    }
                    for e in &sections {
                        if !e.evaluate(&top)?.is_zero() {
                            return Ok(Some(format!("vanishing at {w}")));
                        }
                    }
                    Ok(None)
                };
                run().unwrap_or_else(|e| Some(format!("error at {w}: {e}")))
            })
            .collect();
        out.push(CheckResult::from_outcome(
            "flags/sampled-postconditions-n3",
            failures,
            "1000 seeds across all 48 symplectic words".to_string(),
        ));
    }
    Ok(out)
}

/// Classification sweep re-run: the driver's internal cross-checks abort on
/// any inconsistency, so completing is the check.
pub fn suite_classify(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for two_n in even_sizes(opts.two_n_max) {
        let n = two_n / 2;
        let mut total = 0;
        let mut failure = None;
        for d in 1..=n {
            match classify(d, two_n) {
                Ok(records) => total += records.len(),
                Err(e) => {
                    failure = Some(e.to_string());
                    break;
                }
            }
        }
        out.push(match failure {
            None => CheckResult::pass(
                format!("classify/sweep-2n{two_n}"),
                format!("{total} records, all cross-checks pass"),
            ),
            Some(e) => CheckResult::fail(format!("classify/sweep-2n{two_n}"), e),
        });
    }
    Ok(out)
}

/// Known suite names in `verify --suite` order.
pub const SUITES: [&str; 8] = [
    "identities",
    "lemma",
    "span",
    "vanishing",
    "counts",
    "tangent",
    "schubert-vanishing",
    "flags",
];

/// Runs one suite by name, or all of them.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    match name {
        "identities" => suite_identities(opts),
        "lemma" => suite_lemma(opts),
        "span" => suite_span(opts),
        "vanishing" => suite_vanishing(opts),
        "counts" => suite_counts(opts),
        "tangent" => suite_tangent(opts),
        "schubert-vanishing" => suite_schubert_vanishing(opts),
        "flags" => suite_flags(opts),
        "classify" => suite_classify(opts),
        "all" => {
            let mut out = Vec::new();
            for suite in SUITES {
                out.extend(run_suite(suite, opts)?);
            }
            Ok(out)
        }
        other => Err(crate::Error::InvalidArgument(format!(
            "unknown suite {other:?}; expected one of {SUITES:?}, classify, or all"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyOptions {
        VerifyOptions {
            two_n_max: 6,
            seed: 1,
            samples: 25,
            trials: 20,
        }
    }

    #[test]
    fn lemma_suite_passes() {
        for r in suite_lemma(&small()).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn span_and_vanishing_small() {
        for r in suite_span(&small()).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        for r in suite_vanishing(&small()).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn counts_and_tangent_small() {
        for r in suite_counts(&small()).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        for r in suite_tangent(&small()).unwrap() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &small()).is_err());
    }
}
