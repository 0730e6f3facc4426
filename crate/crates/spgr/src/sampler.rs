//! Deterministic exact-rational point samplers.
//!
//! Cell points are sampled rather than arbitrary variety points: the cell is
//! dense in its Schubert variety, so exact vanishing on samples certifies
//! vanishing on the closure, and a single nonzero sample certifies
//! nonvanishing. All draws are reproducible: a sample is a pure function of
//! `(SampleConfig, draw index)`.

use crate::combinat::{FlagWord, IndexSet};
use crate::linalg::{random_solution, rat, Rat, RatMatrix};
use crate::pluecker::{FlagMatrix, SubspaceMatrix};
use crate::{Error, Result};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded sampling parameters.
///
/// `coefficient_bound` keeps exact arithmetic fast; the degrees involved are
/// at most `d`, so Schwartz–Zippel collisions stay negligible.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub seed: u64,
    pub coefficient_bound: i64,
    pub max_resamples: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            coefficient_bound: 10,
            max_resamples: 64,
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig {
            seed,
            ..SampleConfig::default()
        }
    }

    /// Independent deterministic stream per draw index.
    fn rng(&self, draw: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(draw);
        rng
    }
}

/// The linear form `x -> pairing(c, x)` as a coefficient row of length `2n`.
fn pairing_form(column: &[Rat]) -> Vec<Rat> {
    let two_n = column.len();
    let n = two_n / 2;
    let mut form = vec![Rat::zero(); two_n];
    for k in 1..=n {
        form[two_n - k] += &column[k - 1];
        form[k - 1] -= &column[two_n - k];
    }
    form
}

fn columns_to_matrix(columns: &[Vec<Rat>], two_n: usize) -> RatMatrix {
    RatMatrix::from_fn(two_n, columns.len(), |r, c| columns[c][r].clone())
}

/// Random full-rank isotropic `2n x d` matrix: each column is a seeded
/// random solution of the pairing constraints against the prior columns.
pub fn sample_isotropic(
    d: usize,
    two_n: usize,
    cfg: &SampleConfig,
    draw: u64,
) -> Result<SubspaceMatrix> {
    if two_n == 0 || two_n % 2 != 0 || d > two_n / 2 {
        return Err(Error::InvalidArgument(format!(
            "need even ambient and d <= n, got d = {d}, ambient = {two_n}"
        )));
    }
    let mut rng = cfg.rng(draw);
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(d);
    while columns.len() < d {
        let constraints = if columns.is_empty() {
            RatMatrix::zeros(1, two_n)
        } else {
            RatMatrix::from_rows(columns.iter().map(|c| pairing_form(c)).collect())
                .expect("constraint rows share length")
        };
        let rhs = vec![Rat::zero(); constraints.rows()];
        let mut accepted = false;
        for _ in 0..cfg.max_resamples {
            let v = random_solution(&constraints, &rhs, &mut rng, cfg.coefficient_bound)?;
            let mut trial = columns.clone();
            trial.push(v);
            if columns_to_matrix(&trial, two_n).rank() == trial.len() {
                columns = trial;
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::ResampleBudget(format!(
                "isotropic column {} of {d}",
                columns.len() + 1
            )));
        }
    }
    SubspaceMatrix::new(columns_to_matrix(&columns, two_n))
}

/// Random point of the Schubert cell of `i`: column `t` is supported on rows
/// `1..=i_t` with a nonzero entry at row `i_t`. With `symplectic`, each
/// column additionally solves the isotropy constraints against the prior
/// columns, landing in the type-C cell.
pub fn sample_schubert(
    i: &IndexSet,
    symplectic: bool,
    cfg: &SampleConfig,
    draw: u64,
) -> Result<SubspaceMatrix> {
    if symplectic && !i.is_symplectic() {
        return Err(Error::NotSymplectic(i.to_string()));
    }
    let two_n = i.two_n();
    let mut rng = cfg.rng(draw);
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(i.len());
    for &pivot in i.entries() {
        // unknowns: entries on rows 1..=pivot
        let constraints = if symplectic {
            RatMatrix::from_rows(
                columns
                    .iter()
                    .map(|c| pairing_form(c)[..pivot].to_vec())
                    .collect(),
            )
            .expect("constraint rows share length")
        } else {
            RatMatrix::zeros(0, pivot)
        };
        let constraints = if constraints.rows() == 0 {
            RatMatrix::zeros(1, pivot)
        } else {
            constraints
        };
        let rhs = vec![Rat::zero(); constraints.rows()];
        let mut accepted = false;
        for _ in 0..cfg.max_resamples {
            let support = random_solution(&constraints, &rhs, &mut rng, cfg.coefficient_bound)?;
            if support[pivot - 1].is_zero() {
                continue;
            }
            let mut v = support;
            v.resize(two_n, Rat::zero());
            columns.push(v);
            accepted = true;
            break;
        }
        if !accepted {
            return Err(Error::ResampleBudget(format!(
                "cell column with pivot row {pivot} of {i}"
            )));
        }
    }
    SubspaceMatrix::new(columns_to_matrix(&columns, two_n))
}

/// Random point of the flag Schubert cell of `w`: column `t` is
/// `e_{w_t}` plus a random combination of `e_a` for `a < w_t` avoiding the
/// earlier pivot rows. With `symplectic`, the combination solves the
/// isotropy constraints against the prior columns.
pub fn sample_flag(
    w: &FlagWord,
    symplectic: bool,
    cfg: &SampleConfig,
    draw: u64,
) -> Result<FlagMatrix> {
    if !w.is_full() {
        return Err(Error::InvalidArgument(format!(
            "flag sampling needs a full word of {} values, got {}",
            w.n(),
            w.len()
        )));
    }
    if symplectic && !w.is_symplectic() {
        return Err(Error::NotSymplectic(w.to_string()));
    }
    let two_n = w.two_n();
    let mut rng = cfg.rng(draw);
    'attempt: for _ in 0..cfg.max_resamples {
        let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(w.n());
        for (t, &pivot) in w.values().iter().enumerate() {
            let support: Vec<usize> = (1..pivot)
                .filter(|a| !w.values()[..t].contains(a))
                .collect();
            let coeffs = if symplectic {
                // pairing(c_k, e_pivot + sum y_a e_a) = 0 for all prior k
                let mut rows = Vec::with_capacity(t);
                let mut rhs = Vec::with_capacity(t);
                for prior in &columns {
                    let form = pairing_form(prior);
                    rows.push(support.iter().map(|&a| form[a - 1].clone()).collect());
                    rhs.push(-form[pivot - 1].clone());
                }
                if rows.is_empty() {
                    rows.push(vec![Rat::zero(); support.len()]);
                    rhs.push(Rat::zero());
                }
                let a = RatMatrix::from_rows(rows).expect("uniform support length");
                match random_solution(&a, &rhs, &mut rng, cfg.coefficient_bound) {
                    Ok(c) => c,
                    Err(Error::InconsistentSystem) => continue 'attempt,
                    Err(e) => return Err(e),
                }
            } else {
                (0..support.len())
                    .map(|_| rat(rng.gen_range(-cfg.coefficient_bound..=cfg.coefficient_bound)))
                    .collect()
            };
            let mut v = vec![Rat::zero(); two_n];
            v[pivot - 1] = rat(1);
            for (&a, y) in support.iter().zip(&coeffs) {
                v[a - 1] = y.clone();
            }
            columns.push(v);
        }
        return FlagMatrix::new(columns_to_matrix(&columns, two_n));
    }
    Err(Error::ResampleBudget(format!("flag cell of {w}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::build_e;
    use crate::combinat::enumerate_indices;

    fn idx(e: &[usize], two_n: usize) -> IndexSet {
        IndexSet::new(e.to_vec(), two_n).unwrap()
    }

    #[test]
    fn isotropic_samples_audit() {
        let cfg = SampleConfig::with_seed(1);
        for draw in 0..40 {
            let p = sample_isotropic(2, 4, &cfg, draw).unwrap();
            assert!(p.is_isotropic());
            assert_eq!(p.matrix().rank(), 2);
        }
        for draw in 0..10 {
            let p = sample_isotropic(4, 8, &cfg, draw).unwrap();
            assert!(p.is_isotropic());
        }
        let one = sample_isotropic(1, 6, &cfg, 0).unwrap();
        assert!(one.is_isotropic());
    }

    #[test]
    fn isotropic_determinism() {
        let cfg = SampleConfig::with_seed(9);
        let a = sample_isotropic(3, 8, &cfg, 5).unwrap();
        let b = sample_isotropic(3, 8, &cfg, 5).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        let c = sample_isotropic(3, 8, &cfg, 6).unwrap();
        assert_ne!(a.matrix(), c.matrix());
    }

    #[test]
    fn schubert_cell_membership() {
        let cfg = SampleConfig::with_seed(2);
        let i = idx(&[1, 3, 7], 8);
        for draw in 0..20 {
            let p = sample_schubert(&i, true, &cfg, draw).unwrap();
            assert!(!p.plucker(&i).unwrap().is_zero());
            assert!(p.is_isotropic());
            // support condition: row r of column t vanishes for r > i_t
            for (t, &piv) in i.entries().iter().enumerate() {
                for r in piv..8 {
                    assert!(p.matrix().at(r, t).is_zero());
                }
            }
        }
        for draw in 0..20 {
            let p = sample_schubert(&i, false, &cfg, draw).unwrap();
            assert!(!p.plucker(&i).unwrap().is_zero());
        }
    }

    #[test]
    fn schubert_nonsymplectic_index_generically_anisotropic() {
        let cfg = SampleConfig::with_seed(3);
        let i = idx(&[1, 8], 8);
        assert!(sample_schubert(&i, true, &cfg, 0).is_err());
        let mut any_aniso = false;
        for draw in 0..10 {
            let p = sample_schubert(&i, false, &cfg, draw).unwrap();
            any_aniso |= !p.is_isotropic();
        }
        assert!(any_aniso);
    }

    #[test]
    fn schubert_consistency_with_restriction() {
        // all samples kill E_(2) and E_(7) on X^A((1,3,7)); some keep E_(1)
        let cfg = SampleConfig::with_seed(4);
        let i = idx(&[1, 3, 7], 8);
        let e1 = build_e(&idx(&[1], 8), 4).unwrap();
        let e2 = build_e(&idx(&[2], 8), 4).unwrap();
        let e7 = build_e(&idx(&[7], 8), 4).unwrap();
        let mut e1_nonzero = false;
        for draw in 0..25 {
            let p = sample_schubert(&i, false, &cfg, draw).unwrap();
            assert!(e2.evaluate(&p).unwrap().is_zero());
            assert!(e7.evaluate(&p).unwrap().is_zero());
            e1_nonzero |= !e1.evaluate(&p).unwrap().is_zero();
        }
        assert!(e1_nonzero);
    }

    #[test]
    fn coordinate_cell_point_is_special_case() {
        // with zero random part the construction degenerates to e_i; check
        // the sampled points stay in the same chart
        let cfg = SampleConfig::with_seed(5);
        let i = idx(&[2, 4], 6);
        let e = SubspaceMatrix::coordinate_point(&i);
        assert!(!e.plucker(&i).unwrap().is_zero());
        let p = sample_schubert(&i, true, &cfg, 0).unwrap();
        assert!(!p.plucker(&i).unwrap().is_zero());
    }

    #[test]
    fn flag_samples_audit() {
        let cfg = SampleConfig::with_seed(6);
        let w = FlagWord::new(vec![2, 1], 4).unwrap();
        for draw in 0..50 {
            let f = sample_flag(&w, true, &cfg, draw).unwrap();
            for d in 1..=2 {
                let prefix = f.prefix(d).unwrap();
                let wd = w.prefix(d).unwrap();
                assert!(!prefix.plucker(&wd).unwrap().is_zero());
            }
            assert!(f.prefix(2).unwrap().is_isotropic());
        }
    }

    #[test]
    fn symplectic_flag_kills_all_sections() {
        let cfg = SampleConfig::with_seed(7);
        let w = FlagWord::new(vec![5, 1, 4], 6).unwrap();
        assert!(w.is_symplectic());
        for draw in 0..10 {
            let f = sample_flag(&w, true, &cfg, draw).unwrap();
            let top = f.prefix(3).unwrap();
            assert!(top.is_isotropic());
            for ip in enumerate_indices(1, 6, false, None).unwrap() {
                let e = build_e(&ip, 3).unwrap();
                assert!(e.evaluate(&top).unwrap().is_zero());
            }
        }
    }
}
