//! The degree-1 span equality at desk scale: the E family is linearly
//! independent, and it spans exactly the sections vanishing on sampled
//! isotropic subspaces (both inclusions, checked by exact ranks).
//!
//! Run with `cargo run --example span`.

use spgr::binomial;
use spgr::equations::{e_coefficient_matrix, e_span_rank, vanishing_kernel};
use spgr::linalg::RatMatrix;

fn main() -> spgr::Result<()> {
    for (d, two_n, points) in [(2usize, 4usize, 60usize), (3, 6, 120), (3, 8, 300)] {
        let expected = binomial(two_n, d - 2);
        let rank = e_span_rank(d, two_n)?;
        let (dim, kernel) = vanishing_kernel(d, two_n, points, 1)?;
        // the sampled kernel must lie inside the row span of the E family
        let coeff = e_coefficient_matrix(d, two_n)?;
        let stacked = coeff.stack(&RatMatrix::from_rows(kernel)?)?;
        println!(
            "Gr({d},{two_n}): E-family rank = {rank}, sampled kernel dim = {dim}, \
             C(2n,d-2) = {expected}, stacked rank = {} (kernel inside the span: {})",
            stacked.rank(),
            stacked.rank() == rank
        );
    }
    Ok(())
}
