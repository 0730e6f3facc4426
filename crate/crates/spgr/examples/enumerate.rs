//! Index-set combinatorics: enumeration, the symplectic filter, Bruhat
//! order, Weyl-group lifts, and the two length functions.
//!
//! Run with `cargo run --example enumerate`.

use spgr::combinat::{enumerate_indices, IndexSet};

fn main() -> spgr::Result<()> {
    // all 2-subsets of {1..4} with no pair summing to 5
    let symplectic = enumerate_indices(2, 4, true, None)?;
    println!("I^Sp_(2,4) has {} elements:", symplectic.len());
    for i in &symplectic {
        println!("  ({i})");
    }

    // the worked index (1,3,7) in the ambient 2n = 8
    let i = IndexSet::new(vec![1, 3, 7], 8)?;
    println!("\nindex ({i}), symplectic = {}", i.is_symplectic());
    println!("  type-A lift  {}", i.lift_a());
    println!("  type-C lift  {}", i.lift_c()?);
    let (dim_a, dim_c) = i.dims()?;
    println!("  dim X^A = {dim_a}, dim X^C = {dim_c}");

    // Bruhat comparisons gate which Pluecker coordinates survive restriction
    let below = IndexSet::new(vec![1, 2, 7], 8)?;
    println!(
        "\n({below}) <= ({i}) in Bruhat order: {}",
        below.bruhat_leq(&i)?
    );

    // everything under (1,3,7) inside I^Sp_(3,8)
    let under = enumerate_indices(3, 8, true, Some(&i))?;
    println!("symplectic indices below ({i}): {}", under.len());
    Ok(())
}
