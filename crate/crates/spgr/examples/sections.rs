//! Building the linear sections that cut the symplectic Grassmannian out of
//! the full one, restricting them to a Schubert variety, and evaluating
//! them at exact points.
//!
//! Run with `cargo run --example sections`.

use spgr::combinat::IndexSet;
use spgr::equations::{build_e, restrict, restriction_zero};
use spgr::pluecker::SubspaceMatrix;

fn main() -> spgr::Result<()> {
    // E_3 over Gr(3,8): three Pluecker terms with inversion-count signs
    let i_prime = IndexSet::new(vec![3], 8)?;
    let e3 = build_e(&i_prime, 4)?;
    println!("E_(3) = {e3:?}");
    println!("as JSON:\n{}", e3.to_json());

    // restriction to X^A((1,3,7)) keeps only Bruhat-reachable terms
    let i = IndexSet::new(vec![1, 3, 7], 8)?;
    for entries in [vec![1usize], vec![2], vec![7]] {
        let ip = IndexSet::new(entries, 8)?;
        let e = build_e(&ip, 4)?;
        let r = restrict(&e, &i)?;
        println!(
            "E_({ip}) restricted to X^A(({i})): {} (zero test: {})",
            if r.is_zero() {
                "0".to_string()
            } else {
                format!("{r:?}")
            },
            restriction_zero(&ip, &i)?
        );
    }

    // sections vanish identically on coordinate points of symplectic cells
    let point = SubspaceMatrix::coordinate_point(&i);
    let e1 = build_e(&IndexSet::new(vec![1], 8)?, 4)?;
    println!(
        "E_(1) at the coordinate point of ({i}): {}",
        e1.evaluate(&point)?
    );
    Ok(())
}
