//! The identity checkers with their pinned signs: the chart pairing
//! identity (symbolically and sampled), the chart-local expansion, and the
//! even-half partition identity.
//!
//! Run with `cargo run --example identities`.

use spgr::combinat::IndexSet;
use spgr::equations::{
    check_local_relation, check_pairing_identity, lemma_partition_identity, IdentityMode,
};

fn main() -> spgr::Result<()> {
    // C(M,1,2) * p_123 = +E_3 as an exact polynomial identity in the
    // 15-variable chart of A_(1,2,3) inside Gr(3,8)
    let i = IndexSet::new(vec![1, 2, 3], 8)?;
    let r = check_pairing_identity(&i, 1, 2, IdentityMode::Symbolic, 1, 0)?;
    println!(
        "pairing identity on A_({i}): holds = {}, sign = {:+} (expected (-1)^(s+t+1))",
        r.holds, r.pinned_sign
    );

    // the same identity sampled at 200 random standard presentations
    let i = IndexSet::new(vec![2, 4, 7], 10)?;
    let r = check_pairing_identity(&i, 1, 3, IdentityMode::Sampled, 200, 42)?;
    println!(
        "sampled on A_({i}) (s,t)=(1,3): holds = {}, sign = {:+}, trials = {}",
        r.holds, r.pinned_sign, r.trials
    );

    // the local expansion of E_(3) over the chart A_(1,2,4): global sign -1
    let j_prime = IndexSet::new(vec![3], 8)?;
    let i = IndexSet::new(vec![1, 2, 4], 8)?;
    let r = check_local_relation(&j_prime, &i, 60, 7)?;
    println!(
        "local relation E_(3) on A_({i}): holds = {}, global sign = {:+}",
        r.holds, r.pinned_sign
    );

    // partition identity: one pinned sign per half-size m
    for (m, half) in [(1usize, vec![1usize]), (2, vec![1, 3]), (3, vec![2, 3, 5])] {
        let r = lemma_partition_identity(&half, m)?;
        println!(
            "partition identity m = {m}, half = {half:?}: holds = {}, sign = {:+}",
            r.holds, r.pinned_sign
        );
    }
    Ok(())
}
