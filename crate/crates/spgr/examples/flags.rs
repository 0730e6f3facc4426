//! The flag layer: words and their prefix sets, flag Schubert dimensions,
//! the local-complete-intersection pattern, and the cross-degree section
//! relation with its matched column pair.
//!
//! Run with `cargo run --example flags`.

use spgr::combinat::{enumerate_flag_words, FlagWord};
use spgr::equations::check_flag_relation;
use spgr::schubert::flag_is_lci;

fn main() -> spgr::Result<()> {
    let words = enumerate_flag_words(2, true)?;
    println!("the {} symplectic words at n = 2:", words.len());
    for w in &words {
        let (da, dc) = w.dims()?;
        println!("  ({w}): dim X^A = {da}, dim X^C = {dc}, lci = {}", flag_is_lci(w)?);
    }

    // a partial word over a larger ambient: the dimension formulas only
    let w = FlagWord::new(vec![3, 1, 7], 8)?;
    let (da, dc) = w.dims()?;
    println!("\npartial word ({w}) over 2n = 8: dims = ({da}, {dc})");

    // the cross-degree relation: same section data read at two prefixes;
    // an interleaving third value flips the sign
    for values in [vec![1usize, 2, 3], vec![1, 3, 2], vec![5, 6, 3]] {
        let w = FlagWord::new(values, 6)?;
        let r = check_flag_relation(&w, 2, 3, 1, 2, 10, 5)?;
        println!(
            "w = ({w}): E-ratio at prefixes 2 and 3 matches columns ({},{}) \
             with sign {:+} (holds = {})",
            r.s_prime, r.t_prime, r.report.pinned_sign, r.report.holds
        );
    }
    Ok(())
}
