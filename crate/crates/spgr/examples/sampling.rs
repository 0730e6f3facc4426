//! Deterministic exact-rational samplers: isotropic subspaces, Schubert
//! cells in both types, and symplectic flags, with their membership audits.
//!
//! Run with `cargo run --example sampling`.

use spgr::combinat::{FlagWord, IndexSet};
use spgr::equations::build_e;
use spgr::sampler::{sample_flag, sample_isotropic, sample_schubert, SampleConfig};

fn main() -> spgr::Result<()> {
    let cfg = SampleConfig::with_seed(2024);

    // an isotropic 3-plane in k^8, exact rational entries
    let p = sample_isotropic(3, 8, &cfg, 0)?;
    println!(
        "isotropic sample in Gr(3,8): rank {} of {}, isotropic = {}",
        p.matrix().rank(),
        p.d(),
        p.is_isotropic()
    );

    // every section vanishes there, as an exact rational zero
    let e = build_e(&IndexSet::new(vec![2], 8)?, 4)?;
    println!("E_(2) at the sample: {}", e.evaluate(&p)?);

    // a type-C Schubert cell point: support conditions + isotropy
    let i = IndexSet::new(vec![1, 3, 7], 8)?;
    let q = sample_schubert(&i, true, &cfg, 0)?;
    println!(
        "\ncell sample for ({i}): p_i = {}, isotropic = {}",
        q.plucker(&i)?,
        q.is_isotropic()
    );

    // type-A cell points witness nonvanishing restrictions
    let e1 = build_e(&IndexSet::new(vec![1], 8)?, 4)?;
    let q = sample_schubert(&i, false, &cfg, 1)?;
    println!("E_(1) at a type-A cell sample: {}", e1.evaluate(&q)?);

    // a symplectic flag: all prefix charts hit, top prefix isotropic
    let w = FlagWord::new(vec![5, 1, 4], 6)?;
    let f = sample_flag(&w, true, &cfg, 0)?;
    for d in 1..=3 {
        let chart = f.prefix(d)?.plucker(&w.prefix(d)?)?;
        println!("flag ({w}) prefix {d}: chart coordinate = {chart}");
    }
    println!(
        "top prefix isotropic = {}",
        f.prefix(3)?.is_isotropic()
    );

    // determinism: the same (seed, draw) reproduces the same point
    let again = sample_isotropic(3, 8, &cfg, 0)?;
    println!(
        "\nsame seed and draw reproduce the sample: {}",
        again.matrix() == p.matrix()
    );
    Ok(())
}
