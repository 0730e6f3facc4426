//! Tangent spaces at the identity coset: free chart coordinates, the
//! codimension cut by the symplectic hyperplanes (exact rank vs closed
//! form), and the smoothness verdicts — including an index that is smooth
//! in type A but singular in type C.
//!
//! Run with `cargo run --example tangent`.

use spgr::combinat::IndexSet;
use spgr::schubert::{
    smooth_a, smooth_c, tangent_codim_c_closed_form, tangent_codim_c_direct, tangent_dim_a,
};

fn main() -> spgr::Result<()> {
    for entries in [vec![1usize, 3, 7], vec![1, 6, 7], vec![5, 6], vec![6, 7, 8]] {
        let i = IndexSet::new(entries, 8)?;
        let dim = tangent_dim_a(&i);
        let direct = tangent_codim_c_direct(&i)?;
        let closed = tangent_codim_c_closed_form(&i)?;
        let (la, lc) = i.dims()?;
        println!(
            "i = ({i}): tangent dim {dim} (dim X^A = {la}), codim cut {direct} \
             (closed form {closed}), dim X^C = {lc}"
        );
        println!(
            "    smooth_a = {}, smooth_c = {}",
            smooth_a(&i),
            smooth_c(&i)?
        );
    }
    println!(
        "\n(5,6) inside Gr(2,8) is the gap witness: the type-A variety is smooth, \
         the symplectic one is not."
    );
    Ok(())
}
