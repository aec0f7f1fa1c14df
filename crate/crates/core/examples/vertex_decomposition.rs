//! Shedding vertices, a decomposition certificate, and the shelling it
//! induces.

use bsposet::complex::bs_order_complex;
use bsposet::decomp::{self, Decomposer};
use bsposet::BSBounds;

fn main() -> bsposet::Result<()> {
    let bounds = BSBounds::parse("1,3,4", "2,5,6")?;
    let delta = bs_order_complex(&bounds)?;
    println!("{} facets of dimension {:?}", delta.num_facets(), delta.dimension());

    let mut dec = Decomposer::new();
    println!("shedding vertices: {:?}", dec.shedding_vertices(&delta)?);

    let tree = dec.decompose(&delta)?.expect("vertex-decomposable");
    assert!(decomp::verify_certificate(&delta, &tree));
    println!("certificate with {} nodes", tree.node_count());
    println!("{}", serde_json::to_string(&tree).expect("serializable"));

    let order = decomp::shelling_from_tree(&delta, &tree)?;
    assert!(decomp::is_shelling(&delta, &order)?);
    for f in &order {
        println!("  {}", f.join(" "));
    }
    println!("h from shelling = {:?}", decomp::h_vector_from_shelling(&order));
    println!("h from faces    = {:?}", delta.f_vector()?.h()?);
    Ok(())
}
