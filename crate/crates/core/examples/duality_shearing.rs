//! The order-reversing dual and the shearing isomorphisms, with each map
//! checked element by element.

use bsposet::analysis::{dual_bounds, is_self_dual_arith, shear};
use bsposet::BSBounds;

fn main() -> bsposet::Result<()> {
    for (lo, hi) in [("1,3", "3,4"), ("0,1", "1,2"), ("0,2,4", "3,5,7")] {
        let bounds = BSBounds::parse(lo, hi)?;
        let iso = dual_bounds(&bounds)?;
        println!(
            "{bounds} reverses onto {} (verified {}, arithmetic self-duality {})",
            iso.target,
            iso.verify()?,
            is_self_dual_arith(&bounds)
        );
    }

    for (p, k) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)] {
        let iso = shear(p, k)?;
        println!("shear({p},{k}): {} ~ {} ({} elements, verified {})", iso.source, iso.target, iso.map.len(), iso.verify()?);
    }
    println!("{}", serde_json::to_string(&shear(2, 1)?).expect("serializable"));
    Ok(())
}
