//! The order complex: facets, f- and h-vectors, links, joins and cones.

use bsposet::complex::{bs_order_complex, downset_upset_split, SimplicialComplex};
use bsposet::BSBounds;

fn main() -> bsposet::Result<()> {
    let bounds = BSBounds::parse("1,3", "3,4")?;
    let delta = bs_order_complex(&bounds)?;
    for f in delta.facets() {
        println!("facet {{{}}}", f.join(" "));
    }
    let fh = delta.f_vector()?;
    println!("f = {:?}, h = {:?}", fh.f, fh.h()?);
    println!("flag: {}, minimal nonfaces {:?}", delta.is_flag()?, delta.minimal_nonfaces()?);

    // the link of an element splits into the chains below and above it
    let d = "2,3".parse()?;
    let link = delta.link(&["2,3"])?;
    let (below, above) = downset_upset_split(&bounds, &d)?;
    println!("link(2,3) = {:?}", link.facets());
    println!("  below {:?} * above {:?}", below.facets(), above.facets());
    assert_eq!(below.join(&above)?, link);

    println!("deletion(1,4) = {:?}", delta.deletion(&["1,4"])?.facets());

    let square = SimplicialComplex::from_facets([["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]);
    let cone = square.cone("x")?;
    println!("cone over the square: {:?}", cone.facets());
    println!("{}", serde_json::to_string(&delta).expect("serializable"));
    Ok(())
}
