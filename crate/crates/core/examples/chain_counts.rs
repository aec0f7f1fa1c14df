//! Closed forms for vertex and maximal chain counts, checked against
//! enumeration, and the bounds for arbitrary posets.

use bsposet::analysis::{count_report, facet_count_formula, vertex_count_formula};
use bsposet::{poset, BSBounds};

fn main() -> bsposet::Result<()> {
    println!(" p  k  vertices  chains");
    for p in 0..=3 {
        for k in 1..=3 {
            let bounds = BSBounds::from_vecs((0..=p).collect(), (k..=p + k).collect())?;
            let v = poset::enumerate(&bounds)?.len();
            let n = poset::maximal_chains(&bounds)?.len();
            assert_eq!(vertex_count_formula(p, k)?, v.into());
            assert_eq!(facet_count_formula(p, k)?, n.into());
            println!("{p:>2} {k:>2} {v:>9} {n:>7}");
        }
    }
    println!("f(9,9) = {}", facet_count_formula(9, 9)?);

    for (lo, hi) in [("1,3", "3,4"), ("0,1", "2,3"), ("0,2,3", "4,5,7")] {
        let r = count_report(&BSBounds::parse(lo, hi)?)?;
        println!(
            "({lo}) .. ({hi}): {} <= v={} <= {}, {} <= n={} <= {}; exponent-p bound {} {}",
            r.vertex_lower,
            r.vertex_count,
            r.vertex_upper,
            r.facet_lower,
            r.facet_count,
            r.facet_upper,
            r.printed_vertex_upper,
            if r.printed_vertex_upper_holds { "holds" } else { "fails" },
        );
    }
    Ok(())
}
