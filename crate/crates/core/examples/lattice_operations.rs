//! Meets, joins, intervals and reduction of fixed coordinates.

use bsposet::{poset, BSBounds, DegreeSequence};

fn ds(s: &str) -> DegreeSequence {
    s.parse().expect("valid literal")
}

fn main() -> bsposet::Result<()> {
    let bounds = BSBounds::parse("1,3,4", "2,5,6")?;

    let pair = [ds("1,4,5"), ds("2,3,4")];
    println!("meet {:?} = {:?}", pair, poset::meet(&pair)?);
    println!("join {:?} = {:?}", pair, poset::join(&pair)?);
    println!("{:?} <= {:?}: {}", pair[0], pair[1], poset::leq(&pair[0], &pair[1])?);

    // every interval is again a poset of the same kind
    let iv = poset::interval(&bounds, &ds("1,3,5"), &ds("2,4,6"))?;
    println!("[1,3,5 .. 2,4,6] = {iv} with {} elements", poset::enumerate(&iv)?.len());

    let wide = BSBounds::parse("0,2,5", "1,2,7")?;
    let r = poset::reduce(&wide);
    println!("reduce {wide} -> {:?} (kept {:?})", r.reduced, r.kept);
    for d in poset::enumerate(&wide)? {
        println!("  {d} -> {}", r.project(&d).expect("nonempty reduction"));
    }
    Ok(())
}
