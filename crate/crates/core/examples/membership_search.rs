//! Searching a window of bounds for a poset isomorphic to a given one.
//! Deleting a shedding vertex leaves a poset with no such presentation
//! inside the window.

use bsposet::analysis::bs_membership_search;
use bsposet::{BSBounds, HasseDiagram};

fn main() -> bsposet::Result<()> {
    let bounds = BSBounds::parse("1,3", "3,4")?;
    let found = bs_membership_search(&HasseDiagram::from_bounds(&bounds)?, 6)?;
    println!("{bounds}: found {:?}", found.map(|w| w.bounds));

    let full = HasseDiagram::from_bounds(&BSBounds::parse("1,3,4", "2,5,6")?)?;
    for v in ["1,3,6", "1,4,5", "1,5,6", "2,3,4", "2,3,6", "2,4,5"] {
        let deleted = full.without(&v.parse()?)?;
        let found = bs_membership_search(&deleted, 8)?;
        println!("without {v}: {}", match found {
            Some(w) => format!("isomorphic to {}", w.bounds),
            None => "absent within window 8".to_string(),
        });
    }
    Ok(())
}
