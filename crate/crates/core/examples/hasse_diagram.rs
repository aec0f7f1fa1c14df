//! Elements, covers and maximal chains of a small poset, with the Hasse
//! diagram in DOT form.
//!
//! ```text
//! cargo run --example hasse_diagram | dot -Tsvg > hasse.svg
//! ```

use bsposet::cli::emit_dot;
use bsposet::{poset, BSBounds, HasseDiagram};

fn main() -> bsposet::Result<()> {
    let bounds = BSBounds::parse("1,3", "3,4")?;

    let elements = poset::enumerate(&bounds)?;
    eprintln!("{} elements, step budget {}", elements.len(), bounds.step_budget());
    for d in &elements {
        let covers: Vec<String> = poset::covers(&bounds, d)?.iter().map(|c| c.label()).collect();
        eprintln!("  {:<4} covered by [{}]", d.label(), covers.join("; "));
    }

    for chain in poset::maximal_chains(&bounds)? {
        let labels: Vec<String> = chain.elements().iter().map(|d| d.label()).collect();
        eprintln!("chain: {}", labels.join(" < "));
    }

    print!("{}", emit_dot(&HasseDiagram::from_bounds(&bounds)?));
    Ok(())
}
