//! Lexicographic atom orderings, checked for the recursive property.

use bsposet::rao::{lex_atom_ordering, verify_rao, AtomOrdering};
use bsposet::{BSBounds, DegreeSequence, HasseDiagram};

fn main() -> bsposet::Result<()> {
    for (lo, hi) in [("1,3", "3,4"), ("1,3,4", "2,5,6"), ("0,1,2", "3,4,5")] {
        let bounds = BSBounds::parse(lo, hi)?;
        let h = HasseDiagram::from_bounds(&bounds)?;
        let ordering = lex_atom_ordering(&bounds);
        println!("{bounds}: atoms {:?} recursive {}", ordering.atoms(), verify_rao(&h, &ordering)?);
    }

    // two chains glued only at the ends: no ordering satisfies the exchange condition
    let els: Vec<DegreeSequence> = (0..6).map(|i| DegreeSequence::new(vec![i])).collect::<Result<_, _>>()?;
    let h = HasseDiagram::from_covers(els.clone(), vec![(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])?;
    let ordering = AtomOrdering(vec![els[1].clone(), els[2].clone()]);
    println!("two disjoint chains: recursive {}", verify_rao(&h, &ordering)?);
    Ok(())
}
