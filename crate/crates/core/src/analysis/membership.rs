use serde::{Deserialize, Serialize};

use crate::error::{invalid, resource, Result};
use crate::hasse::HasseDiagram;
use crate::iso::poset_isomorphic;
use crate::poset;
use crate::sequence::{BSBounds, DegreeSequence, Limits};

/// Bounds whose poset is isomorphic to the input, with the isomorphism as
/// `(input element, poset element)` pairs in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipWitness {
    pub bounds: BSBounds,
    pub map: Vec<(DegreeSequence, DegreeSequence)>,
}

/// Largest window accepted by [`bs_membership_search`].
const MAX_WINDOW: i64 = 64;
/// Largest number of candidate bounds examined.
const MAX_CANDIDATES: usize = 2_000_000;

/// Looks for bounds with entries in `[0, window]` whose poset is isomorphic
/// to `p`, returning the lexicographically least match.
///
/// Only reduced, translated candidates are generated: `lower_0 = 0`,
/// `lower_i < upper_i` in every coordinate (fixed coordinates can be dropped
/// without changing the poset) and step budget equal to the rank of `p`.
/// `None` only means no match exists inside the window.
pub fn bs_membership_search(p: &HasseDiagram, window: i64) -> Result<Option<MembershipWitness>> {
    if window < 0 {
        return invalid(format!("window must be non-negative, got {window}"));
    }
    if window > MAX_WINDOW {
        return resource(format!("window {window} exceeds the limit {MAX_WINDOW}"));
    }
    // every nonempty Boij-Soderberg poset is a pure bounded lattice
    if p.is_empty() || !p.is_bounded() || !p.is_pure() {
        return Ok(None);
    }
    let rank = p.rank() as i64;
    let limits = Limits { max_elements: p.len(), ..Limits::default() };

    for bounds in candidates(rank, window)? {
        match poset::enumerate_with(&bounds, &limits) {
            Ok(els) if els.len() == p.len() => {}
            _ => continue,
        }
        let q = HasseDiagram::from_bounds_with(&bounds, &limits)?;
        if let Some(m) = poset_isomorphic(p, &q) {
            let map = m
                .iter()
                .enumerate()
                .map(|(i, &j)| (p.elements()[i].clone(), q.elements()[j].clone()))
                .collect();
            return Ok(Some(MembershipWitness { bounds, map }));
        }
    }
    Ok(None)
}

/// All candidate bounds in increasing order.
fn candidates(rank: i64, window: i64) -> Result<Vec<BSBounds>> {
    if rank == 0 {
        return Ok(vec![BSBounds::from_vecs(vec![0], vec![0])?]);
    }
    let mut out = Vec::new();
    let mut lower = vec![0];
    let mut steps = Vec::new();
    lowers(rank, window, &mut lower, &mut steps, &mut out)?;
    out.sort();
    Ok(out)
}

/// Extends `lower` one coordinate at a time, choosing each step
/// `upper_i - lower_i >= 1` alongside so the budget can be tracked.
fn lowers(
    rank: i64,
    window: i64,
    lower: &mut Vec<i64>,
    steps: &mut Vec<i64>,
    out: &mut Vec<BSBounds>,
) -> Result<()> {
    let used: i64 = steps.iter().sum();
    let i = lower.len() - 1;
    let last = lower[i];
    let prev_upper = if i == 0 { None } else { Some(lower[i - 1] + steps[i - 1]) };
    for step in 1..=rank - used {
        let upper = last + step;
        if upper > window || prev_upper.is_some_and(|u| upper <= u) {
            continue;
        }
        steps.push(step);
        if used + step == rank {
            if out.len() >= MAX_CANDIDATES {
                return resource(format!("more than {MAX_CANDIDATES} candidate bounds"));
            }
            let up: Vec<i64> = lower.iter().zip(steps.iter()).map(|(l, s)| l + s).collect();
            out.push(BSBounds::from_vecs(lower.clone(), up)?);
        } else {
            for next in last + 1..window {
                lower.push(next);
                lowers(rank, window, lower, steps, out)?;
                lower.pop();
            }
        }
        steps.pop();
    }
    Ok(())
}
