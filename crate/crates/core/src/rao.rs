//! Recursive atom orderings of bounded pure posets.
//!
//! An ordering `a_1, ..., a_t` of the atoms of `P` is recursive when
//!
//! 1. every upper interval `[a_j, 1]` has a recursive atom ordering in which
//!    the atoms covering some earlier `a_i` come first, and
//! 2. for `i < j` and every common upper bound `y` of `a_i, a_j` there are
//!    `k < j` and `z` covering both `a_k` and `a_j` with `z <= y`.
//!
//! Posets whose maximal chains have length at most one qualify trivially.
//! Every interval met by the recursion has the form `[x, 1]`, so existence
//! results are memoized per `(x, atoms required first)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, resource, Result};
use crate::hasse::HasseDiagram;
use crate::poset;
use crate::sequence::{BSBounds, DegreeSequence};

/// An ordering of the atoms of a bounded poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AtomOrdering(pub Vec<DegreeSequence>);

impl AtomOrdering {
    pub fn atoms(&self) -> &[DegreeSequence] {
        &self.0
    }
}

/// Atoms sorted lexicographically, smallest first.
///
/// Equivalently: by decreasing index of the incremented coordinate.
pub fn lex_atom_ordering(bounds: &BSBounds) -> AtomOrdering {
    let mut atoms = poset::atoms(bounds);
    atoms.sort();
    AtomOrdering(atoms)
}

/// Largest number of orderings tried per interval once the lexicographic
/// candidate fails.
const MAX_PERMUTATIONS: usize = 40_320;

/// Checks whether `ordering` is a recursive atom ordering of `p`.
pub fn verify_rao(p: &HasseDiagram, ordering: &AtomOrdering) -> Result<bool> {
    let (Some(bottom), Some(top)) = (p.bottom(), p.top()) else {
        return invalid("recursive atom orderings need a bounded poset");
    };
    if !p.is_pure() {
        return invalid("recursive atom orderings need a pure poset");
    }
    if interval_length_at_most_one(p, bottom, top) {
        return Ok(true);
    }
    let mut order = Vec::with_capacity(ordering.0.len());
    for a in &ordering.0 {
        match p.index_of(a) {
            Some(i) => order.push(i),
            None => return invalid(format!("{a:?} is not an element of the poset")),
        }
    }
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != p.upper_covers(bottom) {
        return invalid("ordering must list every atom exactly once");
    }
    RaoSearch { p, top, memo: HashMap::new() }.check(&order)
}

fn interval_length_at_most_one(p: &HasseDiagram, x: usize, top: usize) -> bool {
    x == top || p.upper_covers(x) == [top]
}

struct RaoSearch<'a> {
    p: &'a HasseDiagram,
    top: usize,
    memo: HashMap<(usize, Vec<usize>), bool>,
}

impl RaoSearch<'_> {
    /// Conditions (1) and (2) for an ordering of the atoms of `[x, 1]`.
    fn check(&mut self, order: &[usize]) -> Result<bool> {
        let p = self.p;
        let mut earlier_covers: Vec<usize> = Vec::new();
        let mut required = Vec::with_capacity(order.len());
        for &a in order {
            // elements covering `a` and some earlier atom
            let mut shared: Vec<usize> = p
                .upper_covers(a)
                .iter()
                .copied()
                .filter(|z| earlier_covers.contains(z))
                .collect();
            shared.sort_unstable();
            earlier_covers.extend_from_slice(p.upper_covers(a));
            required.push(shared);
        }

        for (j, &aj) in order.iter().enumerate().skip(1) {
            let witnesses = &required[j];
            for y in (0..p.len()).filter(|&y| p.leq(aj, y)) {
                let shares_earlier = order[..j].iter().any(|&ai| p.leq(ai, y));
                if shares_earlier && !witnesses.iter().any(|&z| p.leq(z, y)) {
                    return Ok(false);
                }
            }
        }

        for (j, &aj) in order.iter().enumerate() {
            if !self.admits(aj, &required[j])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `[x, 1]` has a recursive atom ordering listing `first` first.
    fn admits(&mut self, x: usize, first: &[usize]) -> Result<bool> {
        if interval_length_at_most_one(self.p, x, self.top) {
            return Ok(true);
        }
        let key = (x, first.to_vec());
        if let Some(&hit) = self.memo.get(&key) {
            return Ok(hit);
        }
        let rest: Vec<usize> = self
            .p
            .upper_covers(x)
            .iter()
            .copied()
            .filter(|a| !first.contains(a))
            .collect();

        // lexicographic candidate first
        let lex: Vec<usize> = first.iter().chain(&rest).copied().collect();
        let mut ok = self.check(&lex)?;
        if !ok {
            let total = factorial(first.len()).saturating_mul(factorial(rest.len()));
            if total > MAX_PERMUTATIONS {
                return resource(format!(
                    "atom ordering search over {total} permutations exceeds the cap {MAX_PERMUTATIONS}"
                ));
            }
            'outer: for head in permutations(first) {
                for tail in permutations(&rest) {
                    let candidate: Vec<usize> = head.iter().chain(&tail).copied().collect();
                    if candidate != lex && self.check(&candidate)? {
                        ok = true;
                        break 'outer;
                    }
                }
            }
        }
        self.memo.insert(key, ok);
        Ok(ok)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(k))
}

/// All permutations in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
