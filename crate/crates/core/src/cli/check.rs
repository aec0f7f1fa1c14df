use std::collections::HashSet;

use clap::ValueEnum;
use serde::Serialize;

use crate::analysis;
use crate::complex::{self, SimplicialComplex};
use crate::decomp;
use crate::error::{resource, Result};
use crate::hasse::HasseDiagram;
use crate::iso::is_order_isomorphism;
use crate::poset;
use crate::rao;
use crate::sequence::{BSBounds, Limits};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Lattice,
    Pure,
    Flag,
    Vd,
    Rao,
    Counts,
    Dual,
    Covers,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Brute-force checks are cubic in the element count.
const BRUTE_FORCE_MAX: usize = 400;

const ALL: [Suite; 8] = [
    Suite::Lattice,
    Suite::Pure,
    Suite::Flag,
    Suite::Vd,
    Suite::Rao,
    Suite::Counts,
    Suite::Dual,
    Suite::Covers,
];

pub fn run_suite(bounds: &BSBounds, suite: Suite, limits: &Limits) -> Result<Vec<CheckOutcome>> {
    let h = HasseDiagram::from_bounds_with(bounds, limits)?;
    let needs_complex = matches!(suite, Suite::All | Suite::Pure | Suite::Flag | Suite::Vd);
    let c = if needs_complex { Some(complex::order_complex_with(&h, limits)?) } else { None };
    let suites: Vec<Suite> = if suite == Suite::All { ALL.to_vec() } else { vec![suite] };
    suites
        .into_iter()
        .map(|s| {
            let c = c.as_ref();
            match s {
                Suite::Lattice => lattice(&h),
                Suite::Pure => pure(bounds, &h, c.expect("built above")),
                Suite::Flag => flag(&h, c.expect("built above")),
                Suite::Vd => vd(c.expect("built above")),
                Suite::Rao => atom_ordering(bounds, &h),
                Suite::Counts => counts(bounds, limits),
                Suite::Dual => dual(bounds, &h),
                Suite::Covers => covers(&h),
                Suite::All => unreachable!(),
            }
        })
        .collect()
}

fn outcome(name: &'static str, pass: bool, detail: impl Into<String>) -> Result<CheckOutcome> {
    Ok(CheckOutcome { name, pass, detail: detail.into() })
}

fn brute_force_guard(h: &HasseDiagram) -> Result<()> {
    if h.len() > BRUTE_FORCE_MAX {
        return resource(format!(
            "brute-force check over {} elements exceeds {BRUTE_FORCE_MAX}",
            h.len()
        ));
    }
    Ok(())
}

/// Every pair has a meet and a join, they are the componentwise min and max,
/// and they are the greatest lower and least upper bounds among all elements.
fn lattice(h: &HasseDiagram) -> Result<CheckOutcome> {
    brute_force_guard(h)?;
    let n = h.len();
    let els = h.elements();
    for a in 0..n {
        for b in a + 1..n {
            let pair = [els[a].clone(), els[b].clone()];
            let (Some(m), Some(j)) = (
                h.index_of(&poset::meet(&pair)?),
                h.index_of(&poset::join(&pair)?),
            ) else {
                return outcome("lattice", false, format!("{:?}, {:?} lack a meet or join", pair[0], pair[1]));
            };
            let glb = (0..n).all(|z| !(h.leq(z, a) && h.leq(z, b)) || h.leq(z, m));
            let lub = (0..n).all(|z| !(h.leq(a, z) && h.leq(b, z)) || h.leq(j, z));
            if !glb || !lub {
                return outcome("lattice", false, format!("{:?}, {:?} violate the universal property", pair[0], pair[1]));
            }
        }
    }
    let bounded = h.is_bounded();
    outcome("lattice", bounded, format!("{} pairs", n * n.saturating_sub(1) / 2))
}

/// Every maximal chain has as many steps as the step budget.
fn pure(bounds: &BSBounds, h: &HasseDiagram, c: &SimplicialComplex) -> Result<CheckOutcome> {
    let budget = bounds.step_budget() as isize;
    let ok = h.is_pure() && c.is_pure() && c.dimension() == Some(budget);
    outcome("pure", ok, format!("{} facets of dimension {budget}", c.num_facets()))
}

/// The minimal nonfaces are exactly the incomparable pairs.
fn flag(h: &HasseDiagram, c: &SimplicialComplex) -> Result<CheckOutcome> {
    let nonfaces: HashSet<Vec<String>> = c.minimal_nonfaces()?.into_iter().collect();
    let mut incomparable = HashSet::new();
    for a in 0..h.len() {
        for b in a + 1..h.len() {
            if !h.leq(a, b) && !h.leq(b, a) {
                incomparable.insert(vec![h.elements()[a].label(), h.elements()[b].label()]);
            }
        }
    }
    let ok = nonfaces == incomparable;
    outcome("flag", ok, format!("{} minimal nonfaces", nonfaces.len()))
}

/// A certificate exists, replays, and yields a shelling with a nonnegative
/// h-vector that agrees with the face counts.
fn vd(c: &SimplicialComplex) -> Result<CheckOutcome> {
    let Some(tree) = decomp::is_vertex_decomposable(c)? else {
        return outcome("vd", false, "no shedding tree found");
    };
    if !decomp::verify_certificate(c, &tree) {
        return outcome("vd", false, "certificate does not replay");
    }
    let order = decomp::shelling_from_tree(c, &tree)?;
    if !decomp::is_shelling(c, &order)? {
        return outcome("vd", false, "certificate order is not a shelling");
    }
    let h = decomp::h_vector_from_shelling(&order);
    let from_faces = c.f_vector()?.h()?.to_vec();
    let ok = h.iter().all(|&x| x >= 0) && h == from_faces;
    outcome("vd", ok, format!("h = {h:?}"))
}

fn atom_ordering(bounds: &BSBounds, h: &HasseDiagram) -> Result<CheckOutcome> {
    let ordering = rao::lex_atom_ordering(bounds);
    let ok = rao::verify_rao(h, &ordering)?;
    outcome("rao", ok, format!("{} atoms in lexicographic order", ordering.atoms().len()))
}

fn counts(bounds: &BSBounds, limits: &Limits) -> Result<CheckOutcome> {
    let r = analysis::count_report_with(bounds, limits)?;
    outcome(
        "counts",
        r.consistent(),
        format!("{} <= {} <= {}, {} <= {} <= {}", r.vertex_lower, r.vertex_count, r.vertex_upper, r.facet_lower, r.facet_count, r.facet_upper),
    )
}

/// The constructive dual map is an isomorphism from the reversed poset.
fn dual(bounds: &BSBounds, h: &HasseDiagram) -> Result<CheckOutcome> {
    let iso = analysis::dual_bounds(bounds)?;
    let target = HasseDiagram::from_bounds(&iso.target)?;
    let map = iso.index_map(h, &target)?;
    let ok = is_order_isomorphism(&h.reversed(), &target, &map);
    outcome("dual", ok, format!("target {}", iso.target))
}

/// Cover edges agree with the transitive reduction of `<=`.
fn covers(h: &HasseDiagram) -> Result<CheckOutcome> {
    brute_force_guard(h)?;
    let reference = HasseDiagram::from_relation(h.elements().to_vec(), |a, b| {
        a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
    })?;
    let ok = reference.edges() == h.edges();
    outcome("covers", ok, format!("{} edges", h.edges().len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_poset_passes_everything() {
        let b = BSBounds::parse("1,3", "3,4").unwrap();
        let out = run_suite(&b, Suite::All, &Limits::default()).unwrap();
        let names: Vec<&str> = out.iter().map(|o| o.name).collect();
        assert_eq!(names, ["lattice", "pure", "flag", "vd", "rao", "counts", "dual", "covers"]);
        assert!(out.iter().all(|o| o.pass), "{out:?}");
    }

    #[test]
    fn single_suites() {
        let b = BSBounds::parse("1,3,4", "2,5,6").unwrap();
        for s in ALL {
            let out = run_suite(&b, s, &Limits::default()).unwrap();
            assert_eq!(out.len(), 1);
            assert!(out[0].pass, "{out:?}");
        }
    }
}
