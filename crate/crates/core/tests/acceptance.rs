//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! elapsed time; the test fails if any criterion fails or exceeds its
//! time budget. The lines go straight to stderr, so they show up without
//! `--nocapture`.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use bsposet::analysis::{
    bs_membership_search, count_report, dual_bounds, facet_count_formula, is_self_dual_arith,
    shear, vertex_count_formula,
};
use bsposet::complex::bs_order_complex;
use bsposet::decomp;
use bsposet::iso::{is_order_isomorphism, poset_isomorphic};
use bsposet::rao::{lex_atom_ordering, verify_rao};
use bsposet::{poset, BSBounds, DegreeSequence, HasseDiagram};
use num_bigint::BigUint;

use common::{consecutive, grid};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ds(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: bsposet::Error) -> String {
    err.to_string()
}

fn two_coordinate_poset() -> Outcome {
    let bounds = BSBounds::parse("1,3", "3,4").map_err(e)?;
    let h = HasseDiagram::from_bounds(&bounds).map_err(e)?;
    let labels: Vec<String> = h.elements().iter().map(|d| d.label()).collect();
    ensure(labels == ["1,3", "1,4", "2,3", "2,4", "3,4"], || format!("elements {labels:?}"))?;

    let edges: BTreeSet<(String, String)> = h
        .edges()
        .iter()
        .map(|&(a, b)| (h.elements()[a].label(), h.elements()[b].label()))
        .collect();
    let expected: BTreeSet<(String, String)> =
        [("1,3", "1,4"), ("1,3", "2,3"), ("1,4", "2,4"), ("2,3", "2,4"), ("2,4", "3,4")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
    ensure(edges == expected, || format!("edges {edges:?}"))?;

    let delta = bs_order_complex(&bounds).map_err(e)?;
    let facets: BTreeSet<Vec<&str>> = delta.facets().into_iter().collect();
    let expected: BTreeSet<Vec<&str>> =
        [vec!["1,3", "1,4", "2,4", "3,4"], vec!["1,3", "2,3", "2,4", "3,4"]].into_iter().collect();
    ensure(facets == expected, || format!("facets {facets:?}"))?;
    Ok("5 elements, 5 covers, 2 facets".into())
}

fn shedding_vertices_of_three_coordinate_poset() -> Outcome {
    let bounds = BSBounds::parse("1,3,4", "2,5,6").map_err(e)?;
    let n = poset::enumerate(&bounds).map_err(e)?.len();
    ensure(n == 12, || format!("{n} elements"))?;
    let delta = bs_order_complex(&bounds).map_err(e)?;
    let got: BTreeSet<String> = decomp::shedding_vertices(&delta).map_err(e)?.into_iter().collect();
    let expected: BTreeSet<String> = ["1,3,6", "1,4,5", "1,5,6", "2,3,4", "2,3,6", "2,4,5"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    ensure(got == expected, || format!("shedding vertices {got:?}"))?;
    Ok(format!("12 elements, shedding vertices {got:?}"))
}

fn consecutive_counts() -> Outcome {
    let mut checked = 0;
    for p in 0..=3 {
        for k in 1..=3 {
            let v = vertex_count_formula(p, k).map_err(e)?;
            if v > BigUint::from(500u32) {
                continue;
            }
            let b = consecutive(p, k);
            let els = poset::enumerate(&b).map_err(e)?.len();
            let chains = poset::maximal_chains(&b).map_err(e)?.len();
            ensure(v == BigUint::from(els), || format!("p={p} k={k}: {els} elements, formula {v}"))?;
            let f = facet_count_formula(p, k).map_err(e)?;
            ensure(f == BigUint::from(chains), || format!("p={p} k={k}: {chains} chains, formula {f}"))?;
            checked += 1;
        }
    }
    for (p, k, n) in [(1, 2, 2u32), (2, 2, 5), (2, 3, 42), (3, 2, 14)] {
        let f = facet_count_formula(p, k).map_err(e)?;
        ensure(f == BigUint::from(n), || format!("f({p},{k}) = {f}, expected {n}"))?;
    }
    Ok(format!("{checked} (p, k) pairs agree with enumeration"))
}

/// Greatest element of `candidates` under `leq`, if any.
fn greatest<'a>(
    candidates: &[&'a DegreeSequence],
    leq: impl Fn(&DegreeSequence, &DegreeSequence) -> bool,
) -> Option<&'a DegreeSequence> {
    candidates.iter().copied().find(|g| candidates.iter().all(|z| leq(z, g)))
}

fn lattice_subsets() -> Outcome {
    let below = |a: &DegreeSequence, b: &DegreeSequence| a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y);
    let above = |a: &DegreeSequence, b: &DegreeSequence| below(b, a);
    let mut posets = 0;
    let mut subsets = 0u64;
    for b in grid() {
        let els = poset::enumerate(&b).map_err(e)?;
        if els.len() > 12 {
            continue;
        }
        posets += 1;
        for mask in 0u32..(1 << els.len()) {
            let set: Vec<DegreeSequence> =
                (0..els.len()).filter(|i| mask >> i & 1 == 1).map(|i| els[i].clone()).collect();
            let lower: Vec<&DegreeSequence> = els.iter().filter(|z| set.iter().all(|s| below(z, s))).collect();
            let upper: Vec<&DegreeSequence> = els.iter().filter(|z| set.iter().all(|s| below(s, z))).collect();
            let glb = greatest(&lower, below).ok_or_else(|| format!("{b}: {set:?} has no meet"))?;
            let lub = greatest(&upper, above).ok_or_else(|| format!("{b}: {set:?} has no join"))?;
            if set.is_empty() {
                ensure(glb == b.upper() && lub == b.lower(), || format!("{b}: empty meet/join"))?;
            } else {
                let m = poset::meet(&set).map_err(e)?;
                let j = poset::join(&set).map_err(e)?;
                ensure(*glb == m && *lub == j, || format!("{b}: {set:?} meet {m:?} join {j:?}"))?;
            }
            subsets += 1;
        }
    }
    Ok(format!("{posets} posets, {subsets} subsets"))
}

fn vertex_decomposability() -> Outcome {
    let g = grid();
    for b in &g {
        let c = bs_order_complex(b).map_err(e)?;
        let tree = decomp::is_vertex_decomposable(&c).map_err(e)?.ok_or_else(|| format!("{b}: no certificate"))?;
        ensure(decomp::verify_certificate(&c, &tree), || format!("{b}: certificate does not replay"))?;
        let order = decomp::shelling_from_tree(&c, &tree).map_err(e)?;
        ensure(decomp::is_shelling(&c, &order).map_err(e)?, || format!("{b}: not a shelling"))?;
        let h = c.f_vector().map_err(e)?.h().map_err(e)?.to_vec();
        ensure(h.iter().all(|&x| x >= 0), || format!("{b}: h = {h:?}"))?;
        ensure(decomp::h_vector_from_shelling(&order) == h, || format!("{b}: shelling h differs"))?;
    }
    Ok(format!("{} grid posets", g.len()))
}

fn recursive_atom_ordering() -> Outcome {
    let g = grid();
    for b in &g {
        let h = HasseDiagram::from_bounds(b).map_err(e)?;
        ensure(verify_rao(&h, &lex_atom_ordering(b)).map_err(e)?, || format!("{b}: lex ordering fails"))?;
    }
    Ok(format!("{} grid posets", g.len()))
}

fn isomorphisms() -> Outcome {
    let g = grid();
    let mut self_dual = 0;
    for b in &g {
        let iso = dual_bounds(b).map_err(e)?;
        ensure(iso.verify().map_err(e)?, || format!("{b}: dual map fails"))?;
        let src = HasseDiagram::from_bounds(b).map_err(e)?;
        let tgt = HasseDiagram::from_bounds(&iso.target).map_err(e)?;
        let map = iso.index_map(&src, &tgt).map_err(e)?;
        ensure(is_order_isomorphism(&src.reversed(), &tgt, &map), || format!("{b}: dual map rejected by oracle"))?;
        if is_self_dual_arith(b) {
            self_dual += 1;
            ensure(poset_isomorphic(&src.reversed(), &src).is_some(), || format!("{b}: not self-dual"))?;
        }
    }
    let mut shears = 0;
    for p in 1..=3 {
        for k in 1..=p {
            let iso = shear(p, k).map_err(e)?;
            ensure(iso.verify().map_err(e)?, || format!("shear({p},{k}) fails"))?;
            shears += 1;
        }
    }
    Ok(format!("{} duals, {self_dual} self-dual, {shears} shears", g.len()))
}

fn count_bounds() -> Outcome {
    let g = grid();
    for b in &g {
        let r = count_report(b).map_err(e)?;
        ensure(r.consistent(), || format!("{b}: {r:?}"))?;
    }
    let r = count_report(&BSBounds::parse("0,1", "2,3").map_err(e)?).map_err(e)?;
    ensure(
        r.vertex_count == BigUint::from(6u32)
            && r.printed_vertex_upper == BigUint::from(4u32)
            && !r.printed_vertex_upper_holds,
        || format!("(0,1)..(2,3): {r:?}"),
    )?;
    Ok(format!("{} grid posets; exponent-p vertex bound fails at (0,1)..(2,3): v = 6 > C(4,1) = 4", g.len()))
}

fn deletion_non_membership() -> Outcome {
    let full = HasseDiagram::from_bounds(&BSBounds::parse("1,3,4", "2,5,6").map_err(e)?).map_err(e)?;
    for v in ["1,3,6", "1,4,5", "1,5,6", "2,3,4", "2,3,6", "2,4,5"] {
        let deleted = full.without(&ds(v)).map_err(e)?;
        if let Some(w) = bs_membership_search(&deleted, 8).map_err(e)? {
            return Err(format!("deleting {v} gives {}", w.bounds));
        }
    }
    Ok("6 deletions, none isomorphic to bounds within window 8".into())
}

/// Bypasses the test harness's output capture.
fn report(line: String) {
    let _ = writeln!(std::io::stderr().lock(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 elements, covers and facets of (1,3)..(3,4)", Duration::from_millis(1), two_coordinate_poset),
        ("2 shedding vertices of (1,3,4)..(2,5,6)", Duration::from_secs(5), shedding_vertices_of_three_coordinate_poset),
        ("3 closed-form vertex and chain counts", Duration::from_secs(30), consecutive_counts),
        ("4 meets and joins of all subsets", Duration::from_secs(10), lattice_subsets),
        ("5 vertex decomposition certificates", Duration::from_secs(60), vertex_decomposability),
        ("6 lexicographic recursive atom orderings", Duration::from_secs(60), recursive_atom_ordering),
        ("7 dual and shearing isomorphisms", Duration::from_secs(10), isomorphisms),
        ("8 vertex and chain count bounds", Duration::from_secs(5), count_bounds),
        ("9 deletions outside the window", Duration::from_secs(120), deletion_non_membership),
    ];
    let mut failed = Vec::new();
    for (name, budget, criterion) in criteria {
        let start = Instant::now();
        let result = criterion();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:?}, budget {budget:?}")),
            other => other.clone(),
        };
        match verdict {
            Ok(detail) => report(format!("PASS [{name}] {elapsed:.2?}: {detail}")),
            Err(why) => {
                report(format!("FAIL [{name}] {elapsed:.2?}: {why}"));
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
