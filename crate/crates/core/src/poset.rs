//! Order-theoretic operations on `Pi(lower, upper)`.
//!
//! Elements are never materialized as a graph here; everything is computed
//! directly from the bounds. [`crate::hasse::HasseDiagram`] builds the explicit
//! cover graph on top of these functions.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, resource, Result};
use crate::sequence::{BSBounds, DegreeSequence, Limits};

/// A strictly increasing sequence of poset elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Chain(Vec<DegreeSequence>);

impl Chain {
    pub fn new(elements: Vec<DegreeSequence>) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] == w[1] || !leq(&w[0], &w[1])? {
                return invalid(format!("{:?} does not lie strictly below {:?}", w[0], w[1]));
            }
        }
        Ok(Chain(elements))
    }

    pub fn elements(&self) -> &[DegreeSequence] {
        &self.0
    }

    /// Number of elements minus one.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn into_elements(self) -> Vec<DegreeSequence> {
        self.0
    }
}

/// All elements of the poset in lexicographic order.
pub fn enumerate(bounds: &BSBounds) -> Result<Vec<DegreeSequence>> {
    enumerate_with(bounds, &Limits::default())
}

pub fn enumerate_with(bounds: &BSBounds, limits: &Limits) -> Result<Vec<DegreeSequence>> {
    if bounds.step_budget() > limits.max_step_budget {
        return resource(format!(
            "step budget {} exceeds the limit {}",
            bounds.step_budget(),
            limits.max_step_budget
        ));
    }
    let lo = bounds.lower().entries();
    let hi = bounds.upper().entries();
    let n = lo.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);

    fn rec(
        i: usize,
        lo: &[i64],
        hi: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<DegreeSequence>,
        max: usize,
    ) -> Result<()> {
        if i == lo.len() {
            if out.len() >= max {
                return resource(format!("poset has more than {max} elements"));
            }
            out.push(DegreeSequence::from_trusted(cur.clone()));
            return Ok(());
        }
        let start = match cur.last() {
            Some(&prev) => lo[i].max(prev + 1),
            None => lo[i],
        };
        for v in start..=hi[i] {
            cur.push(v);
            rec(i + 1, lo, hi, cur, out, max)?;
            cur.pop();
        }
        Ok(())
    }

    rec(0, lo, hi, &mut cur, &mut out, limits.max_elements)?;
    Ok(out)
}

/// Componentwise comparison.
pub fn leq(d: &DegreeSequence, e: &DegreeSequence) -> Result<bool> {
    if d.len() != e.len() {
        return invalid(format!("cannot compare {d:?} with {e:?}: lengths differ"));
    }
    Ok(d.entries().iter().zip(e.entries()).all(|(a, b)| a <= b))
}

fn fold_componentwise(
    set: &[DegreeSequence],
    pick: fn(i64, i64) -> i64,
    what: &str,
) -> Result<DegreeSequence> {
    let Some(first) = set.first() else {
        return invalid(format!("{what} of an empty set is undefined; use the bottom/top accessors"));
    };
    let mut acc = first.entries().to_vec();
    for d in &set[1..] {
        if d.len() != acc.len() {
            return invalid(format!("{what}: {d:?} has the wrong length"));
        }
        for (a, &x) in acc.iter_mut().zip(d.entries()) {
            *a = pick(*a, x);
        }
    }
    // min/max of strictly increasing sequences stays strictly increasing
    DegreeSequence::new(acc)
}

/// Greatest lower bound: the componentwise minimum.
pub fn meet(set: &[DegreeSequence]) -> Result<DegreeSequence> {
    fold_componentwise(set, i64::min, "meet")
}

/// Least upper bound: the componentwise maximum.
pub fn join(set: &[DegreeSequence]) -> Result<DegreeSequence> {
    fold_componentwise(set, i64::max, "join")
}

fn require_member(bounds: &BSBounds, d: &DegreeSequence) -> Result<()> {
    if bounds.contains(d) {
        Ok(())
    } else {
        invalid(format!("{d:?} is not an element of {bounds:?}"))
    }
}

/// Elements covering `d`: the unit steps `d + e_i` that stay in the poset.
pub fn covers(bounds: &BSBounds, d: &DegreeSequence) -> Result<Vec<DegreeSequence>> {
    require_member(bounds, d)?;
    let mut out: Vec<_> = (0..d.len())
        .filter(|&i| d[i] < bounds.upper()[i])
        .filter_map(|i| d.step_up(i))
        .collect();
    out.sort();
    #[cfg(debug_assertions)]
    debug_check_covers(bounds, d, &out);
    Ok(out)
}

/// Cross-checks the unit-step covers against the definition on small posets.
#[cfg(debug_assertions)]
fn debug_check_covers(bounds: &BSBounds, d: &DegreeSequence, found: &[DegreeSequence]) {
    let limits = Limits { max_elements: 16, ..Limits::default() };
    let Ok(all) = enumerate_with(bounds, &limits) else {
        return;
    };
    let definitional: Vec<_> = all
        .iter()
        .filter(|e| *e != d && leq(d, e).unwrap())
        .filter(|e| {
            !all.iter()
                .any(|z| z != d && z != *e && leq(d, z).unwrap() && leq(z, e).unwrap())
        })
        .cloned()
        .collect();
    debug_assert_eq!(definitional, found, "unit-step covers disagree with the definition at {d:?}");
}

/// Elements covering `lower`, in lexicographic order.
pub fn atoms(bounds: &BSBounds) -> Vec<DegreeSequence> {
    covers(bounds, bounds.lower()).expect("lower bound is always a member")
}

/// Every cover path from `lower` to `upper`, in lexicographic order.
pub fn maximal_chains(bounds: &BSBounds) -> Result<Vec<Chain>> {
    maximal_chains_with(bounds, &Limits::default())
}

pub fn maximal_chains_with(bounds: &BSBounds, limits: &Limits) -> Result<Vec<Chain>> {
    if bounds.step_budget() > limits.max_step_budget {
        return resource(format!("step budget {} exceeds the limit", bounds.step_budget()));
    }
    let mut out = Vec::new();
    let mut path = vec![bounds.lower().clone()];

    fn rec(
        bounds: &BSBounds,
        path: &mut Vec<DegreeSequence>,
        out: &mut Vec<Chain>,
        max: usize,
    ) -> Result<()> {
        let last = path.last().unwrap();
        if last == bounds.upper() {
            if out.len() >= max {
                return resource(format!("poset has more than {max} maximal chains"));
            }
            out.push(Chain(path.clone()));
            return Ok(());
        }
        for next in covers(bounds, last)? {
            path.push(next);
            rec(bounds, path, out, max)?;
            path.pop();
        }
        Ok(())
    }

    rec(bounds, &mut path, &mut out, limits.max_chains)?;
    Ok(out)
}

/// The closed interval `[v, u]`, itself a Boij-Soderberg poset.
pub fn interval(bounds: &BSBounds, v: &DegreeSequence, u: &DegreeSequence) -> Result<BSBounds> {
    require_member(bounds, v)?;
    require_member(bounds, u)?;
    if !leq(v, u)? {
        return invalid(format!("{v:?} is not below {u:?}"));
    }
    BSBounds::new(v.clone(), u.clone())
}

/// Result of dropping the coordinates where `lower[i] == upper[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// `kept[i]` is true when coordinate `i` survives.
    pub kept: Vec<bool>,
    /// `None` when every coordinate was fixed: the one-element poset.
    pub reduced: Option<BSBounds>,
}

impl Reduction {
    /// The projection onto the kept coordinates.
    pub fn project(&self, d: &DegreeSequence) -> Option<DegreeSequence> {
        self.reduced.as_ref()?;
        let entries = d
            .entries()
            .iter()
            .zip(&self.kept)
            .filter(|(_, &k)| k)
            .map(|(&x, _)| x)
            .collect();
        Some(DegreeSequence::from_trusted(entries))
    }
}

pub fn reduce(bounds: &BSBounds) -> Reduction {
    let kept: Vec<bool> = (0..bounds.len())
        .map(|i| bounds.lower()[i] < bounds.upper()[i])
        .collect();
    let pick = |d: &DegreeSequence| -> Vec<i64> {
        d.entries()
            .iter()
            .zip(&kept)
            .filter(|(_, &k)| k)
            .map(|(&x, _)| x)
            .collect()
    };
    let lo = pick(bounds.lower());
    let reduced = if lo.is_empty() {
        None
    } else {
        Some(
            BSBounds::new(
                DegreeSequence::from_trusted(lo),
                DegreeSequence::from_trusted(pick(bounds.upper())),
            )
            .expect("sub-sequences of valid bounds are valid"),
        )
    };
    Reduction { kept, reduced }
}
