use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hasse::HasseDiagram;
use crate::poset;
use crate::sequence::{BSBounds, DegreeSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    OrderPreserving,
    OrderReversing,
}

/// An explicit element bijection between two Boij-Soderberg posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetIso {
    pub source: BSBounds,
    pub target: BSBounds,
    /// `(source element, image)` pairs in lexicographic order of the source.
    pub map: Vec<(DegreeSequence, DegreeSequence)>,
    pub direction: Direction,
}

impl PosetIso {
    fn build(
        source: BSBounds,
        target: BSBounds,
        direction: Direction,
        f: impl Fn(&DegreeSequence) -> DegreeSequence,
    ) -> Result<Self> {
        let map = poset::enumerate(&source)?
            .into_iter()
            .map(|d| {
                let image = f(&d);
                (d, image)
            })
            .collect();
        Ok(PosetIso { source, target, map, direction })
    }

    pub fn image(&self, d: &DegreeSequence) -> Option<&DegreeSequence> {
        self.map
            .binary_search_by(|(s, _)| s.cmp(d))
            .ok()
            .map(|i| &self.map[i].1)
    }

    /// Element-by-element check: the map is a bijection between the two
    /// enumerations and preserves (or reverses) `<=` in both directions.
    pub fn verify(&self) -> Result<bool> {
        let sources = poset::enumerate(&self.source)?;
        let mut targets = poset::enumerate(&self.target)?;
        let domain: Vec<&DegreeSequence> = self.map.iter().map(|(s, _)| s).collect();
        if domain != sources.iter().collect::<Vec<_>>() {
            return Ok(false);
        }
        let mut images: Vec<DegreeSequence> = self.map.iter().map(|(_, t)| t.clone()).collect();
        images.sort();
        targets.sort();
        if images != targets {
            return Ok(false);
        }
        for (a, fa) in &self.map {
            for (b, fb) in &self.map {
                let lhs = poset::leq(a, b)?;
                let rhs = match self.direction {
                    Direction::OrderPreserving => poset::leq(fa, fb)?,
                    Direction::OrderReversing => poset::leq(fb, fa)?,
                };
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The map as indices `source index -> target index` into the two Hasse
    /// diagrams, for use with [`crate::iso::is_order_isomorphism`].
    pub fn index_map(&self, source: &HasseDiagram, target: &HasseDiagram) -> Result<Vec<usize>> {
        let mut out = vec![usize::MAX; source.len()];
        for (s, t) in &self.map {
            let (Some(i), Some(j)) = (source.index_of(s), target.index_of(t)) else {
                return invalid(format!("pair ({s:?}, {t:?}) is outside the diagrams"));
            };
            out[i] = j;
        }
        Ok(out)
    }
}

impl Serialize for PosetIso {
    /// Array of `[source, target]` pairs.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.map.len()))?;
        for pair in &self.map {
            seq.serialize_element(&[&pair.0, &pair.1])?;
        }
        seq.end()
    }
}

/// `rho(phi(d - lower_0))`: subtract every entry from `m` and reverse.
fn reflect(d: &DegreeSequence, shift: i64, m: i64) -> DegreeSequence {
    DegreeSequence::from_trusted(d.entries().iter().rev().map(|&x| m - (x - shift)).collect())
}

/// Bounds of the order dual: after translating so that `lower_0 = 0` and
/// setting `m = upper_p`, the target is `(rho phi(upper), rho phi(lower))`.
pub fn dual_target(bounds: &BSBounds) -> BSBounds {
    let shift = bounds.lower()[0];
    let m = bounds.upper()[bounds.p()] - shift;
    BSBounds::new(
        reflect(bounds.upper(), shift, m),
        reflect(bounds.lower(), shift, m),
    )
    .expect("reflection maps valid bounds to valid bounds")
}

/// Order-reversing bijection `Pi(bounds) -> Pi(dual_target(bounds))`.
pub fn dual_bounds(bounds: &BSBounds) -> Result<PosetIso> {
    let shift = bounds.lower()[0];
    let m = bounds.upper()[bounds.p()] - shift;
    PosetIso::build(
        bounds.clone(),
        dual_target(bounds),
        Direction::OrderReversing,
        |d| reflect(d, shift, m),
    )
}

/// True when, up to translation, `lower = (0, m, ..., pm)` with `m >= 1` and
/// `upper = lower + (b, ..., b)` with `b >= 0`.
pub fn is_self_dual_arith(bounds: &BSBounds) -> bool {
    let b = bounds.normalized();
    let lo = b.lower().entries();
    let hi = b.upper().entries();
    let step = if lo.len() > 1 { lo[1] } else { 1 };
    let shift = hi[0];
    step >= 1
        && lo.iter().enumerate().all(|(i, &x)| x == step * i as i64)
        && lo.iter().zip(hi).all(|(&l, &h)| h == l + shift)
}

/// `Pi((0..p), (k..p+k)) ≅ Pi((0..k-1), (p+1..p+k))` for `1 <= k <= p`.
///
/// The map reflects an element into the same poset (which is self-dual) and
/// then takes the complement of its entries inside `{0, ..., p+k}`; both
/// steps reverse the order, so the composite preserves it.
pub fn shear(p: i64, k: i64) -> Result<PosetIso> {
    if p < 1 || k < 1 || k > p {
        return invalid(format!("shearing needs 1 <= k <= p, got p={p}, k={k}"));
    }
    let source = BSBounds::from_vecs((0..=p).collect(), (k..=p + k).collect())?;
    let target = BSBounds::from_vecs((0..k).collect(), (p + 1..=p + k).collect())?;
    let m = p + k;
    PosetIso::build(source, target, Direction::OrderPreserving, |d| {
        let reflected = reflect(d, 0, m);
        let complement = (0..=m)
            .filter(|x| !reflected.entries().contains(x))
            .collect();
        DegreeSequence::from_trusted(complement)
    })
}
