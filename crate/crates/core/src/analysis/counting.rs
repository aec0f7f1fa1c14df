use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::decimal;
use crate::error::{invalid, Result};
use crate::hasse::HasseDiagram;
use crate::sequence::{BSBounds, Limits};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn non_negative(p: i64, k: i64) -> Result<(u64, u64)> {
    if p < 0 || k < 0 {
        return invalid(format!("p and k must be non-negative, got p={p}, k={k}"));
    }
    Ok((p as u64, k as u64))
}

/// Vertex count `C(p+k+1, p+1)` of `Pi((0..p), (k..p+k))`.
pub fn vertex_count_formula(p: i64, k: i64) -> Result<BigUint> {
    let (p, k) = non_negative(p, k)?;
    Ok(binomial(p + k + 1, p + 1))
}

/// Maximal chain count `f(p,k) = (pk+k)! * prod_{i=0}^{p} i! / (k+i)!`
/// of `Pi((0..p), (k..p+k))`, a multi-dimensional Catalan number.
///
/// # Panics
///
/// If the quotient is not exact, which would mean the product was mistyped.
pub fn facet_count_formula(p: i64, k: i64) -> Result<BigUint> {
    let (p, k) = non_negative(p, k)?;
    let mut numerator = factorial(p * k + k);
    let mut denominator = BigUint::one();
    for i in 0..=p {
        numerator *= factorial(i);
        denominator *= factorial(k + i);
    }
    assert!(
        (&numerator % &denominator).is_zero(),
        "f({p},{k}) is not an integer"
    );
    Ok(numerator / denominator)
}

/// Exact counts of a poset next to the bounds obtained from the consecutive
/// posets it contains and is contained in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    #[serde(rename = "vertices", with = "decimal")]
    pub vertex_count: BigUint,
    #[serde(rename = "facets", with = "decimal")]
    pub facet_count: BigUint,
    /// True when the bounds are `t + (0..p)` and `t + (k..p+k)`.
    pub formula_applicable: bool,
    /// `(C(p+k+1, p+1), f(p,k))` when the consecutive form applies.
    #[serde(with = "decimal::option")]
    pub formula_vertices: Option<BigUint>,
    #[serde(with = "decimal::option")]
    pub formula_facets: Option<BigUint>,
    #[serde(with = "decimal")]
    pub vertex_lower: BigUint,
    #[serde(with = "decimal")]
    pub vertex_upper: BigUint,
    #[serde(with = "decimal")]
    pub facet_lower: BigUint,
    #[serde(with = "decimal")]
    pub facet_upper: BigUint,
    /// `C(upper_p - lower_0 + 1, p)`, the upper vertex bound with exponent `p`.
    /// It fails for some posets; `vertex_upper` uses exponent `p + 1`.
    #[serde(with = "decimal")]
    pub printed_vertex_upper: BigUint,
    pub printed_vertex_upper_holds: bool,
}

impl CountReport {
    /// Every bound holds, and the closed forms agree when they apply.
    pub fn consistent(&self) -> bool {
        let formula_ok = match (&self.formula_vertices, &self.formula_facets) {
            (Some(v), Some(n)) => *v == self.vertex_count && *n == self.facet_count,
            (None, None) => !self.formula_applicable,
            _ => false,
        };
        formula_ok
            && self.vertex_lower <= self.vertex_count
            && self.vertex_count <= self.vertex_upper
            && self.facet_lower <= self.facet_count
            && self.facet_count <= self.facet_upper
    }
}

/// The `k` of a consecutive-form poset, if `bounds` has that form.
fn consecutive_k(bounds: &BSBounds) -> Option<i64> {
    let lo = bounds.lower().entries();
    let hi = bounds.upper().entries();
    let t = lo[0];
    let k = hi[0] - t;
    let consecutive = (0..lo.len()).all(|i| lo[i] == t + i as i64 && hi[i] == t + k + i as i64);
    consecutive.then_some(k)
}

pub fn count_report(bounds: &BSBounds) -> Result<CountReport> {
    count_report_with(bounds, &Limits::default())
}

pub fn count_report_with(bounds: &BSBounds, limits: &Limits) -> Result<CountReport> {
    let h = HasseDiagram::from_bounds_with(bounds, limits)?;
    let vertex_count = BigUint::from(h.len());
    let facet_count = h.count_maximal_chains();

    let p = bounds.p() as i64;
    let lo = bounds.lower();
    let hi = bounds.upper();
    let last = p as usize;
    let k_lo = (hi[0] - lo[last] + p).max(0);
    let k_hi = (hi[last] - lo[0] - p).max(0);

    let formula_k = consecutive_k(bounds);
    let (formula_vertices, formula_facets) = match formula_k {
        Some(k) => (Some(vertex_count_formula(p, k)?), Some(facet_count_formula(p, k)?)),
        None => (None, None),
    };
    let printed_vertex_upper = binomial((hi[last] - lo[0] + 1) as u64, p as u64);

    Ok(CountReport {
        formula_applicable: formula_k.is_some(),
        formula_vertices,
        formula_facets,
        vertex_lower: vertex_count_formula(p, k_lo)?,
        vertex_upper: vertex_count_formula(p, k_hi)?,
        facet_lower: facet_count_formula(p, k_lo)?,
        facet_upper: facet_count_formula(p, k_hi)?,
        printed_vertex_upper_holds: vertex_count <= printed_vertex_upper,
        printed_vertex_upper,
        vertex_count,
        facet_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset;

    fn consecutive(p: i64, k: i64) -> BSBounds {
        BSBounds::from_vecs((0..=p).collect(), (k..=p + k).collect()).unwrap()
    }

    /// Hook length formula for the `(p+1) x k` rectangle: the standard Young
    /// tableaux of that shape encode the same lattice walks.
    fn hook_length(p: u64, k: u64) -> BigUint {
        let rows = p + 1;
        let mut hooks = BigUint::one();
        for i in 0..rows {
            for j in 0..k {
                hooks *= BigUint::from((k - j) + (rows - 1 - i));
            }
        }
        factorial(rows * k) / hooks
    }

    #[test]
    fn vertex_formula_examples() {
        assert_eq!(vertex_count_formula(1, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(vertex_count_formula(0, 7).unwrap(), BigUint::from(8u32));
        assert_eq!(vertex_count_formula(2, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(
            poset::enumerate(&consecutive(2, 2)).unwrap().len(),
            10
        );
        assert!(vertex_count_formula(-1, 2).is_err());
    }

    #[test]
    fn facet_formula_examples() {
        // frozen from brute-force maximal chain enumeration
        for (p, k, n) in [(1, 1, 1u32), (1, 2, 2), (2, 2, 5), (2, 3, 42), (3, 2, 14), (1, 0, 1)] {
            assert_eq!(facet_count_formula(p, k).unwrap(), BigUint::from(n), "f({p},{k})");
            let chains = poset::maximal_chains(&consecutive(p, k)).unwrap().len();
            assert_eq!(chains as u32, n);
        }
        assert!(facet_count_formula(2, -1).is_err());
    }

    #[test]
    fn facet_formula_matches_hook_lengths() {
        for p in 0..6u64 {
            for k in 0..6u64 {
                assert_eq!(facet_count_formula(p as i64, k as i64).unwrap(), hook_length(p, k));
            }
        }
        assert_eq!(facet_count_formula(3, 3).unwrap(), BigUint::from(462u32));
        let big = facet_count_formula(9, 9).unwrap();
        assert!(big > BigUint::from(u64::MAX));
        assert_eq!(big, hook_length(9, 9));
    }

    #[test]
    fn report_examples() {
        let r = count_report(&BSBounds::parse("1,3", "3,4").unwrap()).unwrap();
        assert_eq!(r.vertex_count, BigUint::from(5u32));
        assert_eq!(r.facet_count, BigUint::from(2u32));
        assert_eq!(r.facet_lower, BigUint::from(1u32));
        assert_eq!(r.facet_upper, BigUint::from(2u32));
        assert!(!r.formula_applicable);
        assert!(r.consistent());

        let r = count_report(&BSBounds::parse("0,1", "2,3").unwrap()).unwrap();
        assert!(r.formula_applicable);
        assert_eq!(r.vertex_count, BigUint::from(6u32));
        assert_eq!(r.facet_count, BigUint::from(2u32));
        assert_eq!(r.vertex_upper, BigUint::from(6u32));
        assert_eq!(r.facet_upper, BigUint::from(2u32));
        assert_eq!(r.printed_vertex_upper, BigUint::from(4u32));
        assert!(!r.printed_vertex_upper_holds);
        assert!(r.consistent());

        let r = count_report(&BSBounds::parse("0", "3").unwrap()).unwrap();
        assert_eq!(r.vertex_count, BigUint::from(4u32));
        assert_eq!(r.facet_count, BigUint::from(1u32));
    }

    #[test]
    fn report_json_uses_decimal_strings() {
        let r = count_report(&BSBounds::parse("0,1,2", "2,3,4").unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["vertices"], "10");
        assert_eq!(v["facets"], "5");
        let back: CountReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
