//! Closed-form counts, duality and shearing isomorphisms, and the bounded
//! search for Boij-Soderberg presentations of an abstract poset.

mod counting;
mod duality;
mod membership;

pub use counting::{
    binomial, count_report, count_report_with, facet_count_formula, vertex_count_formula,
    CountReport,
};
pub use duality::{dual_bounds, dual_target, is_self_dual_arith, shear, Direction, PosetIso};
pub use membership::{bs_membership_search, MembershipWitness};

/// Serde helpers writing big integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use num_bigint::BigUint;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => s.serialize_some(&x.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
