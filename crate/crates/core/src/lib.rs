//! Posets of strictly increasing integer sequences lying componentwise
//! between two bounds, their order complexes, and decompositions of those
//! complexes.
//!
//! ```
//! use bsposet::{complex, decomp, BSBounds};
//!
//! let bounds = BSBounds::parse("1,3", "3,4").unwrap();
//! let delta = complex::bs_order_complex(&bounds).unwrap();
//! assert_eq!(delta.num_facets(), 2);
//! assert_eq!(decomp::shedding_vertices(&delta).unwrap(), ["1,4", "2,3"]);
//! ```

pub mod analysis;
pub mod cli;
pub mod complex;
pub mod decomp;
pub mod error;
pub mod hasse;
pub mod iso;
pub mod poset;
pub mod rao;
pub mod sequence;

pub use error::{Error, Result};
pub use hasse::HasseDiagram;
pub use sequence::{BSBounds, DegreeSequence, Limits};
