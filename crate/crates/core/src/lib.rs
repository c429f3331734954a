//! Regular intersecting families of `k`-subsets of `[n]`.
//!
//! The crate covers four tasks:
//!
//! * **verification** of uniform families ([`KSetFamily`]): intersecting,
//!   degrees, regularity, subset-regularity, inner distributions;
//! * **Johnson-scheme algebra** ([`scheme`]): exact eigenvalue tables, the
//!   MacWilliams transform and a Delsarte-style linear program solved by an
//!   exact rational simplex;
//! * **bounds** ([`bounds`]) on the size of regular intersecting families,
//!   together with existence obstructions;
//! * **constructions** ([`construct`]) and **search** ([`search`]) for large
//!   regular intersecting families.
//!
//! Families travel between tools as `rif-family/1` JSON documents
//! ([`io`]); the `rif` binary ([`cli`]) wires everything together.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod family;
pub mod io;
pub mod kset;
pub mod math;
pub mod scheme;
pub mod search;
pub mod simplex;

pub use error::{Error, Result};
pub use family::{DegreeProfile, InnerDistribution, KSetFamily};
pub use kset::KSet;
