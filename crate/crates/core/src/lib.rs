//! Exact combinatorics of the orbits of a lower-rank Borel subgroup acting
//! on the full flag variety.
//!
//! Each orbit carries three equivalent labels — a pair of symmetric-group
//! elements, a standardized variant of that pair, and a decorated
//! permutation — and a canonical standard-form flag as geometric
//! representative.  The crate enumerates orbits in all parameterizations,
//! decides the closure order two independent ways (product Bruhat order on
//! pairs, exact rank-invariant domination on flags), computes dimensions
//! two independent ways (a length formula on pairs, an integer stabilizer
//! kernel on flags), runs the monoid action of simple roots with root-type
//! classification, assembles the closure poset with annotated Hasse covers,
//! and cross-verifies everything at a chosen degree.
//!
//! All values are immutable and every operation is a pure function; linear
//! algebra is exact over the integers throughout.

pub mod atlas;
pub mod error;
pub mod flags;
pub mod linalg;
pub mod monoid;
pub mod pairs;
pub mod perm;

pub use atlas::{
    build_atlas, build_poset, export_dot, export_json, orbits_json, verify, CheckReport, HasseEdge,
    OrbitPoset, OrbitRecord, VerifyLevel, VerifyReport,
};
pub use error::{Error, Result};
pub use flags::{enumerate_flags, pair_to_flag, FlagVector, RankProfile, StandardFlag};
pub use monoid::{
    act, check_delta_growth, closed_orbits, generate_from_closed, MoveRecord, RootType,
};
pub use pairs::{
    enumerate_decorated, enumerate_pairs, is_shareshian, DecoratedPermutation, Delta,
    ShareshianPair, StandardizedPair,
};
pub use perm::{
    longest_element, monoid_w, sigma, star_of_root, MulSide, Permutation, RootLabel, RootSide,
};
