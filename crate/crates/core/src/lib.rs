//! Exact rational homotopy and cohomology of gauge groups and of moduli of
//! connections for principal `G`-bundles over compact simply connected
//! four-manifolds `M`.
//!
//! `G` is any semisimple compact simply connected Lie group, given as a
//! product of simple factors. The only datum of `M` that enters is its
//! second Betti number `b₂(M)`.
//!
//! ```
//! use rational_gauge::{cohomology, homotopy::BaseData, liegroups::parse_group_spec};
//!
//! let e8 = parse_group_spec("E8").unwrap();
//! let h = cohomology::cohomology_b_star(&e8, BaseData::new(3));
//! assert_eq!(h.generator_count(), 8 * 3 + 15);
//! ```

pub mod cli;
pub mod cohomology;
pub mod homotopy;
pub mod liegroups;
pub mod series;
pub mod verify;

pub use cohomology::{AlgebraKind, FreeGradedAlgebra, MinimalModel};
pub use homotopy::{BaseData, Connectivity, GradedRanks, SpaceTag};
pub use liegroups::{parse_group_spec, GroupParseError, GroupSpec, SimpleFactor};
pub use series::RationalSeries;
