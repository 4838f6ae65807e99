//! Exact densities, independent partitions and cyclic base orderings for
//! paving matroids.
//!
//! A matroid of rank `r` is cyclically orderable when its elements can be
//! arranged around a circle so that every `r` consecutive elements form a
//! basis. For paving matroids this happens exactly when no nonempty subset is
//! denser than the whole ground set, where the density of `X` is
//! `|X| / r(X)`. The crate computes these densities exactly, decides the
//! density condition, and constructs orderings whenever it holds.

pub mod catalog;
pub mod density;
pub mod io;
pub mod matroid;
pub mod ordering;
pub mod partition;
pub mod removal;
pub mod set;
pub mod spair;

pub use density::{beta, beta_ground, gamma, gamma_bruteforce, is_tight, Density, DensityError};
pub use matroid::{MatroidError, PavingMatroid};
pub use ordering::{find_bruteforce, find_ordering, verify, CyclicOrdering, OrderingError};
pub use partition::{partition_into_independent, IndependentPartition, PartitionError};
pub use removal::{check_removable, find_removable_basis, RemovalError};
pub use set::{ElementId, ElementSet, MAX_ELEMENTS};
pub use spair::{SPairError, SPairFamilies};
