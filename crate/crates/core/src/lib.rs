//! Exact computational group theory over two element backends:
//!
//! * **finite permutation groups**, closed under a deterministic
//!   Schreier–Sims stabilizer chain (with full enumeration for small orders),
//! * **affine groups** `Z^n ⋊ F` for a finite permutation group `F` acting by
//!   integer matrices, whose subgroups are carried as a finite image, a
//!   translation lattice in Hermite normal form, and a canonical coset
//!   section.
//!
//! On top of the shared group model ([`group`], [`handle`]) the crate
//! computes FC-centralizers and their bounds ([`fc`]), validates bounded
//! FC-nilpotent and FC-solvable chains, and runs the structural engines in
//! [`theorems`]: the nilpotent tower (finite-index nilpotent subgroup with a
//! certified central chain), Neumann decomposition of bounded FC-groups, a
//! solvable resolver, and a coset-cover witness search. Every engine verifies
//! its own output with exact index and membership computations; an
//! independent ball-enumeration [`oracle`] cross-checks the closed forms.
//!
//! All integer arithmetic is exact: the workspace builds with overflow checks
//! enabled, so a computation that would exceed `i64` aborts loudly instead of
//! returning a wrapped value.

pub mod affine;
pub mod error;
pub mod fc;
pub mod finite;
pub mod fixtures;
pub mod group;
pub mod handle;
pub mod index;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod theorems;
pub mod word;

pub use error::Error;
pub use group::{Element, GroupRef};
pub use handle::{Modulus, SubgroupHandle};
pub use index::IndexValue;
pub use word::Word;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
