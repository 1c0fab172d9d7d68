//! Numerical semigroups organized by covarieties.
//!
//! - [`semigroup`]: the canonical [`NumericalSemigroup`] type and its
//!   invariants (Frobenius number, genus, multiplicity, minimal generators,
//!   pseudo-Frobenius numbers, special gaps, MED constructions).
//! - [`apery`]: residue-indexed Apery sets with the single-entry update used
//!   when a special gap is adjoined.
//! - [`covariety`]: explicit covarieties, closures of C-sets, minimal systems,
//!   ranks, multiplicity chains and generated covarieties.
//! - [`frobenius`]: the covariety `A(F)` of semigroups with a fixed Frobenius
//!   number, its streaming enumeration and closed-form rank results.
//! - [`oracle`]: brute-force references for cross-validation.
//! - [`record`]: JSON, CSV and DOT interchange.

pub mod apery;
pub mod covariety;
pub mod error;
pub mod frobenius;
pub mod oracle;
pub mod record;
pub mod semigroup;

pub use apery::AperyTable;
pub use covariety::{chain_cad, generated_covariety, CSet, ChainCad, Covariety, EnumerationTree};
pub use error::{CovarietyError, FrobeniusError, OracleError, RecordError, SemigroupError};
pub use frobenius::{EnumerateOptions, FrontierNode};
pub use semigroup::NumericalSemigroup;

/// Largest Frobenius number any operation accepts.
pub const MAX_FROBENIUS: i32 = 1 << 16;
