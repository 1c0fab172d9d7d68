//! Error types, one per module family.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive, got {0}")]
    ZeroGenerator(u32),
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("generators have gcd {0}, the monoid they span is not cofinite")]
    NotCoprime(u32),
    #[error("Frobenius number {0} exceeds the supported bound {max}", max = crate::MAX_FROBENIUS)]
    TooLarge(i64),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAnElement(i64),
    #[error("{0} is not a special gap")]
    NotSpecialGap(u32),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u32),
    #[error("operation is undefined for the semigroup of all natural numbers")]
    TrivialSemigroup,
    #[error("semigroup does not have maximal embedding dimension")]
    NotMed,
    #[error("not closed under addition: {0} + {1} is a gap")]
    NotClosed(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CovarietyError {
    #[error("empty family")]
    EmptyFamily,
    #[error("family has no minimum")]
    NoMinimum,
    #[error("intersection of members {0} and {1} is not a member")]
    NotIntersectionClosed(usize, usize),
    #[error("removing the multiplicity of member {0} leaves the family")]
    NotMultiplicityRemovalClosed(usize),
    #[error("not a C-set: {0:?}")]
    NotACSet(Vec<u32>),
    #[error("semigroup is not a member of the covariety")]
    NotMember,
    #[error("bound {bound} is below the Frobenius number {frobenius}")]
    FrobeniusTooSmall { bound: i32, frobenius: i32 },
    #[error("subset search over {0} candidates is too large")]
    SearchTooLarge(usize),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("invalid Frobenius number {0}")]
    InvalidF(i64),
    #[error("{0:?} is not an A(F)-set")]
    NotAnAFSet(Vec<u32>),
    #[error("expected Frobenius number {expected}, found {found}")]
    WrongFrobenius { expected: u32, found: i32 },
    #[error("({f}, {m}) does not describe a rank-one member")]
    NotRank1Form { f: u32, m: u32 },
    #[error("{0:?} is not the minimal system of a maximum-rank member")]
    NotMaxRank(Vec<u32>),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Covariety(#[from] CovarietyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid Frobenius number {0}")]
    InvalidF(i64),
    #[error("brute force is limited to F <= {max}, got {0}", max = crate::oracle::MAX_BRUTE_F)]
    TooLarge(u32),
    #[error("operation is undefined for the semigroup of all natural numbers")]
    TrivialSemigroup,
    #[error("delta is not contained in every member")]
    DeltaNotMinimum,
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("record field `{0}` disagrees with the semigroup described by its gaps")]
    Inconsistent(&'static str),
    #[error("maximal index {0} is out of range")]
    BadIndex(usize),
}
