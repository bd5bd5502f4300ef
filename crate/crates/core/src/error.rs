//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors surfaced by group construction, subgroup computations, and the
/// theorem engines.
///
/// The structural engines never return a "best effort" answer: when a
/// verification step fails the error names the step, so a caller can tell a
/// bad input (hypothesis violations, malformed descriptors) from an internal
/// inconsistency (assembly checks that should be unreachable).
#[derive(Debug, Error)]
pub enum Error {
    /// A group descriptor failed validation (non-bijective images, matrices
    /// that are not invertible over the integers, an action that is not a
    /// homomorphism, ...).
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    /// An element does not belong to the group it was used with.
    #[error("element {element} does not belong to the group")]
    NotAMember { element: String },

    /// Two objects from different groups (or different backends) were mixed
    /// in one operation.
    #[error("objects belong to different groups: {0}")]
    GroupMismatch(String),

    /// A word is structurally invalid for the group it is evaluated in.
    #[error("malformed word: {0}")]
    MalformedWord(String),

    /// A modulus subgroup is not normalized by a subgroup that the operation
    /// needs to work modulo it.
    #[error("subgroup {normalizer} does not normalize the modulus {modulus}")]
    NotNormalized { normalizer: String, modulus: String },

    /// A precondition of an operation does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A hypothesis of a structural statement fails, with a concrete element
    /// witnessing the failure.
    #[error("hypothesis `{hypothesis}` fails: witnessed by {witness}")]
    HypothesisFailed { hypothesis: String, witness: String },

    /// A chain failed validation at a specific level.
    #[error("chain invalid at level {level}: {reason}")]
    ChainInvalid { level: usize, reason: String },

    /// A theorem engine aborted because a verification of one of its proof
    /// steps failed.
    #[error("construction aborted at step {step}: verification `{check}` failed")]
    StepVerificationFailed { step: String, check: String },

    /// An internal consistency check on assembled subgroup data failed.
    /// This indicates a bug rather than a bad input.
    #[error("internal verification failed: {0}")]
    InternalVerification(String),

    /// The computation needs an enumeration that exceeds the supported size.
    #[error("computation too large: {0}")]
    TooLarge(String),

    /// A bounded search exhausted its budget without reaching a conclusion.
    #[error("search budget exhausted: {0}")]
    SearchExhausted(String),
}
