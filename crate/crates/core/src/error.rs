use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("antipermutation cannot be combined with {0}")]
    IllegalAnti(String),
    #[error("{0} does not preserve parity")]
    NotParityPreserving(String),
    #[error("{0} is not a complete Baxter permutation")]
    NotCompleteBaxter(String),
    #[error("{0} is not a reduced Baxter permutation")]
    NotReducedBaxter(String),
    #[error("{0} is not an anti-Baxter permutation")]
    NotAntiBaxter(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("{0} is not a snow leopard permutation")]
    NotSlp(String),
    #[error("{0} is not an even thread")]
    NotEvenThread(String),
    #[error("{0} is not an odd thread")]
    NotOddThread(String),
    #[error("{0} is not a Janus thread")]
    NotJanus(String),
    #[error("{path} is not in {class}")]
    NotInClass { path: String, class: &'static str },
    #[error("malformed lattice path: {0}")]
    MalformedPath(String),
    #[error("{0} is not a peakless Motzkin path")]
    NotPeakless(String),
    #[error("invalid layer spec: {0}")]
    InvalidLayerSpec(String),
    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("Aztec diamond order {order} is outside 1..={max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("malformed tiling: {0}")]
    MalformedTiling(String),
    #[error("large ASM of this tiling is not a permutation matrix")]
    NotPermutationLasm,
}
