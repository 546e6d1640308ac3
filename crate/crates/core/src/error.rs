use thiserror::Error;

/// Errors raised by every module of the crate.
///
/// Variant names are part of the CLI contract: they are printed verbatim
/// by [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {label} does not admit rank {rank}")]
    InvalidRank { label: char, rank: usize },

    #[error("unknown type label {0:?} (expected one of A-G)")]
    InvalidTypeLabel(String),

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("operands belong to different root systems ({left} vs {right})")]
    DatumMismatch { left: String, right: String },

    #[error("Weyl group has order {order}, above the guard {guard}")]
    GroupTooLarge { order: u128, guard: u128 },

    #[error("coset space has {size} points, above the guard {guard}")]
    CosetSpaceTooLarge { size: u128, guard: u128 },

    #[error("permutation {0:?} is not an automorphism of the Cartan matrix")]
    NotDiagramAutomorphism(Vec<usize>),

    #[error("grading has length {got}, rank is {rank}")]
    InvalidGrading { got: usize, rank: usize },

    #[error("grading is identically zero; the involution would be trivial")]
    TrivialInvolution,

    #[error("outer involutions are only consumed by the Weyl-group fixed-point machinery")]
    OuterNotSupportedHere,

    #[error(
        "outer involutions are not supported here; supply W_K generators directly to \
         weyl::count_double_cosets"
    )]
    OuterNotSupported,

    #[error("root set is not a parabolic subset")]
    NotParabolic,

    #[error("symmetric pair is not of Hermitian type")]
    NotHermitian,

    #[error("root set is not a parabolic subset of the compact subsystem")]
    NotParabolicInK,

    #[error("compact subsystem has {blocks} simple factors, expected exactly 2")]
    NotTwoFactor { blocks: usize },

    #[error("search space of {size} exceeds the guard {guard}")]
    SearchSpaceTooLarge { size: u128, guard: u128 },
}

impl Error {
    /// The bare variant name, e.g. `"NotHermitian"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "InvalidRank",
            Error::InvalidTypeLabel(_) => "InvalidTypeLabel",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DatumMismatch { .. } => "DatumMismatch",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::CosetSpaceTooLarge { .. } => "CosetSpaceTooLarge",
            Error::NotDiagramAutomorphism(_) => "NotDiagramAutomorphism",
            Error::InvalidGrading { .. } => "InvalidGrading",
            Error::TrivialInvolution => "TrivialInvolution",
            Error::OuterNotSupportedHere => "OuterNotSupportedHere",
            Error::OuterNotSupported => "OuterNotSupported",
            Error::NotParabolic => "NotParabolic",
            Error::NotHermitian => "NotHermitian",
            Error::NotParabolicInK => "NotParabolicInK",
            Error::NotTwoFactor { .. } => "NotTwoFactor",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
