use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} out of range (1..=64)")]
    InvalidOrder(usize),
    #[error("expected {expected} arc bits, got {got}")]
    ArcBitLength { expected: usize, got: usize },
    #[error("invalid arc ({0}, {1})")]
    InvalidArc(usize, usize),
    #[error("pair ({0}, {1}) assigned twice")]
    DuplicatePair(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("block lengths must be positive")]
    ZeroBlock,
    #[error("a type needs at least one block")]
    NoBlocks,
    #[error("a cycle with more than one block needs an even block count")]
    OddCycleBlocks,
    #[error("cycle order {0} too small (need >= 3)")]
    CycleTooSmall(usize),
    #[error("unknown catalog tournament {0:?}")]
    UnknownTournament(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family parameters rejected: {0}")]
    FamilyParams(String),
    #[error("enumeration order {0} out of range")]
    EnumOrder(usize),
    #[error("pattern order {pattern} exceeds tournament order {tournament}")]
    PatternTooLarge { pattern: usize, tournament: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
