use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("SingularMatrix: matrix has zero determinant")]
    SingularMatrix,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("NotFullDimensional: configuration does not span R^3")]
    NotFullDimensional,
    #[error("NotWideEnough: configuration has width at most one")]
    NotWideEnough,
    #[error("UseSeedLists: size {0} is below 7, spiked/boxed generation starts at size 7")]
    UseSeedLists(usize),
    #[error("BoundTooSmall: volume bound {given} is below the required {required}")]
    BoundTooSmall { given: u64, required: u64 },
    #[error("SeedValidationFailed: {0}")]
    SeedValidationFailed(String),
    #[error("DatabaseIncomplete: size {0} is not available")]
    DatabaseIncomplete(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported format header {0:?}")]
    Version(String),
    #[error("checkpoint error: {0} (delete the checkpoint file and rerun without --resume)")]
    Checkpoint(String),
    #[error("interrupted after {0} merge groups; rerun with the same checkpoint to continue")]
    Interrupted(usize),
    #[error("consistency violation: {0}")]
    Consistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
