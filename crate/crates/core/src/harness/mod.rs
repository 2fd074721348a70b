//! Batch corpus runs and the sharpness/comparison claim suite.

mod batch;
mod verify;

pub use batch::{
    compute_row, format_sig10, parse_corpus, run_batch, BatchOptions, BatchOutput, BatchRow, BatchSummary, RowOutcome,
    CSV_HEADER, SHARP_TOLERANCE,
};
pub use verify::{verify_paper, ClaimResult, ClaimStatus, VerifyOptions, CLAIM_IDS};
