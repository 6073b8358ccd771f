use thiserror::Error;

use crate::roots::Coweight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coweight {0} is outside the Tits cone")]
    OutsideTitsCone(Coweight),

    #[error("graph truncation at length {cap} is too small for {src} => {dst}")]
    TruncationTooSmall { src: String, dst: String, cap: u64 },

    #[error("enumeration box needs {candidates} candidates, cap is {cap}")]
    BoundOverflow { candidates: u64, cap: u64 },

    #[error("enumeration box boundary at |n| = {bound} contains a solution")]
    BoxBoundaryHit { bound: i64 },

    #[error("candidate window does not certify the minimum: {0}")]
    WindowTooSmall(String),

    #[error("distance-minimising pairs disagree: {first} vs {other}")]
    WellDefinednessViolation { first: String, other: String },

    #[error("golden mismatch: {}", .0.join("; "))]
    GoldenMismatch(Vec<String>),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
