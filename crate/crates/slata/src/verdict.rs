//! Outcome type shared by all verification reports.

use alloc::string::String;
use core::fmt;

/// Outcome of one verification check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Holds for trivial reasons at this scale (e.g. compactness of finite
    /// sets); reported separately so reports stay honest about what was
    /// actually computed.
    Vacuous,
    /// Failed, with a human-readable witness.
    Fail(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }

    /// `Pass` when `ok`, otherwise a failure with the witness produced by `w`.
    pub fn when(ok: bool, w: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(w())
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Vacuous => write!(f, "pass (trivial at finite scale)"),
            Verdict::Fail(w) => write!(f, "FAIL: {w}"),
        }
    }
}
