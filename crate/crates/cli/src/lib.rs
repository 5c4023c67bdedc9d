//! Front end for `tableau-lab`: input parsing, the verification runner and
//! its report formats.

pub mod input;
pub mod report;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A theorem or corollary row did not match.
    pub const MISMATCH: i32 = 1;
    /// The input is outside the bijection's domain.
    pub const MEMBERSHIP: i32 = 2;
    /// A conjecture or exploratory row did not match.
    pub const FINDING: i32 = 3;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
}

pub use input::{parse_params, parse_tableau_file, InputError};
pub use report::{Kind, VerifyReport};
pub use verify::{run_verify, Claim, Grid};
