//! File formats and the `gvdlab` command line.
//!
//! [`run`] is the whole program: it parses arguments, does the work and
//! returns the exit code with everything meant for stdout and stderr.
//! Exit codes are 0 for a certified positive answer, 1 for a certified
//! negative one, 2 when the answer is inconclusive and 3 for usage or
//! input errors.
//!
//! Randomness comes from ChaCha8 seeded with `--seed`; each command draws
//! from its own stream of that generator, so results depend only on the
//! seed and the inputs.

pub mod budget;
pub mod certjson;
pub mod commands;
pub mod formats;
pub mod render;

pub use commands::{run, Outcome};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
