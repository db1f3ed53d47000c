//! Geometric vertex decomposition: the `C`/`N` split and the recursive certifier.

mod cert;
mod engine;
mod replay;
mod split;

pub use cert::*;
pub use engine::*;
pub use replay::*;
pub use split::*;

#[cfg(test)]
mod tests;
