//! Error types for coloring construction and verification.

use thiserror::Error;

/// Errors from building or interrogating colorings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("Y-index {index} in row {row} is out of range (n = {n})")]
    IndexOutOfRange { row: usize, index: usize, n: usize },

    #[error("expected {expected} rows, got {got}")]
    RowCountMismatch { expected: usize, got: usize },

    #[error("n = {n} exceeds the bit-vector capacity {capacity}")]
    CapacityExceeded { n: usize, capacity: usize },

    #[error("coloring is {got_m}x{got_n} but the problem asks for {want_m}x{want_n}")]
    SpecMismatch {
        want_m: usize,
        want_n: usize,
        got_m: usize,
        got_n: usize,
    },

    #[error("k = {k} is out of range 1..={m}")]
    BadK { k: usize, m: usize },

    #[error("problem parameters must all be at least 1 (m={m}, n={n}, a={a}, s={s})")]
    InvalidSpec { m: usize, n: usize, a: usize, s: usize },
}
