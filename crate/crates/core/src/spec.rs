//! The problem tuple: host dimensions and monochromatic targets.

use crate::error::CoreError;
use crate::yset::Y_CAPACITY;

/// The decision instance "does K_{m,n} arrow (red K_{a,a}, blue K_{s,s})".
///
/// `m` counts X-vertices (the small part), `n` counts Y-vertices. A coloring
/// is *good* for the spec when it contains neither a red K_{a,a} nor a blue
/// K_{s,s}; the host arrows the pair exactly when no good coloring exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub m: usize,
    pub n: usize,
    /// Red target order: a red K_{a,a} is forbidden in a good coloring.
    pub a: usize,
    /// Blue target order: a blue K_{s,s} is forbidden in a good coloring.
    pub s: usize,
}

impl ProblemSpec {
    /// Validates `m, n, a, s >= 1` and the Y capacity bound.
    pub fn new(m: usize, n: usize, a: usize, s: usize) -> Result<Self, CoreError> {
        if m < 1 || n < 1 || a < 1 || s < 1 {
            return Err(CoreError::InvalidSpec { m, n, a, s });
        }
        if n > Y_CAPACITY {
            return Err(CoreError::CapacityExceeded {
                n,
                capacity: Y_CAPACITY,
            });
        }
        Ok(ProblemSpec { m, n, a, s })
    }
}

impl std::fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "K_{{{},{}}} -> (K_{{{},{}}}, K_{{{},{}}})",
            self.m, self.n, self.a, self.a, self.s, self.s
        )
    }
}
