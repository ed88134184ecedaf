//! Shared verdict types for the structural verifiers.

use crate::mat::vec_is_zero;
use crate::scalar::Scalar;

/// One failed law instance: which law, at which basis tuple, and the exact
/// residual vector that should have been zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub law: String,
    pub at: Vec<usize>,
    pub residual: Vec<Scalar>,
}

/// Outcome of checking a family of laws on every basis tuple. Empty
/// `violations` means every law held exactly.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Verification {
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn new() -> Self {
        Verification { violations: Vec::new() }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Record `residual` under `law` at basis tuple `at` unless it is zero.
    pub(crate) fn check(&mut self, law: &str, at: &[usize], residual: Vec<Scalar>) {
        if !vec_is_zero(&residual) {
            self.violations.push(Violation {
                law: law.to_string(),
                at: at.to_vec(),
                residual,
            });
        }
    }

}
