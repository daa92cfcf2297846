//! Elementary symmetric functions of the tangent lengths.

use serde::Serialize;

use crate::lengths::TangentLengths;

/// `sigma[j]` is the sum of all `j`-fold products of the tangent lengths,
/// i.e. the coefficient of `x^(n-j)` in `prod (x + tj)`. `sigma[0] = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricFunctions {
    sigma: Vec<f64>,
}

impl SymmetricFunctions {
    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn get(&self, j: usize) -> f64 {
        self.sigma[j]
    }

    /// Number of tangent lengths the functions were built from.
    pub fn n(&self) -> usize {
        self.sigma.len() - 1
    }
}

/// Expand `prod (x + tj)` one linear factor at a time.
///
/// For positive inputs every update adds nonnegative terms, so there is no
/// cancellation.
pub fn elementary_symmetric(t: &TangentLengths) -> SymmetricFunctions {
    elementary_symmetric_of(t.values())
}

pub(crate) fn elementary_symmetric_of(values: &[f64]) -> SymmetricFunctions {
    let n = values.len();
    let mut sigma = vec![0.0; n + 1];
    sigma[0] = 1.0;
    for (i, &t) in values.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            sigma[j] += t * sigma[j - 1];
        }
    }
    SymmetricFunctions { sigma }
}
