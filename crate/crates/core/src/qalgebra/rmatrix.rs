//! The R-matrix of the two-parameter quantum plane.
//!
//! Rows and columns are indexed by ordered pairs (11), (12), (21), (22) of
//! generator indices, with 1 = x-type and 2 = y-type. In generic mode the
//! entries are
//!
//! ```text
//!     | q    0        0      0 |
//!     | 0    q - p^-1 q p^-1 0 |
//!     | 0    1        0      0 |
//!     | 0    0        0      q |
//! ```
//!
//! which reduces to the one-parameter matrix when p = q.

use crate::scalars::{ParamMode, ScalarRF};

/// Row/column index of the pair `(i, j)` with i, j in {1, 2}.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!((1..=2).contains(&i) && (1..=2).contains(&j));
    (i - 1) * 2 + (j - 1)
}

/// The 4x4 R-matrix, with the mode relation already substituted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    mode: ParamMode,
    entries: [[ScalarRF; 4]; 4],
}

impl RMatrix {
    pub fn new(mode: ParamMode) -> Self {
        let zero = ScalarRF::zero;
        let q = mode.q_pow(1);
        let mut entries: [[ScalarRF; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero()));
        entries[pair_index(1, 1)][pair_index(1, 1)] = q.clone();
        entries[pair_index(1, 2)][pair_index(1, 2)] = q.sub(&mode.p_pow(-1));
        entries[pair_index(1, 2)][pair_index(2, 1)] = q.mul(&mode.p_pow(-1));
        entries[pair_index(2, 1)][pair_index(1, 2)] = ScalarRF::one();
        entries[pair_index(2, 2)][pair_index(2, 2)] = q;
        RMatrix { mode, entries }
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    /// Entry addressed by the upper pair (i, j) and lower pair (k, l).
    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &ScalarRF {
        &self.entries[pair_index(i, j)][pair_index(k, l)]
    }

    pub fn matrix(&self) -> &[[ScalarRF; 4]; 4] {
        &self.entries
    }
}
