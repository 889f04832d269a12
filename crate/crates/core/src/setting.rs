use crate::error::{domain, Result};
use crate::half::HalfInt;

/// A problem instance: `n` identically prepared qubits of Bloch purity `r`.
///
/// The depolarizing error probability per qubit is `eta = (3/4)(1 - r)`, so
/// `r = 1` is the noiseless pure-state limit and `r = 0` is complete
/// depolarization. The likelihood ratio `R = (1 + r)/(1 - r)` and its
/// logarithm are cached because every block statistic is a function of them;
/// at `r = 1` both are infinite and callers take analytic branches instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationSetting {
    copies: u64,
    purity: f64,
    ratio: f64,
    log_ratio: f64,
}

impl EstimationSetting {
    pub fn new(copies: u64, purity: f64) -> Result<Self> {
        if copies == 0 {
            return Err(domain("copies must be at least 1"));
        }
        if !(0.0..=1.0).contains(&purity) {
            return Err(domain(format!(
                "purity must lie in [0, 1], got {purity}"
            )));
        }
        let ratio = (1.0 + purity) / (1.0 - purity);
        // ln R = 2 atanh r, stable for r near 0 and +inf at r = 1.
        let log_ratio = 2.0 * purity.atanh();
        Ok(Self {
            copies,
            purity,
            ratio,
            log_ratio,
        })
    }

    pub fn copies(&self) -> u64 {
        self.copies
    }

    pub fn purity(&self) -> f64 {
        self.purity
    }

    /// `R = (1 + r)/(1 - r)`; `+inf` at `r = 1`.
    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// `ln R = 2 atanh r`; `+inf` at `r = 1`.
    pub fn log_ratio(&self) -> f64 {
        self.log_ratio
    }

    /// Depolarizing error probability `eta = (3/4)(1 - r)`.
    pub fn error_probability(&self) -> f64 {
        0.75 * (1.0 - self.purity)
    }

    pub fn is_pure(&self) -> bool {
        self.purity == 1.0
    }

    pub fn is_fully_mixed(&self) -> bool {
        self.purity == 0.0
    }

    /// Largest total angular momentum, `J = N/2`.
    pub fn j_max(&self) -> HalfInt {
        HalfInt::from_twice(self.copies as i64)
    }

    /// Smallest total angular momentum: 0 for even `N`, 1/2 for odd `N`.
    pub fn j_min(&self) -> HalfInt {
        HalfInt::from_twice((self.copies % 2) as i64)
    }

    /// Number of distinct blocks, `floor(N/2) + 1`.
    pub fn block_count(&self) -> usize {
        (self.copies / 2) as usize + 1
    }

    /// Checks that `j` indexes a valid block of this setting.
    pub fn validate_block(&self, j: HalfInt) -> Result<()> {
        let ok = j >= self.j_min() && j <= self.j_max() && j.same_ladder(self.j_min());
        if ok {
            Ok(())
        } else {
            Err(domain(format!(
                "j = {j} is not a block of N = {} (expected {} <= j <= {} on the same ladder)",
                self.copies,
                self.j_min(),
                self.j_max()
            )))
        }
    }

    /// Iterator over the valid block labels, ascending.
    pub fn blocks(&self) -> impl Iterator<Item = HalfInt> {
        let start = (self.copies % 2) as i64;
        let end = self.copies as i64;
        (start..=end).step_by(2).map(HalfInt::from_twice)
    }
}
