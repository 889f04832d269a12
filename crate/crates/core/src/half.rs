use std::fmt;

/// A half-integer angular momentum quantum number, stored as `2j` (or `2m`)
/// so that half-integral values are exact and usable as array strides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    /// Builds from a doubled value: `from_twice(3)` is 3/2.
    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    /// Builds from an integer value: `from_int(2)` is 2.
    pub const fn from_int(value: i64) -> Self {
        Self { twice: 2 * value }
    }

    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }

    /// `true` when `self - other` is a whole integer, i.e. both live on the
    /// same half-integer ladder.
    pub const fn same_ladder(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_ladders() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
        assert_eq!(HalfInt::from_twice(3).value(), 1.5);
        assert!(HalfInt::from_twice(3).same_ladder(HalfInt::from_twice(1)));
        assert!(!HalfInt::from_twice(3).same_ladder(HalfInt::from_int(1)));
    }

    #[test]
    fn ordering_follows_value() {
        assert!(HalfInt::from_twice(1) < HalfInt::from_int(1));
        assert!(HalfInt::from_int(3) > HalfInt::from_twice(5));
    }
}
