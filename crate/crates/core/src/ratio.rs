//! Exact rational values for the `value/n` ratios.
//!
//! Ratio detection (value = 2n at fundamental points, value = 3n at the
//! ratio-3 points) and every bound comparison must be exact, so floats are
//! banned from checks; this type compares by cross-multiplication in 128
//! bits and only converts to `f64` for display.

use std::cmp::Ordering;
use std::fmt;

/// A non-negative rational number stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Builds `num/den` reduced to lowest terms. Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "ratio denominator must be nonzero");
        let g = crate::seq::gcd(num, den);
        if g == 0 {
            // num == 0 and den == 0 is excluded above; num == 0 reduces to 0/1.
            return Ratio { num: 0, den: 1 };
        }
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_integer(k: u64) -> Self {
        Ratio { num: k, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Exact equality against an integer.
    pub fn eq_integer(&self, k: u64) -> bool {
        self.den == 1 && self.num == k
    }

    /// Display-only approximation; never used in a check.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Ratio::new(156, 141);
        assert_eq!((r.numer(), r.denom()), (52, 47));
        assert_eq!(Ratio::new(663, 663), Ratio::from_integer(1));
        assert_eq!(Ratio::new(0, 7), Ratio::new(0, 1));
    }

    #[test]
    fn integer_equality_is_exact() {
        assert!(Ratio::new(24, 12).eq_integer(2));
        assert!(Ratio::new(54, 18).eq_integer(3));
        assert!(!Ratio::new(25, 13).eq_integer(2));
        assert!(!Ratio::new(25, 13).is_integer());
    }

    #[test]
    fn ordering_crosses_multiplication() {
        // 21/9 = 7/3 < 5/2 < 66/24 = 11/4
        assert!(Ratio::new(21, 9) < Ratio::new(5, 2));
        assert!(Ratio::new(66, 24) >= Ratio::new(5, 2));
        // large values that would overflow a 64-bit cross product
        let a = Ratio::new(u64::MAX - 1, u64::MAX);
        let b = Ratio::new(u64::MAX - 2, u64::MAX);
        assert!(b < a);
        assert!(a < Ratio::from_integer(1));
    }

    proptest! {
        #[test]
        fn ordering_agrees_with_i128_model(
            an in 0u64..1 << 62, ad in 1u64..1 << 62,
            bn in 0u64..1 << 62, bd in 1u64..1 << 62,
        ) {
            let a = Ratio::new(an, ad);
            let b = Ratio::new(bn, bd);
            let model = (an as i128 * bd as i128).cmp(&(bn as i128 * ad as i128));
            prop_assert_eq!(a.cmp(&b), model);
            // reduction must preserve the value
            prop_assert_eq!(a.numer() as u128 * ad as u128, an as u128 * a.denom() as u128);
        }

        #[test]
        fn eq_matches_cmp(an in 0u64..1000, ad in 1u64..1000, k in 1u64..4) {
            let a = Ratio::new(an * k, ad * k);
            let b = Ratio::new(an, ad);
            prop_assert_eq!(a, b);
            prop_assert_eq!(a.cmp(&b), std::cmp::Ordering::Equal);
        }
    }
}
