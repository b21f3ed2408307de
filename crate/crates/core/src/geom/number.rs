//! Exact rationals for ray parameters and ray-hit coordinates.
//!
//! Numerators and denominators are kept in `i128`. With input coordinates
//! bounded by 2^30 every value the engines build stays below 2^100, but the
//! cross-multiplication in comparisons can exceed `i128`; those fall back to
//! big integers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

/// A reduced fraction with a strictly positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num / den`. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Rational { num, den }
    }

    /// Builds `num / den` from big integers. Panics if the reduced
    /// fraction does not fit in `i128`.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        let zero = BigInt::from(0);
        assert!(den != zero, "zero denominator");
        let (mut a, mut b) = (num.clone(), den.clone());
        while b != zero {
            let r = &a % &b;
            a = b;
            b = r;
        }
        let g = if a < zero { -a } else { a };
        let (mut num, mut den) = (num / &g, den / &g);
        if den < zero {
            num = -num;
            den = -den;
        }
        let fit = |v: BigInt| i128::try_from(v).expect("rational exceeds 128 bits");
        Rational { num: fit(num), den: fit(den) }
    }

    pub fn from_int(v: i128) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn signum(&self) -> i32 {
        self.num.signum() as i32
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        match (self.num.checked_mul(other.den), other.num.checked_mul(self.den)) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => {
                let l = BigInt::from(self.num) * BigInt::from(other.den);
                let r = BigInt::from(other.num) * BigInt::from(self.den);
                l.cmp(&r)
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v as i128)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
