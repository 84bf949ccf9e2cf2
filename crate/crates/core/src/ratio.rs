//! Exact non-negative rationals.
//!
//! Approximation factors, expansion parameters and achieved worst ratios are
//! all compared exactly via cross multiplication; the boundary cases the
//! schemes are built around (`c < 3`, `c < 1 + 1/(4k)`) must be decided
//! without tolerances.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A non-negative rational `num/den` kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u128,
    den: u128,
}

pub const ONE: Ratio = Ratio { num: 1, den: 1 };

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub const ONE: Ratio = ONE;
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };

    /// Creates `num/den` in lowest terms.
    ///
    /// Panics if `den == 0`; fallible construction goes through [`FromStr`].
    pub fn new(num: u128, den: u128) -> Ratio {
        assert!(den != 0, "ratio denominator must be nonzero");
        let g = gcd(num, den);
        if g == 0 {
            return Ratio { num: 0, den: 1 };
        }
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(v: u64) -> Ratio {
        Ratio {
            num: v as u128,
            den: 1,
        }
    }

    pub fn numer(&self) -> u128 {
        self.num
    }

    pub fn denom(&self) -> u128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `1 - self`; panics if `self > 1`.
    pub fn one_minus(&self) -> Ratio {
        assert!(self.num <= self.den, "one_minus needs a ratio <= 1");
        Ratio::new(self.den - self.num, self.den)
    }

    pub fn squared(&self) -> Ratio {
        let num = self
            .num
            .checked_mul(self.num)
            .expect("ratio numerator overflow in squared");
        let den = self
            .den
            .checked_mul(self.den)
            .expect("ratio denominator overflow in squared");
        Ratio::new(num, den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn cross_cmp(a: u128, b: u128, c: u128, d: u128) -> Ordering {
        // a/b vs c/d, i.e. a*d vs c*b; falls back to big integers on overflow.
        match (a.checked_mul(d), c.checked_mul(b)) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => {
                let x = BigUint::from(a) * BigUint::from(d);
                let y = BigUint::from(c) * BigUint::from(b);
                x.cmp(&y)
            }
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        Ratio::cross_cmp(self.num, self.den, other.num, other.den)
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

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `p`, `p/q`, and plain decimals such as `2.5`.
    fn from_str(s: &str) -> Result<Ratio, Error> {
        let s = s.trim();
        let bad = |s: &str| Error::Parse(format!("invalid rational {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let num: u128 = p.trim().parse().map_err(|_| bad(s))?;
            let den: u128 = q.trim().parse().map_err(|_| bad(s))?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Ratio::new(num, den));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(s));
            }
            let int: u128 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad(s))?
            };
            let frac_val: u128 = frac.parse().map_err(|_| bad(s))?;
            let den = 10u128.pow(frac.len() as u32);
            return Ok(Ratio::new(int * den + frac_val, den));
        }
        let num: u128 = s.parse().map_err(|_| bad(s))?;
        Ok(Ratio::new(num, 1))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Ratio, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert_eq!(Ratio::new(0, 7), Ratio::ZERO);
        assert_eq!(Ratio::new(5, 1).to_string(), "5");
        assert_eq!(Ratio::new(30, 11).to_string(), "30/11");
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Ratio::new(1, 3) < Ratio::new(1, 2));
        assert!(Ratio::new(3, 1) > Ratio::ONE);
        assert_eq!(Ratio::new(2, 4).cmp(&Ratio::new(1, 2)), Ordering::Equal);
        // 30/11 vs 30/11 - tiny: exact strict comparison.
        let c = Ratio::new(30_000_000_000, 11_000_000_000);
        let c_minus = Ratio::new(30_000_000_000 - 11, 11_000_000_000);
        assert!(c_minus < c);
    }

    #[test]
    fn ordering_survives_u128_overflow() {
        let a = Ratio::new(u128::MAX / 2, u128::MAX / 3);
        let b = Ratio::new(u128::MAX / 3, u128::MAX / 2);
        assert!(a > b);
    }

    #[test]
    fn parses() {
        assert_eq!("3".parse::<Ratio>().unwrap(), Ratio::from_int(3));
        assert_eq!("3/2".parse::<Ratio>().unwrap(), Ratio::new(3, 2));
        assert_eq!("2.5".parse::<Ratio>().unwrap(), Ratio::new(5, 2));
        assert_eq!("0.001".parse::<Ratio>().unwrap(), Ratio::new(1, 1000));
        assert!("3/0".parse::<Ratio>().is_err());
        assert!("x".parse::<Ratio>().is_err());
    }

    #[test]
    fn one_minus_and_squared() {
        assert_eq!(Ratio::new(1, 3).one_minus(), Ratio::new(2, 3));
        assert_eq!(Ratio::new(3, 2).squared(), Ratio::new(9, 4));
    }
}
