//! Scalar abstraction for probabilities and utilities.
//!
//! All probability arithmetic in this crate is generic over [`Scalar`], so the
//! same engine runs on `f64` (the default), `f32`, or exact rationals
//! ([`num_rational::BigRational`]). Rational scalars turn every expected-utility
//! figure into an exact number, which is occasionally handy for pinning down
//! values that float arithmetic only reaches within rounding error.

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt;

/// Numeric requirements for probabilities and utility values.
pub trait Scalar:
    Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + PartialOrd
    + Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Slack allowed in normalization checks, zero-mass detection and argmax
    /// ties. Zero for exact scalar types.
    fn tolerance() -> Self;

    /// Render a value so that [`Scalar::from_decimal`] parses it back exactly.
    fn to_literal(&self) -> String {
        format!("{self}")
    }

    /// Parse a decimal literal such as `0.99`, `-1.5e3` or `1001000`.
    ///
    /// The digits are interpreted exactly (mantissa over a power of ten), so
    /// rational scalars read `0.99` as 99/100 rather than the nearest float.
    /// A `p/q` fraction form is accepted as well, which lets rational values
    /// without a finite decimal expansion round-trip through problem files.
    fn from_decimal(text: &str) -> Option<Self> {
        if let Some((num, den)) = text.split_once('/') {
            let n = parse_plain_decimal::<Self>(num)?;
            let d = parse_plain_decimal::<Self>(den)?;
            if d.is_zero() {
                return None;
            }
            return Some(n / d);
        }
        parse_plain_decimal(text)
    }

    /// `|self - other| <= tolerance`.
    fn close_to(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= Self::tolerance()
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    // f32 parsing and summation cannot hold 1e-9; use a width-appropriate slack.
    fn tolerance() -> Self {
        1e-5
    }
}

impl Scalar for BigRational {
    fn tolerance() -> Self {
        BigRational::from_integer(0.into())
    }

    fn to_literal(&self) -> String {
        if self.is_integer() {
            return format!("{}", self.numer());
        }
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Exact decimal parsing: sign, digits, optional fraction, optional exponent.
fn parse_plain_decimal<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    let (negative, rest) = match text.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    if rest.is_empty() {
        return None;
    }

    let (mantissa_text, exp_text) = match rest.find(['e', 'E']) {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let mut exponent: i32 = match exp_text {
        Some(e) => e.parse().ok()?,
        None => 0,
    };

    let mut mantissa: i128 = 0;
    let mut seen_digit = false;
    let mut seen_dot = false;
    for ch in mantissa_text.chars() {
        match ch {
            '0'..='9' => {
                seen_digit = true;
                mantissa = mantissa
                    .checked_mul(10)?
                    .checked_add((ch as u8 - b'0') as i128)?;
                if seen_dot {
                    exponent = exponent.checked_sub(1)?;
                }
            }
            '.' if !seen_dot => seen_dot = true,
            '_' => {}
            _ => return None,
        }
    }
    if !seen_digit {
        return None;
    }
    if negative {
        mantissa = -mantissa;
    }

    let mut value = S::from_i128(mantissa)?;
    let ten = S::from_u8(10)?;
    // Exponents stay tiny in practice; a multiply loop keeps rationals exact.
    if exponent.unsigned_abs() > 400 {
        return None;
    }
    for _ in 0..exponent.max(0) {
        value = value * ten.clone();
    }
    for _ in 0..(-exponent).max(0) {
        value = value / ten.clone();
    }
    Some(value)
}

/// Mean of 1/n repeated n times; uniform probabilities in any scalar type.
pub fn uniform_weight<S: Scalar>(count: usize) -> S {
    S::one() / S::from_usize(count.max(1)).expect("count fits scalar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn decimal_parsing_is_exact_for_rationals() {
        assert_eq!(BigRational::from_decimal("0.99"), Some(rat(99, 100)));
        assert_eq!(BigRational::from_decimal("-1.5e3"), Some(rat(-1500, 1)));
        assert_eq!(BigRational::from_decimal("2e-2"), Some(rat(1, 50)));
        assert_eq!(BigRational::from_decimal("1/3"), Some(rat(1, 3)));
        assert_eq!(BigRational::from_decimal("1001000"), Some(rat(1001000, 1)));
    }

    #[test]
    fn decimal_parsing_matches_float_literals() {
        assert_eq!(f64::from_decimal("0.99"), Some(0.99));
        assert_eq!(f64::from_decimal("1e6"), Some(1_000_000.0));
        assert_eq!(f64::from_decimal("-0.25"), Some(-0.25));
        assert_eq!(f64::from_decimal(""), None);
        assert_eq!(f64::from_decimal("1.2.3"), None);
        assert_eq!(f64::from_decimal("abc"), None);
    }

    #[test]
    fn literal_round_trip() {
        for v in [0.99_f64, 0.5, 1000.0, 990_010.0, 1.0 / 3.0] {
            let text = v.to_literal();
            assert_eq!(f64::from_decimal(&text), Some(v), "literal {text}");
        }
        let third = rat(1, 3);
        assert_eq!(
            BigRational::from_decimal(&third.to_literal()),
            Some(third)
        );
    }

    #[test]
    fn uniform_weights() {
        assert_eq!(uniform_weight::<f64>(4), 0.25);
        assert_eq!(uniform_weight::<BigRational>(3), rat(1, 3));
    }
}
