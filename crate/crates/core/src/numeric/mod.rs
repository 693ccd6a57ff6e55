//! Exact integer and rational arithmetic: dense matrices, polynomials and
//! characteristic polynomials.

mod matrix;
mod poly;

pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::IntPolynomial;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("{len} entries do not form a {n}x{n} matrix")]
    NotSquare { len: usize, n: usize },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix inverse is not integral")]
    NonIntegralInverse,
    #[error("cannot parse rational number {0:?}")]
    BadRational(String),
}

/// `det(tI - M)`.
pub fn mat_charpoly(m: &IntMatrix) -> IntPolynomial {
    m.charpoly()
}

/// Primitive gcd with positive leading coefficient.
pub fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial, NumericError> {
    p.gcd(q)
}

pub fn poly_eval(p: &IntPolynomial, x: &BigRational) -> BigRational {
    p.eval(x)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `10^-digits`
pub fn ten_pow_neg(digits: u32) -> BigRational {
    BigRational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(10), digits as usize),
    )
}

/// Parses `p/q`, an integer, or a plain decimal (`0.001`, `1e-9`) exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, NumericError> {
    let bad = || NumericError::BadRational(s.to_string());
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_part}{frac_part}0")
        .parse()
        .map_err(|_| bad())?;
    let digits = digits / BigInt::from(10);
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(digits);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -r } else { r })
}

/// `num/den` with the denominator always written.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with `places` fractional digits, rounded toward -inf
/// (`up = false`) or +inf (`up = true`), so the text is a valid outer bound.
pub fn format_decimal(r: &BigRational, places: usize, up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r * BigRational::from_integer(scale.clone());
    let v = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = v.is_negative();
    let (int, frac) = v.abs().div_rem(&scale);
    let mut frac = frac.to_string();
    while frac.len() < places {
        frac.insert(0, '0');
    }
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/1000000000").unwrap(), ten_pow_neg(9));
        assert_eq!(parse_rational("1e-9").unwrap(), ten_pow_neg(9));
        assert_eq!(parse_rational("0.000001").unwrap(), ten_pow_neg(6));
        assert_eq!(parse_rational("-2.5").unwrap(), rational(-5, 2));
        assert_eq!(parse_rational("3").unwrap(), rational(3, 1));
        assert_eq!(parse_rational("6/-4").unwrap(), rational(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rational(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&rational(7, 1)), "7/1");
    }

    #[test]
    fn decimal_bounds() {
        let r = rational(-1, 3);
        assert_eq!(format_decimal(&r, 3, false), "-0.334");
        assert_eq!(format_decimal(&r, 3, true), "-0.333");
        assert_eq!(format_decimal(&rational(21, 8), 2, true), "2.63");
        assert_eq!(format_decimal(&rational(5, 1), 0, false), "5");
    }
}
