//! Small helpers around `num`'s arbitrary-precision rationals.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;
use num::{One, Signed, Zero};

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// An integer as an exact rational.
pub fn rat_int(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

/// Exact rational value of a finite `f64` (every finite double is a binary
/// fraction, so this never loses information).
pub fn rat_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Nearest `f64` to a rational.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"2.5"`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Ok(int) = s.parse::<BigInt>() {
        return Some(BigRational::from_integer(int));
    }
    // Decimal notation: shift the point into an exact power of ten.
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let whole_part: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        let frac_part: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mut value = BigRational::from_integer(whole_part.abs())
            + BigRational::new(frac_part, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    None
}

/// Renders a rational as `"p/q"` (or `"p"` when the denominator is one).
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7"), Some(rat_int(-7)));
        assert_eq!(parse_rational("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("abc").is_none());
    }

    #[test]
    fn float_round_trip_is_exact() {
        let r = rat_from_f64(0.1).unwrap();
        assert_eq!(rat_to_f64(&r), 0.1);
        assert_ne!(r, rat(1, 10)); // 0.1 is not exactly 1/10 in binary
    }

    #[test]
    fn formats_both_shapes() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&rat_int(5)), "5");
    }
}
