//! Exact rational arithmetic, univariate polynomials over ℚ, polynomial
//! matrices, and certified real-root counting/isolation.
//!
//! Everything here is exact: no floating point appears in any verification
//! path. Floats exist only as a presentation convenience ([`decimal_string`]).

mod matrix;
mod poly;
mod roots;

pub use matrix::{PolyMatrix, QMatrix};
pub use poly::Polynomial;
pub use roots::{
    common_roots, count_real_roots, is_squarefree, isolate_roots, refine_interval,
    squarefree_part, RootInterval,
};

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational. Always reduced with positive denominator
/// (guaranteed by the underlying representation).
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("identically zero")]
    ZeroPolynomial,
    #[error("non-square selection: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("malformed rational '{0}'")]
    BadRational(String),
}

/// `rat(p, q)` is the rational p/q.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer n as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign of a rational as −1, 0, or +1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses "p/q", "p", or a plain decimal like "-0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::BadRational(s.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    } else if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let abs = Rational::from_integer(i.abs()) + Rational::new(f, scale);
        Ok(if neg { -abs } else { abs })
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

/// Renders a rational as "p/q" (or "p" for integers).
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering to `digits` places, correctly rounded toward zero.
/// Presentation only — never feeds back into any computation.
pub fn decimal_string(x: &Rational, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (a * Rational::from_integer(scale.clone())).floor();
    let v = scaled.to_integer();
    let int_part = &v / &scale;
    let frac_part = &v % &scale;
    let s = if digits == 0 {
        int_part.to_string()
    } else {
        format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits)
    };
    if neg && !v.is_zero() {
        format!("-{s}")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), rint(-7));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 4), 2), "0.25");
        assert_eq!(decimal_string(&rat(-63, 100), 2), "-0.63");
        assert_eq!(decimal_string(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal_string(&rint(5), 0), "5");
        assert_eq!(decimal_string(&rat(111, 100), 2), "1.11");
    }

    #[test]
    fn string_round_trip() {
        for (p, q) in [(1i64, 2i64), (-3, 7), (22, 1), (0, 5)] {
            let x = rat(p, q);
            assert_eq!(parse_rational(&rational_string(&x)).unwrap(), x);
        }
    }
}
