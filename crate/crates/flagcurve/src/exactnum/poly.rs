use super::{sign, ExactError, Rational};
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial over ℚ, stored dense by ascending degree.
/// Invariant: the last stored coefficient is nonzero; the zero polynomial
/// stores an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial t.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// c·t^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub(crate) fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// p(a·t + b), by Horner over the polynomial ring.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Polynomial {
        let lin = Polynomial::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// p(−t): flips the sign of every odd-degree coefficient.
    pub fn reflect(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial { coeffs }
    }

    /// Quotient and remainder with deg r < deg d. Division by zero is an error.
    pub fn divrem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), ExactError> {
        if d.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let dd = d.deg();
        let dlc = d.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut q = vec![Rational::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top / &dlc;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[qi + j] = &rem[qi + j] - &(dc * &c);
            }
            q[qi] = c;
        }
        Ok((Polynomial::from_coeffs(q), Polynomial::from_coeffs(rem)))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    /// Used where exactness is guaranteed structurally (Bareiss pivots,
    /// squarefree factor chains).
    pub(crate) fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.divrem(d).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r.keep_sign_normalized();
        }
        a.monic()
    }

    /// Divides by the leading coefficient (identity on zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = Rational::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Divides by |leading coefficient|: monic up to sign, preserving the sign
    /// of every value. Keeps Sturm-chain coefficients small.
    pub(crate) fn keep_sign_normalized(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = Rational::one() / lc.abs();
                self.scale(&inv)
            }
        }
    }

    /// Sign of the value at +∞ (resp. −∞ with `at_minus`).
    pub fn sign_at_infinity(&self, at_minus: bool) -> i8 {
        match self.leading_coeff() {
            None => 0,
            Some(lc) => {
                let s = sign(lc);
                if at_minus && self.deg() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sgn, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sgn == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sgn} ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", super::rational_string(&mag))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rint};

    fn p(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn construction_trims() {
        assert!(Polynomial::from_coeffs(vec![rint(0), rint(0)]).is_zero());
        assert_eq!(p(&[(1, 1), (0, 1), (0, 1)]).degree(), Some(0));
        assert_eq!(Polynomial::x().degree(), Some(1));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn eval_horner() {
        // 2t² − 3t + 1 at t = 1/2 is 0
        let q = p(&[(1, 1), (-3, 1), (2, 1)]);
        assert!(q.eval(&rat(1, 2)).is_zero());
        assert_eq!(q.eval(&rint(2)), rint(3));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, 1), (1, 1)]); // 1 + t
        let b = p(&[(-1, 1), (1, 1)]); // −1 + t
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(&a + &b, p(&[(0, 1), (2, 1)]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(a.pow(2), p(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn divrem_exact_and_remainder() {
        let num = p(&[(-1, 1), (0, 1), (1, 1)]); // t² − 1
        let den = p(&[(-1, 1), (1, 1)]); // t − 1
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q, p(&[(1, 1), (1, 1)]));
        assert!(r.is_zero());

        let (q, r) = p(&[(1, 1), (0, 1), (1, 1)]).divrem(&den).unwrap(); // t²+1
        assert_eq!(q, p(&[(1, 1), (1, 1)]));
        assert_eq!(r, p(&[(2, 1)]));
        assert!(num.divrem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn gcd_monic() {
        // gcd((t−1)(t−2), (t−2)(t−3)) = t − 2
        let a = &p(&[(-1, 1), (1, 1)]) * &p(&[(-2, 1), (1, 1)]);
        let b = &p(&[(-2, 1), (1, 1)]) * &p(&[(-3, 1), (1, 1)]);
        assert_eq!(a.gcd(&b), p(&[(-2, 1), (1, 1)]));
        // coprime
        let g = Polynomial::x().gcd(&p(&[(1, 1), (1, 1)]));
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn derivative_and_reflect() {
        let q = p(&[(5, 1), (3, 1), (0, 1), (2, 1)]); // 2t³ + 3t + 5
        assert_eq!(q.derivative(), p(&[(3, 1), (0, 1), (6, 1)]));
        assert_eq!(q.reflect(), p(&[(5, 1), (-3, 1), (0, 1), (-2, 1)]));
        assert_eq!(q.reflect().reflect(), q);
    }

    #[test]
    fn compose_linear_shift() {
        let q = p(&[(0, 1), (0, 1), (1, 1)]); // t²
        // (t+1)² = t² + 2t + 1
        assert_eq!(
            q.compose_linear(&rint(1), &rint(1)),
            p(&[(1, 1), (2, 1), (1, 1)])
        );
        // (−t)² = t²
        assert_eq!(q.compose_linear(&rint(-1), &rint(0)), q);
        assert_eq!(q.reflect(), q.compose_linear(&rint(-1), &rint(0)));
    }

    #[test]
    fn display_readable() {
        let q = p(&[(3, 1), (-1, 2), (0, 1), (1, 1)]);
        assert_eq!(q.to_string(), "t^3 - 1/2*t + 3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::x().to_string(), "t");
    }

    #[test]
    fn sign_at_infinity() {
        let q = p(&[(0, 1), (0, 1), (0, 1), (-2, 1)]); // −2t³
        assert_eq!(q.sign_at_infinity(false), -1);
        assert_eq!(q.sign_at_infinity(true), 1);
        assert_eq!(Polynomial::zero().sign_at_infinity(false), 0);
    }
}
