use std::fmt;
use std::ops::{Add, Mul};

use super::{AlgebraError, Polynomial};

/// A quotient of polynomials, deliberately kept unreduced.
///
/// Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, AlgebraError> {
        if denominator.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { numerator: p, denominator: Polynomial::one() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.denominator == rhs.denominator {
            return RationalFunction {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalFunction {
            numerator: &self.numerator * &rhs.denominator + &rhs.numerator * &self.denominator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;

    #[test]
    fn equality_is_by_cross_multiplication() {
        let a = RationalFunction::new(p("x1").unwrap(), p("x1 + 1").unwrap()).unwrap();
        let b = RationalFunction::new(p("x1^2 + x1*y1").unwrap(), p("(x1+1)*(x1+y1)").unwrap()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, RationalFunction::from_polynomial(p("x1").unwrap()));
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn sums_share_or_build_denominators() {
        let d = p("1 + z1 - z2").unwrap();
        let a = RationalFunction::new(p("z1 - z2").unwrap(), d.clone()).unwrap();
        let b = RationalFunction::new(Polynomial::one(), d.clone()).unwrap();
        let s = &a + &b;
        assert_eq!(s.denominator(), &d);
        assert_eq!(s, RationalFunction::from_polynomial(Polynomial::one()));
        let half = RationalFunction::new(Polynomial::one(), p("2").unwrap()).unwrap();
        assert_eq!(&half + &half, RationalFunction::from_polynomial(Polynomial::one()));
        assert_eq!(&half * &half, RationalFunction::new(Polynomial::one(), p("4").unwrap()).unwrap());
    }
}
