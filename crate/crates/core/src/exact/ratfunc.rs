//! Elements of ℚ(t), kept reduced with a monic denominator.

use std::fmt;

use super::poly::Poly;
use super::ring::{Field, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let Some(lc) = den.leading().cloned() else {
            return Err(Error::DivisionByZero);
        };
        let var = den.var();
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero_in(var)));
        }
        if den.deg() == Some(0) {
            let inv = lc.inv().unwrap();
            return Ok(RatFunc {
                num: num.scale(&inv),
                den: Poly::constant(Rational::one(), var),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.deg() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let inv = den.leading().unwrap().inv().unwrap();
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFunc {
            num: p,
            den: Poly::constant(Rational::one(), var),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c, 't'))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.deg() == Some(0)
    }

    /// The numerator, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    fn build(num: Poly, den: Poly) -> Self {
        Self::new(num, den).expect("denominator of a product of nonzero polynomials")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero_in('t'))
    }
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::build(&self.num + &other.num, self.den.clone());
        }
        Self::build(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::build(&self.num * &other.num, &self.den * &other.den)
    }
    fn negate(&self) -> Self {
        RatFunc {
            num: self.num.negate(),
            den: self.den.clone(),
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        Some(Self::build(&self.num * &other.den, &self.den * &other.num))
    }
}

impl Field for RatFunc {}
