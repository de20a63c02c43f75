//! The parameter tuple `(n, a, b)` of `f_c(t; x) = xⁿ + t(x² + ax + b)`.

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadrinomialParams {
    n: usize,
    a: Rational,
    b: Rational,
}

impl QuadrinomialParams {
    pub fn new(n: usize, a: Rational, b: Rational) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "degree n must be at least 3, got {n}"
            )));
        }
        Ok(QuadrinomialParams { n, a, b })
    }

    pub fn from_ints(n: usize, a: i64, b: i64) -> Result<Self> {
        Self::new(n, Rational::from_i64(a), Rational::from_i64(b))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// ⌊(n−3)/2⌋
    pub fn m0(&self) -> usize {
        (self.n - 3) / 2
    }

    /// ⌈(n−3)/2⌉
    pub fn m1(&self) -> usize {
        (self.n - 2) / 2
    }

    /// `g(x) = x² + ax + b`.
    pub fn g(&self) -> Poly {
        Poly::new(vec![self.b.clone(), self.a.clone(), Rational::one()], 'x')
    }

    /// `f_c(t; x)` as a polynomial in `x` with coefficients in ℚ[t].
    pub fn f_symbolic(&self) -> Poly<Poly> {
        let t = |c: &Rational| Poly::monomial(c.clone(), 1, 't');
        let mut coeffs = vec![Poly::zero_in('t'); self.n + 1];
        coeffs[0] = t(&self.b);
        coeffs[1] = t(&self.a);
        coeffs[2] = t(&Rational::one());
        coeffs[self.n] = Poly::constant(Rational::one(), 't');
        Poly::new(coeffs, 'x')
    }

    /// `f_c(t₀; x)` for a fixed rational `t₀`.
    pub fn f_at(&self, t: &Rational) -> Poly {
        let mut p = self.g().scale(t);
        p = &p + &Poly::monomial(Rational::one(), self.n, 'x');
        p
    }

    /// The boundary value `(n−1)²a² / (4n(n−2))` for `b`.
    pub fn threshold(&self) -> Rational {
        let n = self.n as i64;
        let a2 = &self.a * &self.a;
        a2 * Rational::from_i64((n - 1) * (n - 1)) / Rational::from_i64(4 * n * (n - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    #[test]
    fn derived_indices() {
        for n in 3..20 {
            let p = QuadrinomialParams::from_ints(n, 1, 1).unwrap();
            assert_eq!(p.m0() + p.m1(), n - 3);
            if n % 2 == 1 {
                assert_eq!(p.m0(), p.m1());
            }
        }
    }

    #[test]
    fn rejects_small_degree() {
        assert!(QuadrinomialParams::from_ints(2, 0, 1).is_err());
    }

    #[test]
    fn symbolic_and_instantiated_agree() {
        let p = QuadrinomialParams::new(5, frac(1, 2), rat(-3)).unwrap();
        let t0 = frac(7, 3);
        let inst = p.f_symbolic().map(|c| c.eval(&t0), 'x');
        assert_eq!(inst, p.f_at(&t0));
        assert_eq!(p.threshold(), frac(16, 240));
    }
}
