//! Dense univariate polynomials over any [`Ring`].
//!
//! `Poly<Rational>` covers ℚ[x] and ℚ[t]; `Poly<Poly<Rational>>` is ℚ[t][x],
//! which is what the resultant of a parametrised family needs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Signed;

use super::ring::{format_rational, parse_rational, Field, Rational, Ring};
use crate::error::{Error, Result};

/// Degree of a polynomial; the zero polynomial has degree −∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients are stored constant term first with no trailing zeros, so
/// the zero polynomial is the empty list. The variable name only affects
/// display and is ignored by equality.
#[derive(Clone, Debug)]
pub struct Poly<R = Rational> {
    coeffs: Vec<R>,
    var: char,
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>, var: char) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero_in(var: char) -> Self {
        Poly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn constant(c: R, var: char) -> Self {
        Self::new(vec![c], var)
    }

    /// `c·var^k`.
    pub fn monomial(c: R, k: usize, var: char) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    /// The polynomial `var` itself.
    pub fn variable(var: char) -> Self {
        Self::monomial(R::one(), 1, var)
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a plain integer, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&R::from_i64(i as i64)))
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.times(c)).collect(), self.var)
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            coeffs,
            var: self.var,
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S, var: char) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect(), var)
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar_exact(&self, c: &R) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs, self.var))
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^e·self = q·d + r`,
    /// `e = max(deg self − deg d + 1, 0)` and `deg r < deg d`.
    pub fn pseudo_divide(&self, d: &Self) -> Result<(Self, Self)> {
        let dn = d.deg().ok_or(Error::DivisionByZero)?;
        let m = match self.deg() {
            Some(m) if m >= dn => m,
            _ => return Ok((Self::zero_in(self.var), self.clone())),
        };
        let lc = d.coeffs[dn].clone();
        let mut u = self.coeffs.clone();
        let mut q = vec![R::zero(); m - dn + 1];
        let mut lc_pows = vec![R::one()];
        for _ in 0..(m - dn) {
            let next = lc_pows.last().unwrap().times(&lc);
            lc_pows.push(next);
        }
        for k in (0..=m - dn).rev() {
            let top = u[dn + k].clone();
            q[k] = top.times(&lc_pows[k]);
            for j in (0..dn + k).rev() {
                let sub = if j >= k {
                    top.times(&d.coeffs[j - k])
                } else {
                    R::zero()
                };
                u[j] = lc.times(&u[j]).minus(&sub);
            }
        }
        u.truncate(dn);
        Ok((Self::new(q, self.var), Self::new(u, self.var)))
    }

    /// Subresultant polynomial remainder sequence `[a, b, s_2, …]` with
    /// `deg a ≥ deg b`, ending at the last nonzero member. Every division
    /// is exact in `R`.
    pub fn subresultant_prs(&self, other: &Self) -> Result<Vec<Self>> {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        let mut seq = vec![a.clone()];
        if b.is_zero() {
            return Ok(seq);
        }
        seq.push(b.clone());
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = a.deg().unwrap() - b.deg().unwrap();
            let (_, r) = a.pseudo_divide(&b)?;
            if r.is_zero() {
                return Ok(seq);
            }
            let divisor = g.times(&h.pow(delta as u32));
            let next = r
                .div_scalar_exact(&divisor)
                .ok_or_else(|| Error::Internal("inexact subresultant division".into()))?;
            a = b;
            b = next;
            seq.push(b.clone());
            g = a.leading().unwrap().clone();
            h = next_h(&h, &g, delta)?;
        }
    }

    /// Resultant with respect to the polynomial's variable, via the
    /// subresultant algorithm (division-exact over any integral domain).
    pub fn resultant(&self, other: &Self) -> Result<R> {
        let (Some(da), Some(db)) = (self.deg(), other.deg()) else {
            return Ok(R::zero());
        };
        let mut sign_negative = false;
        let (mut a, mut b) = if da >= db {
            (self.clone(), other.clone())
        } else {
            if da % 2 == 1 && db % 2 == 1 {
                sign_negative = true;
            }
            (other.clone(), self.clone())
        };
        let mut g = R::one();
        let mut h = R::one();
        while b.deg().unwrap() > 0 {
            let (dega, degb) = (a.deg().unwrap(), b.deg().unwrap());
            let delta = dega - degb;
            if dega % 2 == 1 && degb % 2 == 1 {
                sign_negative = !sign_negative;
            }
            let (_, r) = a.pseudo_divide(&b)?;
            if r.is_zero() {
                return Ok(R::zero());
            }
            let divisor = g.times(&h.pow(delta as u32));
            let next = r
                .div_scalar_exact(&divisor)
                .ok_or_else(|| Error::Internal("inexact subresultant division".into()))?;
            a = b;
            b = next;
            g = a.leading().unwrap().clone();
            h = next_h(&h, &g, delta)?;
        }
        let dega = a.deg().unwrap() as u32;
        let lb = b.leading().unwrap();
        let res = if dega == 0 {
            R::one()
        } else {
            lb.pow(dega)
                .div_exact(&h.pow(dega - 1))
                .ok_or_else(|| Error::Internal("inexact final resultant division".into()))?
        };
        Ok(if sign_negative { res.negate() } else { res })
    }
}

/// `h^{1−δ}·g^δ`, the subresultant scaling update.
fn next_h<R: Ring>(h: &R, g: &R, delta: usize) -> Result<R> {
    match delta {
        0 => Ok(h.clone()),
        1 => Ok(g.clone()),
        d => g
            .pow(d as u32)
            .div_exact(&h.pow(d as u32 - 1))
            .ok_or_else(|| Error::Internal("inexact subresultant scaling".into())),
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division; `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dn = d.deg().ok_or(Error::DivisionByZero)?;
        let m = match self.deg() {
            Some(m) if m >= dn => m,
            _ => return Ok((Self::zero_in(self.var), self.clone())),
        };
        let inv_lc = d.coeffs[dn].inv().ok_or(Error::DivisionByZero)?;
        let mut u = self.coeffs.clone();
        let mut q = vec![R::zero(); m - dn + 1];
        for k in (0..=m - dn).rev() {
            let c = u[dn + k].times(&inv_lc);
            if !c.is_zero() {
                for j in 0..=dn {
                    u[j + k] = u[j + k].minus(&c.times(&d.coeffs[j]));
                }
            }
            q[k] = c;
        }
        u.truncate(dn);
        Ok((Self::new(q, self.var), Self::new(u, self.var)))
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor, taken from the last member of the
    /// subresultant sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let seq = self
            .subresultant_prs(other)
            .expect("subresultant divisions are exact over a field");
        let last = seq.last().unwrap();
        if last.deg() == Some(0) {
            Self::constant(R::one(), self.var)
        } else {
            last.monic()
        }
    }

    /// `self / gcd(self, self′)`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.deg().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self
            .div_rem(&g)
            .expect("gcd of a nonzero polynomial is nonzero");
        q.monic()
    }

    pub fn is_separable(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == Some(0)
    }
}

impl Poly<Rational> {
    /// Parses the exchange format: comma-separated rational coefficients,
    /// constant term first (`"b,a,1"` is `x² + ax + b`). `"0"` is the zero
    /// polynomial.
    pub fn parse(s: &str, var: char) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse("empty polynomial literal".into()));
        }
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs, var))
    }

    /// Inverse of [`Poly::parse`].
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Largest `|c_i / c_lead|` over the lower coefficients; zero for
    /// constants.
    pub fn max_coeff_ratio(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Ring::zero();
        };
        self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lc).abs())
            .max()
            .unwrap_or_else(Ring::zero)
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let compound = cs
                .chars()
                .skip(1)
                .any(|ch| ch == '+' || ch == '-' || ch == ' ');
            let cs = if compound { format!("({cs})") } else { cs };
            let power = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            terms.push(match (k, cs.as_str()) {
                (0, _) => cs,
                (_, "1") => power,
                (_, "-1") => format!("-{power}"),
                _ => format!("{cs}*{power}"),
            });
        }
        f.write_str(&terms.join(" + ").replace("+ -", "- "))
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Self::zero_in('x')
    }
    fn one() -> Self {
        Self::constant(R::one(), 'x')
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v), 'x')
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).plus(&other.coeff(i)))
            .collect();
        Self::new(coeffs, self.var)
    }
    fn minus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).minus(&other.coeff(i)))
            .collect();
        Self::new(coeffs, self.var)
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_in(self.var);
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(coeffs, self.var)
    }
    fn negate(&self) -> Self {
        Self::new(self.coeffs.iter().map(R::negate).collect(), self.var)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let dn = other.deg()?;
        let Some(m) = self.deg() else {
            return Some(Self::zero_in(self.var));
        };
        if m < dn {
            return None;
        }
        let lc = &other.coeffs[dn];
        let mut u = self.coeffs.clone();
        let mut q = vec![R::zero(); m - dn + 1];
        for k in (0..=m - dn).rev() {
            let c = u[dn + k].div_exact(lc)?;
            if !c.is_zero() {
                for j in 0..=dn {
                    u[j + k] = u[j + k].minus(&c.times(&other.coeffs[j]));
                }
            }
            q[k] = c;
        }
        if u.iter().all(R::is_zero) {
            Some(Self::new(q, self.var))
        } else {
            None
        }
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.plus(rhs)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.minus(rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.times(rhs)
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        self.plus(&rhs)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self.minus(&rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        self.times(&rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.negate()
    }
}

/// Shorthand for a `Poly<Rational>` in `var` from integer coefficients,
/// constant term first.
pub fn poly_i(coeffs: &[i64], var: char) -> Poly<Rational> {
    Poly::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect(), var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{frac, rat};
    use proptest::prelude::*;

    fn x(coeffs: &[i64]) -> Poly {
        poly_i(coeffs, 'x')
    }

    #[test]
    fn zero_polynomial_has_neg_infinite_degree() {
        let z = x(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(z.to_coeff_list(), "0");
    }

    #[test]
    fn derivative_of_quadratic() {
        // x² + 3x + 5 → 2x + 3
        assert_eq!(x(&[5, 3, 1]).derivative(), x(&[3, 2]));
    }

    #[test]
    fn gcd_is_monic() {
        let g = x(&[-1, 0, 1]).gcd(&x(&[0, -1, 0, 1]));
        assert_eq!(g, x(&[-1, 0, 1]));
        let g = x(&[-2, 0, 2]).gcd(&x(&[0, 4]));
        assert_eq!(g, x(&[1]));
        assert_eq!(x(&[0]).gcd(&x(&[0, 3])), x(&[0, 1]));
    }

    #[test]
    fn quadrinomial_vanishes_at_minus_one() {
        // x⁵ + x² + x + 1
        assert_eq!(x(&[1, 1, 1, 0, 0, 1]).eval(&rat(-1)), rat(0));
    }

    #[test]
    fn pseudo_divide_identity() {
        let a = x(&[1, 2, 3, 4, 5]);
        let d = x(&[7, 0, 3]);
        let (q, r) = a.pseudo_divide(&d).unwrap();
        assert!(r.deg().unwrap() < 2);
        let lhs = a.scale(&rat(27));
        assert_eq!(lhs, &(&q * &d) + &r);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            x(&[1, 1]).pseudo_divide(&x(&[])),
            Err(Error::DivisionByZero)
        );
        assert_eq!(x(&[1, 1]).div_rem(&x(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x − 2, x − 5) = −3 ; Res(x² − 1, x − 3) = 8
        assert_eq!(x(&[-2, 1]).resultant(&x(&[-5, 1])).unwrap(), rat(-3));
        assert_eq!(x(&[-1, 0, 1]).resultant(&x(&[-3, 1])).unwrap(), rat(8));
        assert_eq!(x(&[-3, 1]).resultant(&x(&[-1, 0, 1])).unwrap(), rat(8));
        // common root
        assert_eq!(x(&[-1, 0, 1]).resultant(&x(&[-1, 1])).unwrap(), rat(0));
    }

    #[test]
    fn resultant_gives_cubic_discriminant() {
        // x³ + px + q: Res(f, f′) = 4p³ + 27q² and Δ = −Res.
        let f = x(&[2, -3, 0, 1]);
        let r = f.resultant(&f.derivative()).unwrap();
        assert_eq!(r, rat(4 * -27 + 27 * 4));
        let f = x(&[1, 1, 0, 1]);
        assert_eq!(f.resultant(&f.derivative()).unwrap(), rat(31));
    }

    #[test]
    fn parse_and_print() {
        let p = Poly::parse("1/2,-3,0,4", 'x').unwrap();
        assert_eq!(p.coeff(0), frac(1, 2));
        assert_eq!(p.deg(), Some(3));
        assert_eq!(p.to_coeff_list(), "1/2,-3,0,4");
        assert_eq!(p.to_string(), "4*x^3 - 3*x + 1/2");
        assert!(Poly::parse("1,,2", 'x').is_err());
        assert_eq!(Poly::parse("0,0", 'x').unwrap().to_coeff_list(), "0");
    }

    #[test]
    fn squarefree_part_removes_repeats() {
        // (x − 1)²(x + 2) → (x − 1)(x + 2)
        let f = x(&[2, -3, 0, 1]);
        assert_eq!(f.squarefree_part(), x(&[-2, 1, 1]));
        assert!(!f.is_separable());
        assert!(x(&[-2, 1, 1]).is_separable());
    }

    #[test]
    fn nested_polynomials_divide_exactly() {
        let t = Poly::<Rational>::variable('t');
        let a = Poly::new(vec![t.clone(), t.times(&t)], 'x');
        let b = Poly::new(vec![Poly::one(), t.clone()], 'x');
        assert_eq!(a.div_exact(&b), Some(Poly::new(vec![t.clone()], 'x')));
        assert_eq!(b.div_exact(&a), None);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..=9, 1i64..=9), 0..=max_deg + 1)
            .prop_map(|v| Poly::new(v.into_iter().map(|(p, q)| frac(p, q)).collect(), 'x'))
    }

    proptest! {
        #[test]
        fn distributivity(p in arb_poly(8), q in arb_poly(8), r in arb_poly(8)) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        }

        #[test]
        fn degree_of_product(p in arb_poly(8), q in arb_poly(8)) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            prop_assert_eq!((&p * &q).deg(), Some(p.deg().unwrap() + q.deg().unwrap()));
        }

        #[test]
        fn div_rem_reconstructs(p in arb_poly(8), d in arb_poly(4)) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.div_rem(&d).unwrap();
            prop_assert!(r.degree() < d.degree());
            prop_assert_eq!(&(&q * &d) + &r, p);
        }

        #[test]
        fn gcd_divides_both(p in arb_poly(5), q in arb_poly(5), c in arb_poly(2)) {
            let a = &p * &c;
            let b = &q * &c;
            let g = a.gcd(&b);
            if !a.is_zero() || !b.is_zero() {
                prop_assert!(g.is_monic());
                prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
                if !c.is_zero() {
                    prop_assert!(g.div_rem(&c.monic()).unwrap().1.is_zero());
                }
            }
        }

        #[test]
        fn resultant_is_product_over_roots(r1 in -5i64..5, r2 in -5i64..5, s1 in -5i64..5) {
            // Res((x−r1)(x−r2), x−s1) = (r1−s1)(r2−s1)
            let f = x(&[r1 * r2, -(r1 + r2), 1]);
            let g = x(&[-s1, 1]);
            prop_assert_eq!(f.resultant(&g).unwrap(), rat((r1 - s1) * (r2 - s1)));
        }

        #[test]
        fn round_trip_exchange_format(p in arb_poly(8)) {
            prop_assert_eq!(Poly::parse(&p.to_coeff_list(), 'x').unwrap(), p);
        }
    }
}
