//! The explicit discriminant of `xⁿ + t(x² + ax + b)` and its ingredients.
//!
//! For `n ≥ 4`,
//! `Δ(t) = (−1)^{m₁} t^{n−1} {(n−2)^{n−2}(a²−4b)t² + γ t − nⁿb^{n−1}}`
//! with `γ = Σ_{k=0}^{m₀} (−1)^{n+k} nᵏ (n−1)^{n−2k−4} (n−2)ᵏ a^{n−2k−4} bᵏ S_k`.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::bezoutian::{recurrence_coeffs, ReductionParams};
use crate::error::{Error, Result};
use crate::exact::{rat, rpow, Poly, Rational};
use crate::params::QuadrinomialParams;

/// `C(n, k)`, zero when `k < 0` or `n < k`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn brat(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Coefficients of `a⁴`, `a²b` and `b²` in `S_k`.
fn s_k_coeffs(n: i64, k: i64) -> [Rational; 3] {
    let c1 = brat(binom(n - k - 3, k));
    let c2 = brat(binom(n - k - 4, k));
    let a4 = rat((n - 1).pow(3)) * &c1;
    let a2b =
        -rat(n * (n - 1) * (5 * n * n - (6 * k + 23) * n + 10 * k + 24)) / rat(n - k - 3) * &c1;
    let b2 = rat(4 * n * n * (n - 2)) * c2;
    [a4, a2b, b2]
}

fn check_k_range(params: &QuadrinomialParams, k: usize) -> Result<()> {
    if params.n() < 4 {
        return Err(Error::InvalidParameter(format!(
            "S_k needs n ≥ 4, got {}",
            params.n()
        )));
    }
    if k > params.m0() {
        return Err(Error::OutOfRange(format!(
            "k = {k} exceeds m₀ = {}",
            params.m0()
        )));
    }
    Ok(())
}

/// `S_k` evaluated at the parameters' `(a, b)`.
pub fn s_k(params: &QuadrinomialParams, k: usize) -> Result<Rational> {
    check_k_range(params, k)?;
    let [c1, c2, c3] = s_k_coeffs(params.n() as i64, k as i64);
    let (a, b) = (params.a(), params.b());
    let a2 = a * a;
    Ok(c1 * &a2 * &a2 + c2 * &a2 * b + c3 * b * b)
}

/// The γ sum with no case split. Each `a^{n−2k−4}·S_k` is expanded into
/// monomials `a^{n−2k}`, `a^{n−2k−2}b`, `a^{n−2k−4}b²` and vanishing
/// monomials are skipped, so a negative power of `a` is never formed and
/// `a = 0` needs no special treatment.
pub fn gamma_sum(params: &QuadrinomialParams) -> Result<Rational> {
    if params.n() < 4 {
        return Err(Error::InvalidParameter(format!(
            "γ needs n ≥ 4, got {}",
            params.n()
        )));
    }
    let n = params.n() as i64;
    let (a, b) = (params.a(), params.b());
    let mut total = Rational::zero();
    for k in 0..=params.m0() as i64 {
        let sign = if (n + k) % 2 == 0 { rat(1) } else { rat(-1) };
        let prefactor = sign
            * rpow(&rat(n), k)?
            * rpow(&rat(n - 1), n - 2 * k - 4)?
            * rpow(&rat(n - 2), k)?
            * rpow(b, k)?;
        let [c1, c2, c3] = s_k_coeffs(n, k);
        for (coeff, a_exp, b_exp) in [
            (c1, n - 2 * k, 0),
            (c2, n - 2 * k - 2, 1),
            (c3, n - 2 * k - 4, 2),
        ] {
            if coeff.is_zero() {
                continue;
            }
            if a_exp < 0 {
                return Err(Error::Internal(format!(
                    "negative power of a in γ at k = {k}"
                )));
            }
            total += &prefactor * coeff * rpow(a, a_exp)? * rpow(b, b_exp)?;
        }
    }
    Ok(total)
}

/// γ with the `a = 0, n odd ⇒ 0` case taken literally; otherwise the sum.
pub fn gamma_c(params: &QuadrinomialParams) -> Result<Rational> {
    if params.n() >= 4 && params.a().is_zero() && params.n() % 2 == 1 {
        return Ok(Rational::zero());
    }
    gamma_sum(params)
}

/// t-coefficient of `x̄_m`, the recurrence sequence at
/// `q = −(n−2)`, `r = −(n−1)a`, `s = −nb`.
pub fn xbar(params: &QuadrinomialParams, m: usize) -> Rational {
    let rp = ReductionParams::from_quadrinomial(params);
    let (x, _) = recurrence_coeffs(&rp.q, &rp.r, &rp.s, m).expect("q = −(n−2) is nonzero");
    x[m].clone()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormParts {
    /// `(n−2)^{n−2}(a²−4b)`
    pub quadratic_coeff: Rational,
    pub gamma_c: Rational,
    /// `−nⁿb^{n−1}`
    pub constant_coeff: Rational,
    /// `(−1)^{m₁}`
    pub sign: i32,
    /// t-coefficients of `x̄_0, …, x̄_{n−1}`.
    pub xbar: BTreeMap<usize, Rational>,
    n: usize,
}

impl ClosedFormParts {
    /// `sign · t^{n−1} · (quadratic_coeff·t² + gamma_c·t + constant_coeff)`.
    pub fn assemble(&self) -> Poly {
        let inner = Poly::new(
            vec![
                self.constant_coeff.clone(),
                self.gamma_c.clone(),
                self.quadratic_coeff.clone(),
            ],
            't',
        );
        let p = inner.shift(self.n - 1);
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }
}

pub fn closed_form_parts(params: &QuadrinomialParams) -> Result<ClosedFormParts> {
    let n = params.n() as i64;
    let (a, b) = (params.a(), params.b());
    let gamma = if params.n() == 3 {
        -(rat(4) * a * a * a - rat(18) * a * b)
    } else {
        gamma_c(params)?
    };
    Ok(ClosedFormParts {
        quadratic_coeff: rpow(&rat(n - 2), n - 2)? * (a * a - rat(4) * b),
        gamma_c: gamma,
        constant_coeff: -rpow(&rat(n), n)? * rpow(b, n - 1)?,
        sign: if params.m1().is_multiple_of(2) { 1 } else { -1 },
        xbar: (0..params.n()).map(|m| (m, xbar(params, m))).collect(),
        n: params.n(),
    })
}

/// `Δ(f_c(t; x))` as a polynomial in `t`.
pub fn discriminant_closed_form(params: &QuadrinomialParams) -> Result<Poly> {
    let (a, b) = (params.a(), params.b());
    let a2 = a * a;
    let tpoly = |c: Vec<Rational>| Poly::new(c, 't');
    match params.n() {
        3 => {
            // t²{(a²−4b)t² − (4a³−18ab)t − 27b²}
            let inner = tpoly(vec![
                rat(-27) * b * b,
                -(rat(4) * &a2 * a - rat(18) * a * b),
                &a2 - rat(4) * b,
            ]);
            Ok(inner.shift(2))
        }
        4 => {
            // −t³{(4a²−16b)t² + (27a⁴−144a²b+128b²)t − 256b³}
            let inner = tpoly(vec![
                rat(-256) * b * b * b,
                rat(27) * &a2 * &a2 - rat(144) * &a2 * b + rat(128) * b * b,
                rat(4) * &a2 - rat(16) * b,
            ]);
            Ok(-inner.shift(3))
        }
        _ => Ok(closed_form_parts(params)?.assemble()),
    }
}

/// The t³-coefficient of `α(t)` and the t²-coefficient of `β(t)` from
/// their closed forms `γ / (n(n−2)^{n−3})` and `−n^{n−1}b^{n−1}/(n−2)^{n−3}`.
pub fn alpha_beta(params: &QuadrinomialParams) -> Result<(Rational, Rational)> {
    let n = require_n5(params)?;
    let denom = rpow(&rat(n - 2), n - 3)?;
    let alpha = gamma_c(params)? / (rat(n) * &denom);
    let beta = -rpow(&rat(n), n - 1)? * rpow(params.b(), n - 1)? / denom;
    Ok((alpha, beta))
}

/// The same two coefficients computed from their definitions in terms of
/// `x̄_{n−3}, x̄_{n−2}, x̄_{n−1}`.
pub fn alpha_beta_from_xbar(params: &QuadrinomialParams) -> Result<(Rational, Rational)> {
    let n = require_n5(params)?;
    let nu = params.n();
    let (a, b) = (params.a(), params.b());
    let (x3, x2, x1) = (
        xbar(params, nu - 3),
        xbar(params, nu - 2),
        xbar(params, nu - 1),
    );
    let nr = rat(n);
    let alpha = rat(2) * &nr * b * b * &x3 / rat(n - 2)
        + (rat(n - 1) * a * a - rat(2) * &nr * b) * &x1 / &nr
        + rat(2) * a * b * &x2;
    let beta = &nr * &nr * b * b / rat((n - 2) * (n - 2)) * (&x1 * &x3 - &x2 * &x2);
    Ok((alpha, beta))
}

fn require_n5(params: &QuadrinomialParams) -> Result<i64> {
    if params.n() < 5 {
        return Err(Error::InvalidParameter(format!(
            "requires n ≥ 5, got {}",
            params.n()
        )));
    }
    Ok(params.n() as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialSlots {
    /// `Σ_j C(N+1, 2j+1) C(j, k) = 2^{N−2k} C(N−k, k)`
    Odd,
    /// `Σ_j C(N+1, 2j) C(j, k) = 2^{N−2k} [C(N+1−k, k) + C(N−k, k−1)]`
    Even,
}

/// Both sides of the chosen identity, the left by direct summation.
pub fn binomial_identity(big_n: i64, k: i64, which: BinomialSlots) -> Result<(BigInt, BigInt)> {
    if big_n < 0 {
        return Err(Error::OutOfRange(format!(
            "N = {big_n} must be non-negative"
        )));
    }
    let k_max = match which {
        BinomialSlots::Odd => big_n / 2,
        BinomialSlots::Even => (big_n + 1) / 2,
    };
    if k < 0 || k > k_max {
        return Err(Error::OutOfRange(format!("k = {k} outside 0..={k_max}")));
    }
    let lhs = (k..=k_max).fold(BigInt::zero(), |acc, j| {
        let top = match which {
            BinomialSlots::Odd => binom(big_n + 1, 2 * j + 1),
            BinomialSlots::Even => binom(big_n + 1, 2 * j),
        };
        acc + top * binom(j, k)
    });
    let bracket = match which {
        BinomialSlots::Odd => binom(big_n - k, k),
        BinomialSlots::Even => binom(big_n + 1 - k, k) + binom(big_n - k, k - 1),
    };
    // N − 2k is −1 only in the last even slot of odd N.
    let rhs = rpow(&rat(2), big_n - 2 * k)? * brat(bracket);
    if !rhs.is_integer() {
        return Err(Error::Internal(format!(
            "non-integral right side at N = {big_n}, k = {k}"
        )));
    }
    Ok((lhs, rhs.to_integer()))
}
