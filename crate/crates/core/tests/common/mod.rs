//! Test-side oracles. Nothing here calls the code under test for the
//! quantity being checked.

#![allow(dead_code)]

use num::{BigInt, BigRational, One, Signed, Zero};
use qdisc_core::exact::{Matrix, Poly, RatFunc, Rational, Ring, SymMatrix};
use qdisc_core::real_roots::InertiaResult;

pub fn r(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn q(p: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Pascal's triangle rows `0..=n`.
pub fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// `C(n, k)` from a triangle, with the zero convention outside `0 ≤ k ≤ n`.
pub fn choose(tri: &[Vec<BigInt>], n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        tri[n as usize][k as usize].clone()
    }
}

fn pow(b: &Rational, e: i64) -> Rational {
    let mut acc = r(1);
    for _ in 0..e.abs() {
        acc *= b;
    }
    if e < 0 {
        r(1) / acc
    } else {
        acc
    }
}

/// t-coefficient of `x_m` from the binomial expansion
/// `(−1)^m/(2^m q^{m−2}) · 2 Σ_k C(m, 2k+1) r^{m−2k−1} (r² − 4qs)^k`.
pub fn x_by_expansion(q: &Rational, r_: &Rational, s: &Rational, m: i64) -> Rational {
    let tri = pascal(m.max(1) as usize);
    let d = r_ * r_ - r(4) * q * s;
    let mut sum = r(0);
    let mut k = 0;
    while 2 * k < m {
        sum += BigRational::from_integer(choose(&tri, m, 2 * k + 1))
            * pow(r_, m - 2 * k - 1)
            * pow(&d, k);
        k += 1;
    }
    let sign = if m % 2 == 0 { r(1) } else { r(-1) };
    sign * r(2) * sum / (pow(&r(2), m) * pow(q, m - 2))
}

/// The repeated-root case `r² = 4qs`: `(−1)^m m r^{m−1} / (2^{m−1} q^{m−2})`.
pub fn x_degenerate(q: &Rational, r_: &Rational, m: i64) -> Rational {
    if m == 0 {
        return r(0);
    }
    let sign = if m % 2 == 0 { r(1) } else { r(-1) };
    sign * r(m) * pow(r_, m - 1) / (pow(&r(2), m - 1) * pow(q, m - 2))
}

/// The radical form when `r² − 4qs = d²` with `d ≠ 0` rational:
/// `(−1)^m ((r+d)^m − (r−d)^m) / (2^m q^{m−2} d)`.
pub fn x_radical(q: &Rational, r_: &Rational, d: &Rational, m: i64) -> Rational {
    let sign = if m % 2 == 0 { r(1) } else { r(-1) };
    sign * (pow(&(r_ + d), m) - pow(&(r_ - d), m)) / (pow(&r(2), m) * pow(q, m - 2) * d)
}

/// `c·t` in ℚ(t).
pub fn ct(c: Rational) -> RatFunc {
    RatFunc::from_poly(Poly::monomial(c, 1, 't'))
}

/// `c0 + c1·t + c2·t²` in ℚ[t].
pub fn tp(c0: Rational, c1: Rational, c2: Rational) -> Poly {
    Poly::new(vec![c0, c1, c2], 't')
}

pub fn sym<R: Ring>(rows: Vec<Vec<R>>) -> SymMatrix<R> {
    SymMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

/// Characteristic polynomial `det(xI − M)` by Laplace expansion over ℚ[x].
pub fn charpoly(m: &SymMatrix<Rational>) -> Poly {
    let n = m.dim();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(-m.get(i, j).clone(), 'x');
                    if i == j {
                        &c + &Poly::variable('x')
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries)
}

fn laplace(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(r(1), 'x');
    }
    let mut total = Poly::zero_in('x');
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        total = if j % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

fn sign_changes(c: &[Rational]) -> usize {
    let s: Vec<bool> = c
        .iter()
        .filter(|v| !Zero::is_zero(*v))
        .map(|v| v.is_positive())
        .collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from Descartes' rule on the characteristic polynomial, which is
/// exact because a symmetric matrix has only real eigenvalues.
pub fn inertia_by_descartes(m: &SymMatrix<Rational>) -> InertiaResult {
    let p = charpoly(m);
    let zeros = p.coeffs().iter().take_while(|c| Zero::is_zero(*c)).count();
    let positives = sign_changes(p.coeffs());
    let flipped: Vec<Rational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    let negatives = sign_changes(&flipped);
    InertiaResult {
        positives,
        negatives,
        zeros,
    }
}

/// Checks `(x − y)·Σ α_ij x^{n−1−i} y^{n−1−j} = f₁(x)f₂(y) − f₁(y)f₂(x)`
/// by comparing bivariate coefficient grids.
pub fn generating_identity_holds(f1: &Poly, f2: &Poly, alpha: &SymMatrix<Rational>) -> bool {
    let n = alpha.dim();
    let size = n + 1;
    let mut lhs = vec![vec![r(0); size]; size];
    for i in 0..n {
        for j in 0..n {
            let (px, py) = (n - 1 - i, n - 1 - j);
            let c = alpha.get(i, j);
            lhs[px + 1][py] += c;
            lhs[px][py + 1] -= c;
        }
    }
    let rhs: Vec<Vec<Rational>> = (0..size)
        .map(|px| {
            (0..size)
                .map(|py| f1.coeff(px) * f2.coeff(py) - f1.coeff(py) * f2.coeff(px))
                .collect()
        })
        .collect();
    lhs == rhs
}
