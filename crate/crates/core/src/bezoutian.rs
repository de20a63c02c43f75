//! Bezoutian matrices and the congruence reduction of `M_n(f_c, f_c′)`.
//!
//! Matrix indices in this module are 0-based; entry `(i, j)` here is entry
//! `(i+1, j+1)` in the usual 1-based notation.

use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, RatFunc, Rational, Ring, SymMatrix};
use crate::params::QuadrinomialParams;

/// `M_level(f₁, f₂)`: entry `(i, j)` is the coefficient of
/// `x^{level−1−i} y^{level−1−j}` in `(f₁(x)f₂(y) − f₁(y)f₂(x)) / (x − y)`.
#[derive(Clone, Debug)]
pub struct BezoutianMatrix<R> {
    pub inner: SymMatrix<R>,
    pub level: usize,
    pub sources: (Poly<R>, Poly<R>),
}

pub fn build_bezoutian<R: Ring>(
    f1: &Poly<R>,
    f2: &Poly<R>,
    level: usize,
) -> Result<BezoutianMatrix<R>> {
    let need = f1.deg().unwrap_or(0).max(f2.deg().unwrap_or(0));
    if level < need {
        return Err(Error::InvalidParameter(format!(
            "Bezoutian level {level} is below the input degree {need}"
        )));
    }
    // c[p][q] = a_p b_q − a_q b_p, so that
    // B(x, y) = Σ_{i,j} x^i y^j Σ_{k=0}^{j} c[i+1+k][j−k].
    let c = |p: usize, q: usize| {
        f1.coeff(p)
            .times(&f2.coeff(q))
            .minus(&f1.coeff(q).times(&f2.coeff(p)))
    };
    let beta = |i: usize, j: usize| {
        (0..=j).fold(R::zero(), |acc, k| {
            if i + 1 + k > level {
                acc
            } else {
                acc.plus(&c(i + 1 + k, j - k))
            }
        })
    };
    let inner = SymMatrix::from_upper(level, |i, j| beta(level - 1 - i, level - 1 - j));
    Ok(BezoutianMatrix {
        inner,
        level,
        sources: (f1.clone(), f2.clone()),
    })
}

/// `M_n(f) = M_n(f, f′)` with `n = deg f`.
pub fn bezoutian_of<R: Ring>(f: &Poly<R>) -> Result<BezoutianMatrix<R>> {
    build_bezoutian(f, &f.derivative(), f.deg().unwrap_or(0))
}

/// Checks linearity in the first slot and antisymmetry at the given level.
pub fn bezout_linearity_check(
    f1: &Poly,
    f2: &Poly,
    g: &Poly,
    lambda: &Rational,
    level: usize,
) -> Result<bool> {
    let m = |p: &Poly, q: &Poly| build_bezoutian(p, q, level).map(|b| b.inner.into_matrix());
    let lhs = m(&(f1 + &g.scale(lambda)), f2)?;
    let base = m(f1, f2)?;
    let rhs = {
        let mg = m(g, f2)?;
        Matrix::from_fn(level, level, |i, j| base.get(i, j) + lambda * mg.get(i, j))
    };
    let swapped = m(f2, f1)?.map(|v| -v);
    Ok(lhs == rhs && base == swapped)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ElementaryKind<R> {
    /// Identity with `c` in diagonal position `k`.
    Scale { k: usize, c: R },
    /// Identity with `c` in off-diagonal position `(k, l)`; right
    /// multiplication adds `c` times column `k` to column `l`.
    AddCol { k: usize, l: usize, c: R },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryMatrix<R> {
    pub kind: ElementaryKind<R>,
    pub dim: usize,
}

impl<R: Ring> ElementaryMatrix<R> {
    pub fn scale(dim: usize, k: usize, c: R) -> Result<Self> {
        if k >= dim {
            return Err(Error::OutOfRange(format!("index {k} in dimension {dim}")));
        }
        Ok(ElementaryMatrix {
            kind: ElementaryKind::Scale { k, c },
            dim,
        })
    }

    pub fn add_col(dim: usize, k: usize, l: usize, c: R) -> Result<Self> {
        if k >= dim || l >= dim || k == l {
            return Err(Error::OutOfRange(format!(
                "position ({k}, {l}) in dimension {dim}"
            )));
        }
        Ok(ElementaryMatrix {
            kind: ElementaryKind::AddCol { k, l, c },
            dim,
        })
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        let mut m = Matrix::identity(self.dim);
        match &self.kind {
            ElementaryKind::Scale { k, c } => m.set(*k, *k, c.clone()),
            ElementaryKind::AddCol { k, l, c } => m.set(*k, *l, c.clone()),
        }
        m
    }
}

/// Constants of the generic reduction: the nonzero entries of `W(t)₁` are
/// `qt`, `rt`, `st` on the antidiagonals `i+j = n, n+1, n+2` (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionParams {
    pub n: usize,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl ReductionParams {
    pub fn new(n: usize, q: Rational, r: Rational, s: Rational) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "n must be at least 3, got {n}"
            )));
        }
        if q.is_zero() {
            return Err(Error::InvalidParameter("q must be nonzero".into()));
        }
        Ok(ReductionParams { n, q, r, s })
    }

    /// `q = −(n−2)`, `r = −(n−1)a`, `s = −nb`.
    pub fn from_quadrinomial(p: &QuadrinomialParams) -> Self {
        let n = p.n() as i64;
        ReductionParams {
            n: p.n(),
            q: Rational::from_i64(-(n - 2)),
            r: p.a() * Rational::from_i64(-(n - 1)),
            s: p.b() * Rational::from_i64(-n),
        }
    }

    pub fn n0(&self) -> usize {
        if self.n % 2 == 1 {
            (self.n - 1) / 2
        } else {
            self.n / 2
        }
    }

    pub fn n1(&self) -> usize {
        if self.n % 2 == 1 {
            self.n0() - 1
        } else {
            self.n0() - 2
        }
    }

    fn qt(&self) -> RatFunc {
        t_times(&self.q)
    }
}

fn t_times(c: &Rational) -> RatFunc {
    RatFunc::from_poly(Poly::monomial(c.clone(), 1, 't'))
}

/// t-coefficients of `x_0..=x_m` and `y_0..=y_m`.
pub(crate) fn recurrence_coeffs(
    q: &Rational,
    r: &Rational,
    s: &Rational,
    m: usize,
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if q.is_zero() {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    let rq = r / q;
    let sq = s / q;
    let mut x = vec![Rational::zero(), -q.clone(), r.clone()];
    while x.len() <= m {
        let k = x.len();
        x.push(-(&rq * &x[k - 1]) - &sq * &x[k - 2]);
    }
    x.truncate(m + 1);
    let y = (0..=m)
        .map(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                -(&sq * &x[k - 1])
            }
        })
        .collect();
    Ok((x, y))
}

/// `(x_m, y_m)`: `x₀ = 0, x₁ = −qt, x₂ = rt, x_{m+2} = −(r/q)x_{m+1} − (s/q)x_m`
/// and `y₀ = 0, y_{m+1} = −(s/q)x_m`.
pub fn w_recurrence(params: &ReductionParams, m: usize) -> Result<(RatFunc, RatFunc)> {
    let (x, y) = recurrence_coeffs(&params.q, &params.r, &params.s, m)?;
    Ok((t_times(&x[m]), t_times(&y[m])))
}

/// `A_c(t) = M_n(f_c, f_c′)` assembled from its four structural pieces:
/// `n` at the corner, `2t`/`at` in the first row, the `qt, rt, st`
/// antidiagonals and `t²·M_2(g, g′)` in the trailing 2×2 block. For small
/// `n` the pieces overlap and add.
pub fn build_a_c(params: &QuadrinomialParams) -> Result<SymMatrix<Poly>> {
    let n = params.n();
    let (a, b) = (params.a(), params.b());
    let rp = ReductionParams::from_quadrinomial(params);
    let mut m: Matrix<Poly> = Matrix::zeros(n, n);
    let mut add = |i: usize, j: usize, v: Poly| {
        let cur = m.get(i, j).plus(&v);
        m.set(i, j, cur);
    };
    let t1 = |c: &Rational| Poly::monomial(c.clone(), 1, 't');
    let t2 = |c: Rational| Poly::monomial(c, 2, 't');

    add(0, 0, Poly::constant(Rational::from_i64(n as i64), 't'));
    for (i, j, v) in [(0, n - 2, t1(&Rational::from_i64(2))), (0, n - 1, t1(a))] {
        add(i, j, v.clone());
        add(j, i, v);
    }
    // 1-based i + j = n, n+1, n+2 with i, j ≥ 2 and the upper bounds n−2, n−1, n.
    for (offset, c) in [(0usize, &rp.q), (1, &rp.r), (2, &rp.s)] {
        let sum = n + offset;
        let hi = n - 2 + offset;
        for i in 2..=hi {
            let j = sum - i;
            if (2..=hi).contains(&j) {
                add(i - 1, j - 1, t1(c));
            }
        }
    }
    let two = Rational::from_i64(2);
    add(n - 2, n - 2, t2(two.clone()));
    add(n - 2, n - 1, t2(a.clone()));
    add(n - 1, n - 2, t2(a.clone()));
    add(n - 1, n - 1, t2(a * a - two * b));
    SymMatrix::new(m)
}

/// `W(t)₁`.
pub fn w_initial(params: &ReductionParams) -> SymMatrix<RatFunc> {
    let n = params.n;
    SymMatrix::from_upper(n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        if i < 2 || j < 2 {
            return RatFunc::zero();
        }
        match i + j {
            s if s == n && i <= n - 2 && j <= n - 2 => t_times(&params.q),
            s if s == n + 1 && i < n && j < n => t_times(&params.r),
            s if s == n + 2 => t_times(&params.s),
            _ => RatFunc::zero(),
        }
    })
}

/// One step `M ↦ SᵀMS` of the reduction (1-based `k`, `2 ≤ k ≤ n−2`).
/// Column `n−k` carries the pivot `qt` in row `k`; its multiples clear the
/// rest of row `k` to the right of the pivot, and for `k > n₀` also the
/// diagonal entry `(k, k)`.
fn reduction_step(
    m: &SymMatrix<RatFunc>,
    k: usize,
    params: &ReductionParams,
) -> Result<SymMatrix<RatFunc>> {
    let n = params.n;
    let pivot = params.qt();
    let (row, src) = (k - 1, n - k - 1);
    if *m.get(row, src) != pivot {
        return Err(Error::Internal(format!(
            "step {k}: expected pivot {pivot} at ({k}, {}), found {}",
            n - k,
            m.get(row, src)
        )));
    }
    let mut targets: Vec<(usize, RatFunc)> = Vec::new();
    let clear = |col: usize, denom: &RatFunc| -> RatFunc {
        m.get(row, col)
            .div_exact(denom)
            .expect("pivot is nonzero")
            .negate()
    };
    if k <= params.n0() {
        for col in (n - k + 1)..=n {
            targets.push((col - 1, clear(col - 1, &pivot)));
        }
    } else {
        targets.push((row, clear(row, &pivot.times(&RatFunc::from_i64(2)))));
        for col in (k + 1)..=n {
            targets.push((col - 1, clear(col - 1, &pivot)));
        }
    }
    let mut s = Matrix::identity(n);
    for (col, c) in targets.iter().filter(|(_, c)| !c.is_zero()) {
        s = s.mul(&ElementaryMatrix::add_col(n, src, *col, c.clone())?.to_matrix())?;
    }
    let out = m.congruence(&s)?;
    for (col, _) in &targets {
        if !out.get(row, *col).is_zero() {
            return Err(Error::Internal(format!(
                "step {k}: entry ({k}, {}) not cleared",
                col + 1
            )));
        }
    }
    Ok(out)
}

/// The matrices `W_1, …, W_{n−2}` (or `A_1, …, A_{n−2}`): `stages[k−1]` is
/// the k-th matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub stages: Vec<SymMatrix<RatFunc>>,
}

impl Reduction {
    /// The 1-based stage `k`.
    pub fn stage(&self, k: usize) -> Option<&SymMatrix<RatFunc>> {
        k.checked_sub(1).and_then(|i| self.stages.get(i))
    }

    pub fn last(&self) -> &SymMatrix<RatFunc> {
        self.stages.last().expect("at least the first stage")
    }
}

fn run_steps(first: SymMatrix<RatFunc>, params: &ReductionParams) -> Result<Reduction> {
    let mut stages = vec![first];
    for k in 2..=params.n - 2 {
        let next = reduction_step(stages.last().unwrap(), k, params)?;
        stages.push(next);
    }
    Ok(Reduction { stages })
}

/// Runs the generic reduction from `W(t)₁`.
pub fn reduce_generic(params: &ReductionParams) -> Result<Reduction> {
    run_steps(w_initial(params), params)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineResult {
    pub a_c: SymMatrix<Poly>,
    /// `A_1, …, A_{n−2}`; the corner entry stays `n` throughout.
    pub reduction: Reduction,
    /// `A_{n−2}` with the corner rescaled to 1.
    pub final_matrix: SymMatrix<RatFunc>,
    /// `det A_c(t) = det_factor · det final_matrix`.
    pub det_factor: Rational,
}

/// Reduces `A_c(t)` by congruences to the sparse form with a `−(n−2)t`
/// antidiagonal and a trailing 2×2 block. The first step uses
/// `R(1, l; −a_{1l}/n)` for `l = n−1, n`, which keeps the corner entry at
/// `n` and the whole computation inside ℚ(t).
pub fn reduce_pipeline(params: &QuadrinomialParams) -> Result<PipelineResult> {
    let n = params.n();
    let rp = ReductionParams::from_quadrinomial(params);
    let a_c = build_a_c(params)?;
    let a = a_c.map(|p| RatFunc::from_poly(p.clone()));
    let corner = RatFunc::from_i64(n as i64);
    let mut s = Matrix::identity(n);
    for l in [n - 2, n - 1] {
        let c = a.get(0, l).div_exact(&corner).unwrap().negate();
        s = s.mul(&ElementaryMatrix::add_col(n, 0, l, c)?.to_matrix())?;
    }
    let first = a.congruence(&s)?;
    if (1..n).any(|j| !first.get(0, j).is_zero()) {
        return Err(Error::Internal(
            "first row not cleared by the initial step".into(),
        ));
    }
    let reduction = run_steps(first, &rp)?;
    let mut final_matrix = reduction.last().clone();
    final_matrix.set(0, 0, RatFunc::one());
    Ok(PipelineResult {
        a_c,
        reduction,
        final_matrix,
        det_factor: Rational::from_i64(n as i64),
    })
}

/// Zero matrix with `qt` on the antidiagonal `i + j = n`, `2 ≤ i, j ≤ n−2`
/// (1-based), and the given trailing 2×2 block.
fn antidiagonal_with_block(params: &ReductionParams, block: [RatFunc; 3]) -> SymMatrix<RatFunc> {
    let n = params.n;
    let mut m = SymMatrix::from_upper(n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        if i + j == n && (2..=n - 2).contains(&i) && (2..=n - 2).contains(&j) {
            params.qt()
        } else {
            RatFunc::zero()
        }
    });
    let [d1, off, d2] = block;
    m.set(n - 2, n - 2, d1);
    m.set(n - 2, n - 1, off);
    m.set(n - 1, n - 1, d2);
    m
}

/// The trailing block `x_{n−1}, y_{n−1}, (−s/q)·y_{n−2}`.
fn trailing_block(params: &ReductionParams) -> Result<[RatFunc; 3]> {
    let n = params.n;
    let (x, y) = recurrence_coeffs(&params.q, &params.r, &params.s, n - 1)?;
    let corner = -(&params.s / &params.q) * &y[n - 2];
    Ok([t_times(&x[n - 1]), t_times(&y[n - 1]), t_times(&corner)])
}

/// The expected `W(t)_{n−2}`.
pub fn sparse_template(params: &ReductionParams) -> Result<SymMatrix<RatFunc>> {
    Ok(antidiagonal_with_block(params, trailing_block(params)?))
}

/// Whether the generic reduction ends exactly at [`sparse_template`].
pub fn check_sparse_shape(params: &ReductionParams) -> Result<bool> {
    Ok(*reduce_generic(params)?.last() == sparse_template(params)?)
}

/// Midpoint shape: in `W(t)_{n₀}` the rows `2..=n₀` hold only their `qt`
/// antidiagonal entry, row 1 is zero, and the trailing 2×2 block already
/// equals the final one.
pub fn check_midpoint_shape(params: &ReductionParams) -> Result<bool> {
    let n = params.n;
    let red = reduce_generic(params)?;
    let w = red
        .stage(params.n0())
        .ok_or_else(|| Error::OutOfRange(format!("no stage {} for n = {n}", params.n0())))?;
    let rows_ok = (1..=params.n0()).all(|i| {
        (1..=n).all(|j| {
            let expected = if i >= 2 && i + j == n {
                params.qt()
            } else {
                RatFunc::zero()
            };
            *w.get(i - 1, j - 1) == expected
        })
    });
    let [d1, off, d2] = trailing_block(params)?;
    let block_ok =
        *w.get(n - 2, n - 2) == d1 && *w.get(n - 2, n - 1) == off && *w.get(n - 1, n - 1) == d2;
    Ok(rows_ok && block_ok)
}

/// The expected final matrix of [`reduce_pipeline`]: corner 1, the
/// `−(n−2)t` antidiagonal, and the trailing block
/// `2(1−2/n)t² + x̄_{n−1}`, `(1−2/n)at² − nb·x̄_{n−2}/(n−2)`,
/// `((1−1/n)a² − 2b)t² + n²b²·x̄_{n−3}/(n−2)²`.
pub fn final_template(params: &QuadrinomialParams) -> Result<SymMatrix<RatFunc>> {
    let n = params.n();
    let rp = ReductionParams::from_quadrinomial(params);
    let (a, b) = (params.a(), params.b());
    let nr = Rational::from_i64(n as i64);
    let one = Rational::one();
    let two = Rational::from_i64(2);
    let t2 = |c: Rational| RatFunc::from_poly(Poly::monomial(c, 2, 't'));
    let [w1, w2, w3] = trailing_block(&rp)?;
    let k = &one - &two / &nr;
    let d1 = t2(&two * &k).plus(&w1);
    let off = t2(&k * a).plus(&w2);
    let d2 = t2((&one - &one / &nr) * a * a - &two * b).plus(&w3);
    let mut m = antidiagonal_with_block(&rp, [d1, off, d2]);
    m.set(0, 0, RatFunc::one());
    Ok(m)
}
