//! Real-root counting by Sturm sequences and by the signature of the
//! Bezoutian, root isolation, and the root-count statements for the
//! quadrinomial family.

use std::cmp::Ordering;

use num::{Signed, Zero};

use crate::bezoutian::{bezoutian_of, build_bezoutian};
use crate::closed_form::{closed_form_parts, discriminant_closed_form};
use crate::error::{Error, Result};
use crate::exact::{frac, rat, rpow, Poly, Rational, SymMatrix};
use crate::params::QuadrinomialParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Endpoint {
    fn rank(&self) -> u8 {
        match self {
            Endpoint::NegInfinity => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInfinity => 2,
        }
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self, other) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        })
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Signed remainder sequence `f, f′, −rem(f, f′), …` of the squarefree
/// part of `f`. Members are rescaled by positive constants, which leaves
/// every sign unchanged.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Poly>,
}

impl SturmSequence {
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::InvalidParameter(
                "Sturm sequence of the zero polynomial".into(),
            ));
        }
        let p0 = f.squarefree_part();
        let p1 = p0.derivative();
        let mut seq = vec![p0];
        if !p1.is_zero() {
            seq.push(p1);
        }
        while seq.len() >= 2 {
            let k = seq.len();
            let (_, r) = seq[k - 2].div_rem(&seq[k - 1])?;
            if r.is_zero() {
                break;
            }
            let lc = r.leading().unwrap().abs();
            seq.push(r.scale(&(-rat(1) / lc)));
        }
        Ok(SturmSequence { seq })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.seq
    }

    fn sign_at(p: &Poly, at: &Endpoint) -> i8 {
        let lc = p.leading().map_or(0, sign);
        match at {
            Endpoint::PosInfinity => lc,
            Endpoint::NegInfinity => {
                if p.deg().unwrap_or(0) % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
            Endpoint::Finite(x) => sign(&p.eval(x)),
        }
    }

    pub fn variations(&self, at: &Endpoint) -> usize {
        let signs: Vec<i8> = self
            .seq
            .iter()
            .map(|p| Self::sign_at(p, at))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
        match lo.partial_cmp(hi) {
            Some(Ordering::Greater) => Err(Error::InvalidParameter("interval with lo > hi".into())),
            Some(Ordering::Equal) => Ok(0),
            _ => {
                let (vl, vh) = (self.variations(lo), self.variations(hi));
                vl.checked_sub(vh).ok_or_else(|| {
                    Error::Internal("Sturm variations increased along the interval".into())
                })
            }
        }
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn sturm_count(f: &Poly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    SturmSequence::new(f)?.count(lo, hi)
}

/// Distinct real roots of `f` on the whole line.
pub fn sturm_total(f: &Poly) -> Result<usize> {
    sturm_count(f, &Endpoint::NegInfinity, &Endpoint::PosInfinity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaResult {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl InertiaResult {
    pub fn signature(&self) -> i64 {
        self.positives as i64 - self.negatives as i64
    }

    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }
}

/// Inertia by symmetric elimination. A nonzero diagonal entry is used as a
/// 1×1 pivot; if the remaining diagonal is zero but some `(i, j)` is not,
/// the block `[[0, c], [c, 0]]` (one positive and one negative direction)
/// is eliminated through its Schur complement.
pub fn inertia(m: &SymMatrix<Rational>) -> InertiaResult {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.as_matrix().row(i).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut res = InertiaResult {
        positives: 0,
        negatives: 0,
        zeros: 0,
    };
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = a[p][p].clone();
            if d.is_positive() {
                res.positives += 1;
            } else {
                res.negatives += 1;
            }
            for &k in &active {
                if a[k][p].is_zero() {
                    continue;
                }
                let f = &a[k][p] / &d;
                for &l in &active {
                    let v = &f * &a[p][l];
                    a[k][l] -= v;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            res.zeros += active.len();
            break;
        };
        active.retain(|&k| k != i && k != j);
        let c = a[i][j].clone();
        res.positives += 1;
        res.negatives += 1;
        for &k in &active {
            for &l in &active {
                let v = (&a[k][i] * &a[j][l] + &a[k][j] * &a[i][l]) / &c;
                a[k][l] -= v;
            }
        }
    }
    res
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootCountReport {
    pub sturm: usize,
    pub inertia: InertiaResult,
    pub separable: bool,
}

/// Both counts side by side; for separable `f` they are checked to agree.
pub fn real_root_report(f: &Poly) -> Result<RootCountReport> {
    if f.is_zero() {
        return Err(Error::InvalidParameter(
            "the zero polynomial has no root count".into(),
        ));
    }
    let sturm = sturm_total(f)?;
    let inertia = inertia(&bezoutian_of(f)?.inner);
    let separable = f.is_separable();
    if separable && inertia.signature() != sturm as i64 {
        return Err(Error::Internal(format!(
            "Bezoutian signature {} disagrees with Sturm count {sturm} for {f}",
            inertia.signature()
        )));
    }
    Ok(RootCountReport {
        sturm,
        inertia,
        separable,
    })
}

/// Number of distinct real roots, cross-checked between Sturm and the
/// Bezoutian signature.
pub fn count_real_roots(f: &Poly) -> Result<usize> {
    Ok(real_root_report(f)?.sturm)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootIsolation {
    /// Disjoint `(lo, hi]` intervals in increasing order, one root each.
    pub intervals: Vec<(Rational, Rational)>,
    /// Roots that landed exactly on an interval's right end.
    pub exact_roots: Vec<Rational>,
}

/// Default isolation width, `2^{−30}`.
pub fn default_width() -> Rational {
    frac(1, 1 << 30)
}

/// Bisection from the Cauchy bound until each interval holds one root and
/// is no wider than `width`.
pub fn isolate_real_roots(f: &Poly, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(Error::InvalidParameter(
            "isolation width must be positive".into(),
        ));
    }
    let sturm = SturmSequence::new(f)?;
    let sq = sturm.polys()[0].clone();
    let bound = rat(1) + sq.max_coeff_ratio();
    let mut out = RootIsolation {
        intervals: Vec::new(),
        exact_roots: Vec::new(),
    };
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone()))?;
        if c == 0 {
            continue;
        }
        if c == 1 && &hi - &lo <= *width {
            if sq.eval(&hi).is_zero() {
                out.exact_roots.push(hi.clone());
            }
            out.intervals.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        // Right half first so the left half is popped first.
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlphaBound {
    Exact(Rational),
    /// The root lies in `(lo, hi]`.
    Interval(Rational, Rational),
}

impl AlphaBound {
    /// A rational at or above the root.
    pub fn upper(&self) -> &Rational {
        match self {
            AlphaBound::Exact(r) => r,
            AlphaBound::Interval(_, hi) => hi,
        }
    }
}

/// Largest real root of `p`, or `None` if `p` has no real root.
pub fn max_real_root(p: &Poly, width: &Rational) -> Result<Option<AlphaBound>> {
    let iso = isolate_real_roots(p, width)?;
    Ok(iso.intervals.last().map(|(lo, hi)| {
        if iso.exact_roots.last() == Some(hi) {
            AlphaBound::Exact(hi.clone())
        } else {
            AlphaBound::Interval(lo.clone(), hi.clone())
        }
    }))
}

/// `α_c`, the largest real root of `P_c(t) = Δ(f_c(t; x))`.
pub fn alpha_c(params: &QuadrinomialParams, width: &Rational) -> Result<AlphaBound> {
    if params.a().is_zero() && params.b().is_zero() {
        return Err(Error::InvalidParameter(
            "a = b = 0 is degenerate: f = xⁿ + t·x² has no well-defined α".into(),
        ));
    }
    let p = discriminant_closed_form(params)?;
    max_real_root(&p, width)?.ok_or_else(|| Error::Internal("P_c has no real root".into()))
}

/// `det M_n(xⁿ + t·g)` as a polynomial in `t`.
pub fn p_r(n: usize, g: &Poly) -> Result<Poly> {
    let t = Poly::<Rational>::variable('t');
    let mut coeffs: Vec<Poly> = g.coeffs().iter().map(|c| t.scale(c)).collect();
    coeffs.resize(n + 1, Poly::zero_in('t'));
    coeffs[n] = &coeffs[n] + &Poly::constant(rat(1), 't');
    let f = Poly::new(coeffs, 'x');
    Ok(build_bezoutian(&f, &f.derivative(), n)?.inner.det())
}

/// Whether `t` lies strictly above every real root of `p`.
fn above_all_roots(p: &Poly, t: &Rational) -> Result<bool> {
    Ok(!p.eval(t).is_zero()
        && sturm_count(p, &Endpoint::Finite(t.clone()), &Endpoint::PosInfinity)? == 0)
}

/// Root count of `xⁿ + t·g(x)` for `t` above the largest real root of
/// `P_r(t) = det M_n(xⁿ + t·g)`: with `s = deg g`, `ℓ` its leading
/// coefficient and `γ` its number of real roots, the count is `γ + 1` when
/// `n − s` is odd, `γ` when it is even and `ℓ > 0`, `γ + 2` when even and
/// `ℓ < 0`. The prediction is checked against Sturm before returning.
pub fn predict_root_count(n: usize, g: &Poly, t: &Rational) -> Result<usize> {
    let s = g
        .deg()
        .ok_or_else(|| Error::InvalidParameter("g must be nonzero".into()))?;
    if s >= n {
        return Err(Error::InvalidParameter(format!(
            "deg g = {s} must be below n = {n}"
        )));
    }
    if !g.is_separable() {
        return Err(Error::InvalidParameter("g must be separable".into()));
    }
    let pr = p_r(n, g)?;
    if pr.is_zero() {
        return Err(Error::Internal("P_r vanishes identically".into()));
    }
    if max_real_root(&pr, &default_width())?.is_none() {
        return Err(Error::NotApplicable("P_r has no real root".into()));
    }
    if !above_all_roots(&pr, t)? {
        return Err(Error::NotApplicable(format!(
            "t = {t} is not above the largest root of P_r"
        )));
    }
    let gamma = count_real_roots(g)?;
    let lead_positive = g.leading().unwrap().is_positive();
    let predicted = if (n - s) % 2 == 1 {
        gamma + 1
    } else if lead_positive {
        gamma
    } else {
        gamma + 2
    };
    let f = &Poly::monomial(rat(1), n, 'x') + &g.scale(t);
    let actual = sturm_total(&f)?;
    if actual != predicted {
        return Err(Error::Internal(format!(
            "predicted {predicted} real roots for {f} but Sturm finds {actual}"
        )));
    }
    Ok(predicted)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified,
    NotApplicable,
}

/// Certifies that `f_c(t; x)` has no real root when `n ≥ 4` is even,
/// `b ≠ 0` and `(n−1)²a²/(4n(n−2)) ≤ b`. A certificate is always confirmed
/// by Sturm; a failed confirmation is an internal error.
pub fn certify_totally_complex(params: &QuadrinomialParams, t: &Rational) -> Result<Certification> {
    if !t.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "t must be positive, got {t}"
        )));
    }
    let n = params.n();
    let applies =
        n >= 4 && n.is_multiple_of(2) && !params.b().is_zero() && params.threshold() <= *params.b();
    if !applies {
        return Ok(Certification::NotApplicable);
    }
    let roots = sturm_total(&params.f_at(t))?;
    if roots != 0 {
        return Err(Error::Internal(format!(
            "certified totally complex but Sturm finds {roots} real roots at t = {t}"
        )));
    }
    Ok(Certification::Certified)
}

/// On the boundary `b = (n−1)²a²/(4n(n−2))` with `a ≠ 0`, checks that
/// `Q(t) = (n−2)^{n−2}(a²−4b)t² + γt − nⁿb^{n−1}` has zero discriminant and
/// equals `−((n−2)^{n−3}a²/n)(t + v)²` with
/// `v = (−1)ⁿ n(n−1)^{n−1}a^{n−2} / (2^{n−1}(n−2)^{n−2})`.
/// For `n = 4` the check is `P_c(t) = ½a²(t + 27a²/8)²t³` instead.
pub fn q_perfect_square_check(params: &QuadrinomialParams) -> Result<bool> {
    let (a, b) = (params.a(), params.b());
    if a.is_zero() {
        return Err(Error::InvalidParameter(
            "the boundary check needs a ≠ 0".into(),
        ));
    }
    if *b != params.threshold() {
        return Err(Error::InvalidParameter(format!(
            "b = {b} is not the boundary value {}",
            params.threshold()
        )));
    }
    let n = params.n() as i64;
    if n < 4 {
        return Err(Error::InvalidParameter(
            "the boundary check needs n ≥ 4".into(),
        ));
    }
    let a2 = a * a;
    if n == 4 {
        let lin = Poly::new(vec![rat(27) * &a2 / rat(8), rat(1)], 't');
        let expected = (&lin * &lin).scale(&(&a2 / rat(2))).shift(3);
        return Ok(discriminant_closed_form(params)? == expected);
    }
    let parts = closed_form_parts(params)?;
    let q = Poly::new(
        vec![
            parts.constant_coeff.clone(),
            parts.gamma_c.clone(),
            parts.quadratic_coeff.clone(),
        ],
        't',
    );
    let disc =
        &parts.gamma_c * &parts.gamma_c - rat(4) * &parts.quadratic_coeff * &parts.constant_coeff;
    let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
    let v = sign * rat(n) * rpow(&rat(n - 1), n - 1)? * rpow(a, n - 2)?
        / (rpow(&rat(2), n - 1)? * rpow(&rat(n - 2), n - 2)?);
    let lead = -rpow(&rat(n - 2), n - 3)? * &a2 / rat(n);
    let lin = Poly::new(vec![v, rat(1)], 't');
    let square = (&lin * &lin).scale(&lead);
    Ok(disc.is_zero() && q == square)
}
