//! Independent discriminant oracles and the seeded equivalence runner.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bezoutian::build_bezoutian;
use crate::closed_form::discriminant_closed_form;
use crate::error::{Error, Result};
use crate::exact::{frac, Poly, Rational, Ring};
use crate::params::QuadrinomialParams;

/// `(−1)^{n(n−1)/2} Res(f, f′) / lc(f)` over any coefficient ring in which
/// the final division is exact.
pub fn discriminant_by_resultant<R: Ring>(f: &Poly<R>) -> Result<R> {
    let n = f
        .deg()
        .ok_or_else(|| Error::InvalidParameter("discriminant of the zero polynomial".into()))?;
    let res = f.resultant(&f.derivative())?;
    let res = if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        res.negate()
    } else {
        res
    };
    res.div_exact(f.leading().unwrap())
        .ok_or_else(|| Error::Internal("resultant not divisible by the leading coefficient".into()))
}

/// `det M_n(f, f′) / lc(f)²`.
pub fn discriminant_by_bezoutian<R: Ring>(f: &Poly<R>) -> Result<R> {
    let n = f
        .deg()
        .ok_or_else(|| Error::InvalidParameter("discriminant of the zero polynomial".into()))?;
    let det = build_bezoutian(f, &f.derivative(), n)?.inner.det();
    let lc = f.leading().unwrap();
    det.div_exact(&lc.times(lc))
        .ok_or_else(|| Error::Internal("Bezoutian determinant not divisible by lc²".into()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleCheck {
    pub params: QuadrinomialParams,
    pub closed_form: Poly,
    pub bezoutian: Poly,
    pub resultant: Poly,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.bezoutian && self.closed_form == self.resultant
    }
}

/// `Δ(f_c(t; x))` three ways, as polynomials in `t`.
pub fn check_oracle_equivalence(params: &QuadrinomialParams) -> Result<OracleCheck> {
    let f = params.f_symbolic();
    Ok(OracleCheck {
        params: params.clone(),
        closed_form: discriminant_closed_form(params)?,
        bezoutian: discriminant_by_bezoutian(&f)?.with_var('t'),
        resultant: discriminant_by_resultant(&f)?.with_var('t'),
    })
}

/// Numerator in `[−9, 9]`, denominator in `[1, 9]`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn random_params(rng: &mut impl Rng, n: usize) -> Result<QuadrinomialParams> {
    let a = random_rational(rng);
    let b = random_rational(rng);
    QuadrinomialParams::new(n, a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub n: usize,
    pub passed: usize,
    pub trials: usize,
}

impl DegreeReport {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub degrees: Vec<DegreeReport>,
}

impl VerifyReport {
    pub fn passed_degrees(&self) -> usize {
        self.degrees.iter().filter(|d| d.ok()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.degrees.iter().all(DegreeReport::ok)
    }
}

/// For each `n` in `3..=n_max`, compares the closed form with both oracles
/// on `trials` random `(a, b)`. The parameters come from one ChaCha8 stream
/// seeded with `seed`, so the run is reproducible.
pub fn run_verification(n_max: usize, trials: usize, seed: u64) -> Result<VerifyReport> {
    if n_max < 3 {
        return Err(Error::InvalidParameter(format!(
            "n_max must be at least 3, got {n_max}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees = Vec::new();
    for n in 3..=n_max {
        let mut passed = 0;
        for _ in 0..trials {
            let p = random_params(&mut rng, n)?;
            if check_oracle_equivalence(&p)?.agrees() {
                passed += 1;
            }
        }
        degrees.push(DegreeReport { n, passed, trials });
    }
    Ok(VerifyReport { degrees })
}
