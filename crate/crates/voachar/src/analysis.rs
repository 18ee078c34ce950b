//! Floating-point layer: evaluation of q-expansions on the upper half-plane,
//! transformation-law residuals, numeric S-matrix extraction, and
//! coefficient-growth classification.
//!
//! Everything here is double precision with heuristic (disclosed) tail
//! bounds; the exact layer never depends on this module.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::modforms::{eisenstein, eta};
use crate::qseries::QSeries;
use crate::rational::{q_to_f64, Q};
use crate::{Error, Result};

/// A point tau = re + i*im in the upper half-plane, q = exp(2 pi i tau).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TauPoint {
    re: f64,
    im: f64,
}

impl TauPoint {
    pub fn new(re: f64, im: f64) -> Result<TauPoint> {
        if !(im > 0.0) || !re.is_finite() || !im.is_finite() {
            return Err(Error::TauNotInUpperHalfPlane(im));
        }
        Ok(TauPoint { re, im })
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// The S-image -1/tau, again in the upper half-plane.
    pub fn neg_inverse(&self) -> TauPoint {
        let n = self.re * self.re + self.im * self.im;
        TauPoint { re: -self.re / n, im: self.im / n }
    }
}

/// Sums the stored expansion of f at tau and bounds the tail heuristically:
/// coefficients beyond the trusted window are modeled as growing from the
/// last nonzero coefficient by the largest observed per-step ratio. Returns
/// (value, tail bound); errors when the bound cannot be brought under tol.
pub fn eval(f: &QSeries, tau: &TauPoint, tol: f64) -> Result<(Complex64, f64)> {
    let n_grid = f.denom();
    let lead_num = grid_num(&f.lead(), n_grid);
    let prec_num = grid_num(&f.prec(), n_grid);
    let coeffs = f.dense_coeffs();

    let q_step = (Complex64::new(0.0, 2.0 * PI) * tau.as_complex() / n_grid as f64).exp();
    let x = q_step.norm();

    let mut value = Complex64::new(0.0, 0.0);
    let mut power = q_step.powi(lead_num as i32);
    let mut nonzero: Vec<(i64, f64)> = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            value += q_to_f64(c) * power;
            nonzero.push((lead_num + i as i64, q_to_f64(&c.abs())));
        }
        power *= q_step;
    }

    // Largest observed per-grid-step growth ratio, measured over the second
    // half of the window so early transients (a small constant term, say)
    // do not dominate the extrapolation.
    let cut = lead_num + (prec_num - lead_num) / 2;
    let tail_start = nonzero.partition_point(|&(idx, _)| idx < cut);
    let measured = if nonzero.len() - tail_start >= 2 {
        &nonzero[tail_start..]
    } else {
        &nonzero[..]
    };
    let mut step_ratio: f64 = 1.0;
    for pair in measured.windows(2) {
        let ((i0, m0), (i1, m1)) = (pair[0], pair[1]);
        if m1 > m0 {
            step_ratio = step_ratio.max((m1 / m0).powf(1.0 / (i1 - i0) as f64));
        }
    }

    let (n0, amp) = nonzero.last().copied().unwrap_or((lead_num, 1.0));
    let rho_x = step_ratio * x;
    if rho_x >= 1.0 {
        return Err(Error::TailBoundExceedsTolerance(f64::INFINITY, tol));
    }
    let ln_bound = amp.ln()
        + (prec_num - n0) as f64 * step_ratio.ln()
        + prec_num as f64 * x.ln()
        - (-rho_x).ln_1p();
    let bound = ln_bound.exp();
    if !bound.is_finite() || bound > tol {
        return Err(Error::TailBoundExceedsTolerance(bound, tol));
    }
    Ok((value, bound))
}

fn grid_num(e: &Q, n_grid: i64) -> i64 {
    (e * Q::from_integer(n_grid.into()))
        .to_integer()
        .to_i64()
        .expect("exponent numerator fits i64")
}

const CHECK_EVAL_TOL: f64 = 1e-10;

/// |eta(-1/tau) - sqrt(-i tau) eta(tau)|, principal square root.
pub fn check_eta_transform(tau: &TauPoint, prec: i64) -> Result<f64> {
    let series = eta(prec);
    let (lhs, _) = eval(&series, &tau.neg_inverse(), CHECK_EVAL_TOL)?;
    let (rhs, _) = eval(&series, tau, CHECK_EVAL_TOL)?;
    let factor = (Complex64::new(0.0, -1.0) * tau.as_complex()).sqrt();
    Ok((lhs - factor * rhs).norm())
}

/// |E2(-1/tau) - tau^2 E2(tau) + tau/(2 pi i)| in the -1/12 normalization,
/// whose failure to vanish without the correction term is the
/// quasimodularity of E2.
pub fn check_e2_quasimodular(tau: &TauPoint, prec: i64) -> Result<f64> {
    let series = eisenstein(1, prec);
    let (lhs, _) = eval(&series, &tau.neg_inverse(), CHECK_EVAL_TOL)?;
    let (rhs, _) = eval(&series, tau, CHECK_EVAL_TOL)?;
    let t = tau.as_complex();
    let correction = t / Complex64::new(0.0, 2.0 * PI);
    Ok((lhs - t * t * rhs + correction).norm())
}

/// |E4(-1/tau) - tau^4 E4(tau)|: E4 is strictly modular of weight 4.
pub fn check_e4_modular(tau: &TauPoint, prec: i64) -> Result<f64> {
    let series = eisenstein(2, prec);
    let (lhs, _) = eval(&series, &tau.neg_inverse(), CHECK_EVAL_TOL)?;
    let (rhs, _) = eval(&series, tau, CHECK_EVAL_TOL)?;
    let t = tau.as_complex();
    Ok((lhs - t * t * t * t * rhs).norm())
}

/// Numeric estimate of the matrix rho(S) with Z_i(-1/tau) =
/// tau^k sum_j rho_ij Z_j(tau).
#[derive(Clone, Debug)]
pub struct SMatrixEstimate {
    pub entries: Vec<Vec<Complex64>>,
    /// Max absolute equation error over the held-out validation points.
    pub residual: f64,
    pub weight: Q,
}

/// Sample points tau_s = 0.07 s + (0.8 + 0.13 s) i, s = 1 .. r+7: r+4 for
/// the fit and 3 held out for validation. Chosen so both tau and -1/tau
/// stay well inside the upper half-plane.
pub fn default_samples(r: usize) -> Vec<TauPoint> {
    (1..=r + 7)
        .map(|s| TauPoint { re: 0.07 * s as f64, im: 0.8 + 0.13 * s as f64 })
        .collect()
}

/// Least-squares extraction of rho(S) from evaluations of the characters at
/// the sample points; the last 3 samples are held out for the residual when
/// enough are given. k is the modular weight.
pub fn extract_smatrix(
    chars: &[QSeries],
    k: &Q,
    samples: &[TauPoint],
    tol: f64,
) -> Result<SMatrixEstimate> {
    let r = chars.len();
    if r == 0 {
        return Err(Error::BadArgument("no characters given".into()));
    }
    if samples.len() < r + 2 {
        return Err(Error::InsufficientSamples(r + 2, samples.len()));
    }
    let kf = q_to_f64(k);
    // design[s][j] = tau_s^k Z_j(tau_s), target[i][s] = Z_i(-1/tau_s)
    let mut design = Vec::with_capacity(samples.len());
    let mut target = vec![Vec::with_capacity(samples.len()); r];
    for tau in samples {
        let w = tau.as_complex().powf(kf);
        let mut row = Vec::with_capacity(r);
        for (i, z) in chars.iter().enumerate() {
            let (zt, _) = eval(z, tau, tol)?;
            row.push(w * zt);
            let (zs, _) = eval(z, &tau.neg_inverse(), tol)?;
            target[i].push(zs);
        }
        design.push(row);
    }
    let train = if samples.len() >= r + 5 { samples.len() - 3 } else { samples.len() };

    let mut entries = Vec::with_capacity(r);
    for t in &target {
        entries.push(solve_normal_equations(&design[..train], &t[..train])?);
    }
    let mut residual = 0.0f64;
    for s in train..samples.len() {
        for (i, t) in target.iter().enumerate() {
            let predicted: Complex64 = entries[i]
                .iter()
                .zip(&design[s])
                .map(|(e, d)| e * d)
                .sum();
            residual = residual.max((predicted - t[s]).norm());
        }
    }
    if entries.iter().flatten().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
        return Err(Error::IllConditioned);
    }
    Ok(SMatrixEstimate { entries, residual, weight: k.clone() })
}

/// Solves (A^H A) x = A^H b by Gaussian elimination with partial pivoting.
fn solve_normal_equations(a: &[Vec<Complex64>], b: &[Complex64]) -> Result<Vec<Complex64>> {
    let r = a[0].len();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); r + 1]; r];
    for (i, row_i) in m.iter_mut().enumerate() {
        for j in 0..r {
            row_i[j] = a.iter().map(|row| row[i].conj() * row[j]).sum();
        }
        row_i[r] = a.iter().zip(b).map(|(row, bv)| row[i].conj() * bv).sum();
    }
    let scale = m
        .iter()
        .flat_map(|row| row[..r].iter())
        .map(|c| c.norm())
        .fold(0.0f64, f64::max);
    for col in 0..r {
        let (pivot_row, pivot_mag) = (col..r)
            .map(|i| (i, m[i][col].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty column");
        if pivot_mag < 1e-10 * scale {
            return Err(Error::IllConditioned);
        }
        m.swap(col, pivot_row);
        for i in 0..r {
            if i == col {
                continue;
            }
            let f = m[i][col] / m[col][col];
            for j in col..=r {
                let sub = f * m[col][j];
                m[i][j] -= sub;
            }
        }
    }
    Ok((0..r).map(|i| m[i][r] / m[i][i]).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthModel {
    Polynomial,
    ExponentialSqrt,
    Inconclusive,
}

impl std::fmt::Display for GrowthModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GrowthModel::Polynomial => "polynomial",
            GrowthModel::ExponentialSqrt => "exponential_sqrt",
            GrowthModel::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub model: GrowthModel,
    /// Fitted alpha for a_n ~ n^alpha, or C for log a_n ~ C sqrt(n).
    pub exponent_or_constant: f64,
    pub r_squared: f64,
    pub points_used: usize,
}

const GROWTH_R2_MARGIN: f64 = 0.02;

/// Classifies coefficient growth by fitting log|a_n| against log n
/// (polynomial model) and against sqrt(n) (exponential-sqrt model) over all
/// nonzero terms with n >= 1, deciding by r-squared margin. Trendless
/// bounded data (both fits weak) is polynomial; genuine ties are
/// inconclusive.
pub fn classify_growth(coeffs: &[Q]) -> Result<GrowthReport> {
    if coeffs.len() < 40 {
        return Err(Error::InsufficientData("terms".into(), coeffs.len()));
    }
    let points: Vec<(f64, f64)> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n as f64, q_to_f64(&c.abs()).ln()))
        .collect();
    if points.len() < 20 {
        return Err(Error::InsufficientData("nonzero terms".into(), points.len()));
    }
    let ys: Vec<f64> = points.iter().map(|&(_, y)| y).collect();
    let used = points.len();
    if ys.iter().all(|&y| y == ys[0]) {
        return Ok(GrowthReport {
            model: GrowthModel::Polynomial,
            exponent_or_constant: 0.0,
            r_squared: 1.0,
            points_used: used,
        });
    }
    let xs_log: Vec<f64> = points.iter().map(|&(n, _)| n.ln()).collect();
    let xs_sqrt: Vec<f64> = points.iter().map(|&(n, _)| n.sqrt()).collect();
    let (alpha, r2_poly) = linear_fit(&xs_log, &ys);
    let (cc, r2_exp) = linear_fit(&xs_sqrt, &ys);

    let (model, value, r2) = if r2_poly - r2_exp >= GROWTH_R2_MARGIN {
        (GrowthModel::Polynomial, alpha, r2_poly)
    } else if r2_exp - r2_poly >= GROWTH_R2_MARGIN && cc > 0.0 {
        (GrowthModel::ExponentialSqrt, cc, r2_exp)
    } else if r2_poly.max(r2_exp) < 0.5 {
        // No growth trend under either model: bounded by a slowly varying
        // envelope, which is polynomial growth.
        (GrowthModel::Polynomial, alpha, r2_poly)
    } else if r2_poly >= r2_exp {
        (GrowthModel::Inconclusive, alpha, r2_poly)
    } else {
        (GrowthModel::Inconclusive, cc, r2_exp)
    };
    Ok(GrowthReport {
        model,
        exponent_or_constant: value,
        r_squared: r2.clamp(0.0, 1.0),
        points_used: used,
    })
}

/// Least-squares slope and r-squared of y against x.
fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if syy == 0.0 {
        return (0.0, 1.0);
    }
    let slope = sxy / sxx;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (my + slope * (x - mx));
            e * e
        })
        .sum();
    (slope, 1.0 - ss_res / syy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lattice_theory, minimal_theory};
    use crate::lattice::{a1, e8, theta};
    use crate::modforms::{partition_numbers, partition_series, sigma_series};
    use crate::qseries::QSeries;
    use crate::rational::{q, qi};

    fn tau(re: f64, im: f64) -> TauPoint {
        TauPoint::new(re, im).unwrap()
    }

    #[test]
    fn tau_point_requires_upper_half_plane() {
        assert!(TauPoint::new(0.0, 1.0).is_ok());
        assert!(matches!(
            TauPoint::new(0.0, -1.0),
            Err(Error::TauNotInUpperHalfPlane(_))
        ));
        assert!(TauPoint::new(0.5, 0.0).is_err());
        let t = tau(0.3, 0.9);
        let s = t.neg_inverse();
        assert!((s.re() - (-1.0 / 3.0)).abs() < 1e-12);
        assert!((s.im() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eval_constant_and_two_term_examples() {
        let one = QSeries::one(&qi(30));
        let (v, bound) = eval(&one, &tau(0.37, 1.3), 1e-6).unwrap();
        assert_eq!(v.re, 1.0);
        assert_eq!(v.im, 0.0);
        assert!(bound < 1e-20);

        // 1 + q with a padded trusted window.
        let mut coeffs = vec![qi(1), qi(1)];
        coeffs.extend(std::iter::repeat_with(|| qi(0)).take(28));
        let f = QSeries::from_integer_coeffs(0, coeffs);
        let (v, _) = eval(&f, &tau(0.0, 1.0), 1e-8).unwrap();
        let expected = 1.0 + (-2.0 * PI).exp();
        assert!((v.re - expected).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
        assert!((v.re - 1.0018674).abs() < 1e-7);
    }

    #[test]
    fn eval_eta_self_consistent_and_anchored() {
        let t = tau(0.0, 1.0);
        let (a, _) = eval(&eta(200), &t, 1e-10).unwrap();
        let (b, _) = eval(&eta(400), &t, 1e-10).unwrap();
        assert!((a - b).norm() < 1e-10);
        // eta(i) = Gamma(1/4) / (2 pi^(3/4))
        let gamma_quarter = 3.625_609_908_221_908_3_f64;
        let expected = gamma_quarter / (2.0 * PI.powf(0.75));
        assert!((a.re - expected).abs() < 1e-8);
        assert!(a.im.abs() < 1e-10);
    }

    #[test]
    fn eval_rejects_insufficient_decay() {
        let f = partition_series(40);
        let err = eval(&f, &tau(0.0, 0.01), 1e-6).unwrap_err();
        assert!(matches!(err, Error::TailBoundExceedsTolerance(_, _)));
    }

    #[test]
    fn eta_transformation_law() {
        assert!(check_eta_transform(&tau(0.0, 1.0), 200).unwrap() < 1e-10);
        assert!(check_eta_transform(&tau(0.0, 1.2), 400).unwrap() < 1e-8);
        assert!(check_eta_transform(&tau(0.3, 0.9), 300).unwrap() < 1e-6);
    }

    #[test]
    fn e2_is_quasimodular_not_modular() {
        assert!(check_e2_quasimodular(&tau(0.0, 1.5), 300).unwrap() < 1e-8);
        assert!(check_e2_quasimodular(&tau(0.0, 1.0), 300).unwrap() < 1e-8);
        // Without the correction the defect at tau = i is exactly
        // |tau/(2 pi i)| = 1/(2 pi).
        let series = eisenstein(1, 300);
        let t = tau(0.0, 1.0);
        let (lhs, _) = eval(&series, &t.neg_inverse(), 1e-10).unwrap();
        let (rhs, _) = eval(&series, &t, 1e-10).unwrap();
        let tc = t.as_complex();
        let defect = (lhs - tc * tc * rhs).norm();
        assert!((defect - 1.0 / (2.0 * PI)).abs() < 1e-8);
    }

    #[test]
    fn e4_is_strictly_modular() {
        for t in [tau(0.0, 1.0), tau(0.0, 1.5), tau(0.3, 0.9)] {
            assert!(check_e4_modular(&t, 300).unwrap() < 1e-8);
        }
    }

    #[test]
    fn smatrix_single_holomorphic_character_is_unit() {
        let t = lattice_theory(&e8(), 40).unwrap();
        let z = t.full_character(0).unwrap();
        let est = extract_smatrix(&[z], &qi(0), &default_samples(1), 1e-9).unwrap();
        assert!((est.entries[0][0] - Complex64::new(1.0, 0.0)).norm() < 1e-6);
        assert!(est.residual < 1e-6);
    }

    #[test]
    fn smatrix_constant_vector_is_identity() {
        let one = QSeries::one(&qi(40));
        let est = extract_smatrix(&[one], &qi(0), &default_samples(1), 1e-9).unwrap();
        assert!((est.entries[0][0] - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }

    fn chars_by_weight(t: &crate::catalog::Theory, order: &[Q]) -> Vec<QSeries> {
        let list = t.module_chars().unwrap();
        order
            .iter()
            .map(|w| {
                let j = list.iter().position(|m| &m.weight == w).unwrap();
                t.full_character(j).unwrap()
            })
            .collect()
    }

    #[test]
    fn smatrix_ising_matches_known_values() {
        let t = minimal_theory(3, 4, 60).unwrap();
        let chars = chars_by_weight(&t, &[qi(0), q(1, 2), q(1, 16)]);
        let est = extract_smatrix(&chars, &qi(0), &default_samples(3), 1e-9).unwrap();
        let h = 0.5;
        let s2 = 0.5f64.sqrt();
        let expected = [[h, h, s2], [h, h, -s2], [s2, -s2, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                let e = est.entries[i][j];
                assert!(
                    (e.re - expected[i][j]).abs() < 1e-4,
                    "entry ({i},{j}) = {e}"
                );
                assert!(e.im.abs() < 1e-5);
            }
        }
        assert!(est.residual < 1e-6);
        assert_square_is_identity(&est, 1e-5);
    }

    fn assert_square_is_identity(est: &SMatrixEstimate, tol: f64) {
        let r = est.entries.len();
        for i in 0..r {
            for j in 0..r {
                let v: Complex64 = (0..r)
                    .map(|k| est.entries[i][k] * est.entries[k][j])
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - Complex64::new(want, 0.0)).norm() < tol, "({i},{j}) {v}");
            }
        }
    }

    #[test]
    fn smatrix_lee_yang_involution_and_nonvanishing_rows() {
        let t = minimal_theory(2, 5, 60).unwrap();
        let chars = chars_by_weight(&t, &[q(-1, 5), qi(0)]);
        let est = extract_smatrix(&chars, &qi(0), &default_samples(2), 1e-9).unwrap();
        assert!(est.residual < 1e-6);
        assert_square_is_identity(&est, 1e-5);
        // sum_j rho_ij Z_j(tau) = Z_i(-1/tau) never vanishes at a test point.
        let probe = tau(0.11, 1.07);
        for i in 0..2 {
            let (zi, _) = eval(&chars[i], &probe.neg_inverse(), 1e-9).unwrap();
            assert!(zi.norm() > 0.01, "row {i} vanished");
        }
    }

    #[test]
    fn smatrix_requires_enough_samples() {
        let t = minimal_theory(2, 5, 40).unwrap();
        let chars = chars_by_weight(&t, &[q(-1, 5), qi(0)]);
        let err = extract_smatrix(&chars, &qi(0), &default_samples(2)[..3], 1e-9).unwrap_err();
        assert!(matches!(err, Error::InsufficientSamples(4, 3)));
    }

    #[test]
    fn growth_partition_numbers_exponential_sqrt() {
        let coeffs: Vec<Q> = partition_numbers(2001)
            .into_iter()
            .map(Q::from_integer)
            .collect();
        let rep = classify_growth(&coeffs).unwrap();
        assert_eq!(rep.model, GrowthModel::ExponentialSqrt);
        let hr = PI * (2.0f64 / 3.0).sqrt();
        assert!(
            (rep.exponent_or_constant - hr).abs() / hr < 0.10,
            "C = {}",
            rep.exponent_or_constant
        );
        assert!(rep.r_squared > 0.99);
        assert_eq!(rep.points_used, 2000);
    }

    #[test]
    fn growth_sigma3_polynomial() {
        let s = sigma_series(3, 800);
        let coeffs: Vec<Q> = (0..800).map(|n| s.coefficient_int(n).unwrap() * qi(240)).collect();
        let rep = classify_growth(&coeffs).unwrap();
        assert_eq!(rep.model, GrowthModel::Polynomial);
        assert!(
            rep.exponent_or_constant > 2.7 && rep.exponent_or_constant < 3.3,
            "alpha = {}",
            rep.exponent_or_constant
        );
    }

    #[test]
    fn growth_constant_nonzero_values_polynomial_degree_zero() {
        let th = theta(&a1(), 500);
        let rep = classify_growth(th.dense_coeffs()).unwrap();
        assert_eq!(rep.model, GrowthModel::Polynomial);
        assert_eq!(rep.exponent_or_constant, 0.0);
        assert_eq!(rep.r_squared, 1.0);
    }

    #[test]
    fn growth_twisted_ising_vacuum_polynomial() {
        let prec = 600;
        let t = minimal_theory(3, 4, prec).unwrap();
        let dims = &t.module_chars().unwrap()[t.vacuum_index.unwrap()].dims;
        let twist = euler_phi_power(q(1, 2), prec).mul(dims);
        let rep = classify_growth(twist.dense_coeffs()).unwrap();
        assert_eq!(rep.model, GrowthModel::Polynomial);
    }

    #[test]
    fn growth_untwisted_ising_vacuum_exponential() {
        let prec = 600;
        let t = minimal_theory(3, 4, prec).unwrap();
        let dims = &t.module_chars().unwrap()[t.vacuum_index.unwrap()].dims;
        let rep = classify_growth(dims.dense_coeffs()).unwrap();
        assert_eq!(rep.model, GrowthModel::ExponentialSqrt);
        assert!(rep.exponent_or_constant > 1.0);
    }

    fn euler_phi_power(e: Q, prec: i64) -> QSeries {
        crate::modforms::euler_phi(prec).pow_rational(&e).unwrap()
    }

    #[test]
    fn growth_insufficient_data() {
        let few: Vec<Q> = (0..30).map(qi).collect();
        assert!(matches!(
            classify_growth(&few),
            Err(Error::InsufficientData(_, 30))
        ));
        let sparse: Vec<Q> = (0..60).map(|n| if n < 10 { qi(1) } else { qi(0) }).collect();
        assert!(matches!(
            classify_growth(&sparse),
            Err(Error::InsufficientData(_, _))
        ));
    }
}
