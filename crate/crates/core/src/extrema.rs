//! Sup-norm estimation on [−1,1] and θ-parametrized weighted maxima.
//!
//! Sampling is Chebyshev-distributed in t (uniform in θ) with at least 32
//! points per polynomial half-wave, followed by golden-section refinement
//! around the leading grid candidates.

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_endpoint_values, jacobi_value, JacobiParams};
use serde::Serialize;

const MIN_GRID: usize = 4096;
const POINTS_PER_DEGREE: usize = 32;
const REFINE_CANDIDATES: usize = 8;
const THETA_TOL: f64 = 1e-12;

/// Estimated maximum of |f| on [−1,1] with its location.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SupNormEstimate {
    pub value: f64,
    pub argmax_t: f64,
    /// θ with cos θ = argmax_t when the θ-parametrized search was used.
    pub argmax_theta: Option<f64>,
    pub grid_points: usize,
    pub refined: bool,
}

/// A sub-interval of [0, π] in the θ variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaInterval {
    pub lo: f64,
    pub hi: f64,
}

impl ThetaInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && 0.0 <= lo && lo < hi && hi <= std::f64::consts::PI)
        {
            return Err(Error::domain(format!(
                "theta interval must satisfy 0 <= lo < hi <= pi, got [{lo}, {hi}]"
            )));
        }
        Ok(ThetaInterval { lo, hi })
    }

    pub fn length(self) -> f64 {
        self.hi - self.lo
    }
}

/// Weight applied inside a θ-maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightKind {
    None,
    /// sin(θ/2)
    SinHalfTheta,
    /// θ^{α+1/2}, with α taken from the Jacobi parameters.
    ThetaPower,
}

const INV_PHI: f64 = 0.618033988749894848;

/// Golden-section maximization of g over [a, b] to θ-tolerance `THETA_TOL`.
/// Returns (argmax, max).
fn golden_max<F: Fn(f64) -> f64>(g: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    while b - a > THETA_TOL {
        if g1 >= g2 {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - INV_PHI * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + INV_PHI * (b - a);
            g2 = g(x2);
        }
    }
    let mid = 0.5 * (a + b);
    (mid, g(mid).max(g1).max(g2))
}

/// Shared grid-then-refine search for max of g(θ) over [lo, hi].
fn theta_search<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, n_grid: usize) -> Result<(f64, f64, usize)> {
    let n = n_grid.max(3);
    let step = (hi - lo) / (n - 1) as f64;
    let mut samples = Vec::with_capacity(n);
    for j in 0..n {
        let theta = if j == n - 1 { hi } else { lo + j as f64 * step };
        let v = g(theta);
        if !v.is_finite() {
            return Err(Error::computation(format!(
                "sampled value is not finite at theta = {theta}"
            )));
        }
        samples.push((theta, v));
    }

    // Local maxima (including endpoints) ranked by sampled value.
    let mut candidates: Vec<usize> = (0..n)
        .filter(|&j| {
            let v = samples[j].1;
            (j == 0 || v >= samples[j - 1].1) && (j == n - 1 || v >= samples[j + 1].1)
        })
        .collect();
    candidates.sort_by(|&a, &b| samples[b].1.total_cmp(&samples[a].1));
    candidates.truncate(REFINE_CANDIDATES);

    let coarse_best = candidates
        .first()
        .map(|&j| samples[j])
        .unwrap_or((lo, samples[0].1));

    let mut refined: Vec<(f64, f64)> = Vec::with_capacity(candidates.len());
    for &j in &candidates {
        let a = if j == 0 { lo } else { samples[j - 1].0 };
        let b = if j == n - 1 { hi } else { samples[j + 1].0 };
        refined.push(golden_max(&g, a, b));
    }
    refined.push(coarse_best);

    let best = refined.iter().map(|&(_, v)| v).fold(f64::NEG_INFINITY, f64::max);
    // Smallest θ among near-ties, for deterministic output.
    let mut arg = f64::INFINITY;
    for &(theta, v) in &refined {
        if v >= best * (1.0 - 1e-12) && theta < arg {
            arg = theta;
        }
    }
    Ok((arg, best, n))
}

/// Maximum of |f| over [−1,1]. `degree_hint` is the polynomial degree and
/// controls the grid density.
pub fn sup_norm<F: Fn(f64) -> f64>(f: F, degree_hint: usize) -> Result<SupNormEstimate> {
    let n = MIN_GRID.max(POINTS_PER_DEGREE * (degree_hint + 1));
    let g = |theta: f64| f(theta.cos()).abs();
    let (arg_theta, value, grid_points) = theta_search(g, 0.0, std::f64::consts::PI, n)?;
    Ok(SupNormEstimate {
        value,
        argmax_t: arg_theta.cos(),
        argmax_theta: Some(arg_theta),
        grid_points,
        refined: true,
    })
}

/// ‖P_n^{(α,β)}‖_∞: the endpoint closed form when max(α,β) ≥ −1/2, a grid
/// search otherwise.
pub fn jacobi_sup_norm(params: JacobiParams, n: usize) -> Result<SupNormEstimate> {
    let (alpha, beta) = (params.alpha, params.beta);
    let (at_plus, at_minus) = jacobi_endpoint_values(params, n);
    if alpha >= beta && alpha >= -0.5 {
        Ok(SupNormEstimate {
            value: at_plus,
            argmax_t: 1.0,
            argmax_theta: Some(0.0),
            grid_points: 64,
            refined: false,
        })
    } else if beta >= alpha && beta >= -0.5 {
        Ok(SupNormEstimate {
            value: at_minus,
            argmax_t: -1.0,
            argmax_theta: Some(std::f64::consts::PI),
            grid_points: 64,
            refined: false,
        })
    } else {
        sup_norm(|t| jacobi_value(params, n, t).unwrap_or(f64::NAN), n)
    }
}

/// Max over θ ∈ `interval` of weight(θ)·|P_n^{(α,β)}(cos θ)|.
pub fn weighted_theta_max(
    params: JacobiParams,
    n: usize,
    interval: ThetaInterval,
    weight_kind: WeightKind,
) -> Result<f64> {
    let full = MIN_GRID.max(POINTS_PER_DEGREE * (n + 1)) as f64;
    let scaled = (full * interval.length() / std::f64::consts::PI).ceil() as usize;
    let grid = scaled.max(256);
    let exponent = params.alpha + 0.5;
    let g = move |theta: f64| {
        let w = match weight_kind {
            WeightKind::None => 1.0,
            WeightKind::SinHalfTheta => (0.5 * theta).sin(),
            WeightKind::ThetaPower => theta.powf(exponent),
        };
        w * jacobi_value(params, n, theta.cos()).map(f64::abs).unwrap_or(f64::NAN)
    };
    let (_, value, _) = theta_search(g, interval.lo, interval.hi, grid)?;
    Ok(value)
}

/// |P_n^{(α,β)}(cos n^{−1})| for α > −1/2, n ≥ 1.
pub fn special_point_value(params: JacobiParams, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("special point value requires n >= 1".to_string()));
    }
    if params.alpha <= -0.5 {
        return Err(Error::domain(format!(
            "special point value requires alpha > -1/2, got {}",
            params.alpha
        )));
    }
    Ok(jacobi_value(params, n, (1.0 / n as f64).cos())?.abs())
}
