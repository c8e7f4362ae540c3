//! Gauss–Jacobi quadrature: nodes by safeguarded Newton iteration on
//! P_m^{(α,β)}, weights from the closed-form derivative formula, and the
//! parity-split Gram matrix that certifies orthonormality of C̃_n against
//! the singular weight v_{λ,μ} without ever sampling it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::geggen::{orthonormal_coefficient, GegenParams};
use crate::jacobi::{
    jacobi_derivative, jacobi_eval, jacobi_norm_squared, jacobi_value, JacobiParams,
};
use crate::special::ln_beta;

/// Nodes and weights of an m-point rule for ∫ f·w_{α,β} on [−1,1].
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub params: JacobiParams,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Zeroth moment ∫ w_{α,β} = 2^{α+β+1} B(α+1, β+1).
    pub fn zeroth_moment(params: JacobiParams) -> f64 {
        ((params.alpha + params.beta + 1.0) * std::f64::consts::LN_2
            + ln_beta(params.alpha + 1.0, params.beta + 1.0))
        .exp()
    }
}

type CacheKey = (u64, u64, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<QuadratureRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<QuadratureRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Build (or fetch from the cache) the m-point Gauss–Jacobi rule.
pub fn gauss_jacobi_rule(params: JacobiParams, m: usize) -> Result<Arc<QuadratureRule>> {
    if m == 0 {
        return Err(Error::domain("quadrature rule needs at least one point".to_string()));
    }
    let key = (params.alpha.to_bits(), params.beta.to_bits(), m);
    if let Some(rule) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(build_rule(params, m)?);
    cache().lock().unwrap().insert(key, Arc::clone(&rule));
    Ok(rule)
}

fn build_rule(params: JacobiParams, m: usize) -> Result<QuadratureRule> {
    let (alpha, beta) = (params.alpha, params.beta);
    let nodes = if m == 1 {
        vec![(beta - alpha) / (alpha + beta + 2.0)]
    } else {
        find_nodes(params, m)?
    };

    // w_i = -(k_{m+1}/k_m) h_m / (P'_m(x_i) P_{m+1}(x_i)), with the leading
    // coefficient ratio in closed form and h_m from log space.
    let mf = m as f64;
    let s = 2.0 * mf + alpha + beta;
    let lead_ratio = (s + 1.0) * (s + 2.0) / (2.0 * (mf + 1.0) * (mf + alpha + beta + 1.0));
    let h = jacobi_norm_squared(params, m);
    let mut weights = Vec::with_capacity(m);
    for &x in &nodes {
        let deriv = jacobi_derivative(params, m, x)?;
        let next = jacobi_value(params, m + 1, x)?;
        let w = -lead_ratio * h / (deriv * next);
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::computation(format!(
                "non-positive quadrature weight {w} at node {x} for m = {m}"
            )));
        }
        weights.push(w);
    }

    let sum: f64 = weights.iter().sum();
    let moment = QuadratureRule::zeroth_moment(params);
    if (sum - moment).abs() > 1e-10 * moment {
        return Err(Error::computation(format!(
            "quadrature weights sum to {sum}, expected zeroth moment {moment}"
        )));
    }
    Ok(QuadratureRule { params, nodes, weights })
}

/// Locate the m zeros of P_m by sign-change bracketing on a Chebyshev grid
/// in θ followed by safeguarded Newton iteration.
fn find_nodes(params: JacobiParams, m: usize) -> Result<Vec<f64>> {
    let grid = 16 * m + 64;
    let mut brackets = Vec::with_capacity(m);
    let mut prev_x = -1.0f64;
    let mut prev_f = jacobi_value(params, m, prev_x)?;
    for j in 1..=grid {
        let theta = std::f64::consts::PI * (grid - j) as f64 / grid as f64;
        let x = theta.cos();
        let f = jacobi_value(params, m, x)?;
        if prev_f == 0.0 {
            brackets.push((prev_x, prev_x));
        } else if prev_f * f < 0.0 {
            brackets.push((prev_x, x));
        }
        prev_x = x;
        prev_f = f;
    }
    if brackets.len() != m {
        return Err(Error::computation(format!(
            "node solver bracketed {} sign changes, expected {m} for (alpha, beta) = ({}, {})",
            brackets.len(),
            params.alpha,
            params.beta
        )));
    }
    brackets
        .into_iter()
        .map(|(lo, hi)| refine_root(params, m, lo, hi))
        .collect()
}

fn refine_root(params: JacobiParams, m: usize, mut lo: f64, mut hi: f64) -> Result<f64> {
    if lo == hi {
        return Ok(lo);
    }
    let mut f_lo = jacobi_value(params, m, lo)?;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let f = jacobi_value(params, m, x)?;
        if f == 0.0 {
            return Ok(x);
        }
        if f_lo * f < 0.0 {
            hi = x;
        } else {
            lo = x;
            f_lo = f;
        }
        let d = jacobi_derivative(params, m, x)?;
        let newton = x - f / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() < 1e-15 {
            return Ok(next);
        }
        x = next;
    }
    // Newton stalled; the bracket is already tiny after 50 halvings.
    if hi - lo < 1e-12 {
        Ok(0.5 * (lo + hi))
    } else {
        Err(Error::computation(format!(
            "node refinement did not converge in bracket [{lo}, {hi}] for m = {m}"
        )))
    }
}

/// Σ wᵢ f(xᵢ) ≈ ∫ f·w_{α,β}.
pub fn integrate<F: Fn(f64) -> f64>(rule: &QuadratureRule, f: F) -> Result<f64> {
    let mut acc = 0.0f64;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::computation(format!("integrand is not finite at node {x}")));
        }
        acc += w * v;
    }
    Ok(acc)
}

/// Gram matrix ∫ C̃_i C̃_j v_{λ,μ} for i, j ≤ n_max, by parity splitting.
///
/// Mixed-parity entries are 0 exactly. Same-parity entries reduce through
/// u = 2t²−1 to nonsingular Gauss–Jacobi integrals:
/// even–even against (λ−1/2, μ−1/2) with prefactor 2^{−(λ+μ)}, odd–odd
/// against (λ−1/2, μ+1/2) with prefactor 2^{−(λ+μ)−1}.
pub fn gram_matrix_orthonormal(
    params: GegenParams,
    n_max: usize,
    m: usize,
) -> Result<Vec<Vec<f64>>> {
    if m < n_max + 8 {
        return Err(Error::computation(format!(
            "gram matrix for n_max = {n_max} needs at least m = {} quadrature points, got {m}",
            n_max + 8
        )));
    }
    let even_rule = gauss_jacobi_rule(params.even_inner(), m)?;
    let odd_rule = gauss_jacobi_rule(params.odd_inner(), m)?;

    let k_max = n_max / 2;
    let even_vals: Vec<Vec<f64>> = even_rule
        .nodes
        .iter()
        .map(|&u| jacobi_eval(params.even_inner(), k_max, u).map(|s| s.values))
        .collect::<Result<_>>()?;
    let odd_vals: Vec<Vec<f64>> = odd_rule
        .nodes
        .iter()
        .map(|&u| jacobi_eval(params.odd_inner(), k_max, u).map(|s| s.values))
        .collect::<Result<_>>()?;

    let coeffs: Vec<f64> =
        (0..=n_max).map(|n| orthonormal_coefficient(params, n).value).collect();
    let even_scale = 2f64.powf(-(params.lambda + params.mu));
    let odd_scale = 0.5 * even_scale;

    let mut gram = vec![vec![0.0f64; n_max + 1]; n_max + 1];
    for i in 0..=n_max {
        for j in i..=n_max {
            if (i + j) % 2 == 1 {
                continue;
            }
            let (p, q) = (i / 2, j / 2);
            let entry = if i % 2 == 0 {
                let sum: f64 = even_rule
                    .weights
                    .iter()
                    .zip(even_vals.iter())
                    .map(|(&w, vals)| w * vals[p] * vals[q])
                    .sum();
                even_scale * coeffs[i] * coeffs[j] * sum
            } else {
                let sum: f64 = odd_rule
                    .weights
                    .iter()
                    .zip(odd_vals.iter())
                    .map(|(&w, vals)| w * vals[p] * vals[q])
                    .sum();
                odd_scale * coeffs[i] * coeffs[j] * sum
            };
            gram[i][j] = entry;
            gram[j][i] = entry;
        }
    }
    Ok(gram)
}
