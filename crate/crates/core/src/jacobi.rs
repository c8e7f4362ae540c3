//! Jacobi polynomials P_n^{(α,β)}: three-term recurrence evaluation,
//! endpoint closed forms, the weighted norm constant h_n, and the weight
//! w_{α,β}(t) = (1−t)^α (1+t)^β.

use crate::error::{Error, Result};
use crate::special::{ln_beta, ln_gamma};
use serde::Serialize;

/// Parameter pair (α, β) of a Jacobi family, each > −1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha <= -1.0 || beta <= -1.0 {
            return Err(Error::domain(format!(
                "Jacobi parameters must be finite and > -1, got alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(JacobiParams { alpha, beta })
    }

    /// Swap α and β — the family appearing in the reflection symmetry
    /// P_n^{(α,β)}(−t) = (−1)^n P_n^{(β,α)}(t).
    pub fn swapped(self) -> Self {
        JacobiParams { alpha: self.beta, beta: self.alpha }
    }
}

/// Values P_0(t) .. P_{n_max}(t) of one Jacobi family at a fixed point.
#[derive(Debug, Clone)]
pub struct EvalSequence {
    pub params: JacobiParams,
    pub point: f64,
    pub values: Vec<f64>,
}

fn check_point(t: f64) -> Result<()> {
    if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("evaluation point must lie in [-1, 1], got {t}")));
    }
    Ok(())
}

#[inline]
fn recurrence_step(alpha: f64, beta: f64, n: f64, t: f64, prev: f64, prev2: f64) -> f64 {
    // 2n(n+α+β)(2n+α+β−2) P_n = (2n+α+β−1)[(2n+α+β)(2n+α+β−2)t + α²−β²] P_{n−1}
    //                            − 2(n+α−1)(n+β−1)(2n+α+β) P_{n−2}
    let s = 2.0 * n + alpha + beta;
    let a1 = 2.0 * n * (n + alpha + beta) * (s - 2.0);
    let a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    let a3 = (s - 2.0) * (s - 1.0) * s;
    let a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * s;
    ((a2 + a3 * t) * prev - a4 * prev2) / a1
}

/// Evaluate P_0 .. P_{n_max} at t by the forward three-term recurrence.
pub fn jacobi_eval(params: JacobiParams, n_max: usize, t: f64) -> Result<EvalSequence> {
    check_point(t)?;
    let (alpha, beta) = (params.alpha, params.beta);
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0);
    if n_max >= 1 {
        values.push(0.5 * ((alpha - beta) + (alpha + beta + 2.0) * t));
    }
    for n in 2..=n_max {
        let v = recurrence_step(alpha, beta, n as f64, t, values[n - 1], values[n - 2]);
        values.push(v);
    }
    Ok(EvalSequence { params, point: t, values })
}

/// Single value P_n^{(α,β)}(t) without allocating the whole sequence.
pub fn jacobi_value(params: JacobiParams, n: usize, t: f64) -> Result<f64> {
    check_point(t)?;
    let (alpha, beta) = (params.alpha, params.beta);
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev2 = 1.0;
    let mut prev = 0.5 * ((alpha - beta) + (alpha + beta + 2.0) * t);
    for k in 2..=n {
        let v = recurrence_step(alpha, beta, k as f64, t, prev, prev2);
        prev2 = prev;
        prev = v;
    }
    Ok(prev)
}

/// d/dt P_n^{(α,β)}(t) = (n+α+β+1)/2 · P_{n−1}^{(α+1,β+1)}(t).
pub fn jacobi_derivative(params: JacobiParams, n: usize, t: f64) -> Result<f64> {
    if n == 0 {
        check_point(t)?;
        return Ok(0.0);
    }
    let shifted = JacobiParams { alpha: params.alpha + 1.0, beta: params.beta + 1.0 };
    let inner = jacobi_value(shifted, n - 1, t)?;
    Ok(0.5 * (n as f64 + params.alpha + params.beta + 1.0) * inner)
}

/// Endpoint closed forms: P_n(1) = (α+1)_n/n! and |P_n(−1)| = (β+1)_n/n!,
/// computed in log space.
pub fn jacobi_endpoint_values(params: JacobiParams, n: usize) -> (f64, f64) {
    let nf = n as f64;
    let lognf = ln_gamma(nf + 1.0);
    let at_plus_one = (ln_gamma(params.alpha + 1.0 + nf) - ln_gamma(params.alpha + 1.0) - lognf).exp();
    let abs_at_minus_one = (ln_gamma(params.beta + 1.0 + nf) - ln_gamma(params.beta + 1.0) - lognf).exp();
    (at_plus_one, abs_at_minus_one)
}

/// Squared weighted norm h_n = ∫ P_n² w_{α,β}. Log-space throughout; the
/// n = 0 case uses the Beta form 2^{α+β+1} B(α+1, β+1), which stays finite
/// for −2 < α+β+1 ≤ 0.
pub fn jacobi_norm_squared(params: JacobiParams, n: usize) -> f64 {
    let (alpha, beta) = (params.alpha, params.beta);
    let log2 = std::f64::consts::LN_2;
    if n == 0 {
        return ((alpha + beta + 1.0) * log2 + ln_beta(alpha + 1.0, beta + 1.0)).exp();
    }
    let nf = n as f64;
    let log_h = (alpha + beta + 1.0) * log2 + ln_gamma(nf + alpha + 1.0) + ln_gamma(nf + beta + 1.0)
        - (2.0 * nf + alpha + beta + 1.0).ln()
        - ln_gamma(nf + 1.0)
        - ln_gamma(nf + alpha + beta + 1.0);
    log_h.exp()
}

/// Jacobi weight w_{α,β}(t) = (1−t)^α (1+t)^β.
pub fn jacobi_weight(params: JacobiParams, t: f64) -> Result<f64> {
    check_point(t)?;
    if (t == 1.0 && params.alpha < 0.0) || (t == -1.0 && params.beta < 0.0) {
        return Err(Error::domain(format!(
            "weight has a pole at t = {t} for (alpha, beta) = ({}, {})",
            params.alpha, params.beta
        )));
    }
    Ok((1.0 - t).powf(params.alpha) * (1.0 + t).powf(params.beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn p(a: f64, b: f64) -> JacobiParams {
        JacobiParams::new(a, b).unwrap()
    }

    #[test]
    fn degree_zero_is_one() {
        let seq = jacobi_eval(p(0.0, 0.0), 0, 0.3).unwrap();
        assert_eq!(seq.values, vec![1.0]);
    }

    #[test]
    fn legendre_degree_one_is_identity() {
        let seq = jacobi_eval(p(0.0, 0.0), 1, 0.5).unwrap();
        assert_eq!(seq.values[1], 0.5);
    }

    #[test]
    fn endpoint_example() {
        // (α=2, β=1, n=5): (3)_5/5! = 2520/120 = 21, (2)_5/5! = 720/120 = 6
        let seq = jacobi_eval(p(2.0, 1.0), 5, 1.0).unwrap();
        assert_relative_eq!(seq.values[5], 21.0, max_relative = 1e-12);
        let (plus, minus) = jacobi_endpoint_values(p(2.0, 1.0), 5);
        assert_relative_eq!(plus, 21.0, max_relative = 1e-12);
        assert_relative_eq!(minus, 6.0, max_relative = 1e-12);
    }

    #[test]
    fn endpoint_legendre() {
        let (plus, minus) = jacobi_endpoint_values(p(0.0, 0.0), 7);
        assert_relative_eq!(plus, 1.0, max_relative = 1e-13);
        assert_relative_eq!(minus, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn endpoint_fractional_params() {
        // (1.5)_3/3! = 13.125/6; (0.5)_3/3! = 1.875/6
        let (plus, minus) = jacobi_endpoint_values(p(0.5, -0.5), 3);
        assert_relative_eq!(plus, 2.1875, max_relative = 1e-12);
        assert_relative_eq!(minus, 0.3125, max_relative = 1e-12);
    }

    #[test]
    fn norm_squared_examples() {
        assert_relative_eq!(jacobi_norm_squared(p(0.0, 0.0), 1), 2.0 / 3.0, max_relative = 1e-13);
        assert_relative_eq!(jacobi_norm_squared(p(0.0, 0.0), 0), 2.0, max_relative = 1e-13);
        assert_relative_eq!(jacobi_norm_squared(p(1.0, 0.0), 0), 2.0, max_relative = 1e-13);
    }

    #[test]
    fn norm_squared_near_singular_sum() {
        // α+β+1 ≤ 0: the Beta form must still give a finite positive h_0.
        let h = jacobi_norm_squared(p(-0.9, -0.8), 0);
        assert!(h.is_finite() && h > 0.0);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(jacobi_weight(p(0.0, 0.0), 0.7).unwrap(), 1.0);
        assert_eq!(jacobi_weight(p(1.0, 2.0), 0.0).unwrap(), 1.0);
        assert_relative_eq!(
            jacobi_weight(p(0.5, 1.5), 0.5).unwrap(),
            0.5f64.powf(0.5) * 1.5f64.powf(1.5),
            max_relative = 1e-15
        );
    }

    #[test]
    fn weight_pole_rejected() {
        assert!(jacobi_weight(p(-0.5, 0.0), 1.0).is_err());
        assert!(jacobi_weight(p(0.0, -0.5), -1.0).is_err());
        assert!(jacobi_weight(p(0.5, 0.5), 1.0).is_ok());
    }

    #[test]
    fn domain_checks() {
        assert!(jacobi_eval(p(0.0, 0.0), 3, 1.5).is_err());
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
        assert!(JacobiParams::new(0.0, f64::NAN).is_err());
    }

    #[test]
    fn symmetry_on_test_matrix() {
        for &(a, b) in &[(0.3, 1.2), (2.0, 0.0), (-0.4, 0.7)] {
            let pp = p(a, b);
            let ps = pp.swapped();
            for i in 0..=100 {
                let t = -1.0 + 2.0 * i as f64 / 100.0;
                let lhs = jacobi_eval(pp, 60, -t).unwrap();
                let rhs = jacobi_eval(ps, 60, t).unwrap();
                for n in 0..=60usize {
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    let scale = rhs.values[n].abs().max(1.0);
                    assert!(
                        (lhs.values[n] - sign * rhs.values[n]).abs() <= 1e-9 * scale,
                        "n = {n}, t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn endpoint_consistency_to_500() {
        let pp = p(1.3, -0.2);
        let seq = jacobi_eval(pp, 500, 1.0).unwrap();
        for n in (0..=500).step_by(25) {
            let (plus, _) = jacobi_endpoint_values(pp, n);
            assert_relative_eq!(seq.values[n], plus, max_relative = 1e-9);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let pp = p(0.7, 1.4);
        let h = 1e-6;
        for n in [1usize, 3, 8, 15] {
            let d = jacobi_derivative(pp, n, 0.3).unwrap();
            let fd = (jacobi_value(pp, n, 0.3 + h).unwrap() - jacobi_value(pp, n, 0.3 - h).unwrap())
                / (2.0 * h);
            assert_relative_eq!(d, fd, max_relative = 1e-7);
        }
    }

    proptest! {
        #[test]
        fn eval_sequence_matches_single_value(
            a in -0.9f64..4.0, b in -0.9f64..4.0, t in -1.0f64..=1.0, n in 0usize..80
        ) {
            let pp = p(a, b);
            let seq = jacobi_eval(pp, n, t).unwrap();
            let single = jacobi_value(pp, n, t).unwrap();
            prop_assert_eq!(seq.values[n], single);
            prop_assert_eq!(seq.values[0], 1.0);
        }
    }
}
