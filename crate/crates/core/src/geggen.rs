//! Generalized Gegenbauer polynomials C_n^{(λ,μ)} and their orthonormal
//! versions C̃_n^{(λ,μ)}, built from Jacobi polynomials at the quadratic
//! argument 2t²−1 with parity-dependent parameters, together with the
//! weight v_{λ,μ}(t) = |t|^{2μ}(1−t²)^{λ−1/2} and the connection-integral
//! representation.

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_value, JacobiParams};
use crate::quadrature::gauss_jacobi_rule;
use crate::special::{ln_beta, ln_gamma};
use serde::Serialize;

/// Parameter pair (λ, μ) with λ > −1/2, μ ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GegenParams {
    pub lambda: f64,
    pub mu: f64,
}

impl GegenParams {
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !lambda.is_finite() || !mu.is_finite() || lambda <= -0.5 || mu < 0.0 {
            return Err(Error::domain(format!(
                "generalized Gegenbauer parameters require lambda > -1/2 and mu >= 0, \
                 got lambda = {lambda}, mu = {mu}"
            )));
        }
        Ok(GegenParams { lambda, mu })
    }

    /// Inner Jacobi family for even degrees: (λ−1/2, μ−1/2).
    pub fn even_inner(self) -> JacobiParams {
        JacobiParams { alpha: self.lambda - 0.5, beta: self.mu - 0.5 }
    }

    /// Inner Jacobi family for odd degrees: (λ−1/2, μ+1/2).
    pub fn odd_inner(self) -> JacobiParams {
        JacobiParams { alpha: self.lambda - 0.5, beta: self.mu + 0.5 }
    }
}

/// Orthonormalization coefficient ã_n^{(λ,μ)}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthonormalCoefficient {
    pub n: usize,
    pub value: f64,
}

/// (q1)_k / (q2)_k with q2 > 0, in log space. Non-positive factors from a
/// negative q1 are peeled off before switching to the log-gamma form, so
/// the ratio stays finite for k far beyond the overflow point of either
/// rising factorial alone.
fn pochhammer_ratio(q1: f64, q2: f64, k: usize) -> f64 {
    debug_assert!(q2 > 0.0);
    let mut head = 1.0f64;
    let mut base = q1;
    let mut peeled = 0usize;
    while base <= 0.0 && peeled < k {
        head *= base;
        base += 1.0;
        peeled += 1;
    }
    if peeled == k {
        return head / (ln_gamma(q2 + k as f64) - ln_gamma(q2)).exp();
    }
    let rest = k - peeled;
    head * (ln_gamma(base + rest as f64) - ln_gamma(base) - ln_gamma(q2 + k as f64)
        + ln_gamma(q2))
    .exp()
}

/// Plain normalization a_n^{(λ,μ)}: a_{2k} = (λ+μ)_k/(μ+½)_k and
/// a_{2k+1} = (λ+μ)_{k+1}/(μ+½)_{k+1}.
pub fn plain_coefficient(params: GegenParams, n: usize) -> f64 {
    let q1 = params.lambda + params.mu;
    let q2 = params.mu + 0.5;
    let k = if n % 2 == 0 { n / 2 } else { n / 2 + 1 };
    pochhammer_ratio(q1, q2, k)
}

/// Orthonormalization coefficient ã_n^{(λ,μ)}, computed entirely in log
/// space from its four gamma factors. The k = 0 even case folds
/// (λ+μ)Γ(λ+μ) into Γ(λ+μ+1) so that λ+μ ≤ 0 never reaches log-gamma.
pub fn orthonormal_coefficient(params: GegenParams, n: usize) -> OrthonormalCoefficient {
    let (l, m) = (params.lambda, params.mu);
    let k = (n / 2) as f64;
    let log_sq = if n % 2 == 0 {
        if n == 0 {
            ln_gamma(l + m + 1.0) - ln_gamma(l + 0.5) - ln_gamma(m + 0.5)
        } else {
            (2.0 * k + l + m).ln() + ln_gamma(k + 1.0) + ln_gamma(k + l + m)
                - ln_gamma(k + l + 0.5)
                - ln_gamma(k + m + 0.5)
        }
    } else {
        (2.0 * k + l + m + 1.0).ln() + ln_gamma(k + 1.0) + ln_gamma(k + l + m + 1.0)
            - ln_gamma(k + l + 0.5)
            - ln_gamma(k + m + 1.5)
    };
    OrthonormalCoefficient { n, value: (0.5 * log_sq).exp() }
}

fn quadratic_argument(t: f64) -> f64 {
    (2.0 * t * t - 1.0).clamp(-1.0, 1.0)
}

/// C_n^{(λ,μ)}(t). For μ = 0 this is the Gegenbauer polynomial C_n^λ(t).
pub fn gengeg_eval(params: GegenParams, n: usize, t: f64) -> Result<f64> {
    let a = plain_coefficient(params, n);
    composite_eval(params, n, t).map(|base| a * base)
}

/// C̃_n^{(λ,μ)}(t) — the orthonormal version.
pub fn gengeg_orthonormal_eval(params: GegenParams, n: usize, t: f64) -> Result<f64> {
    let a = orthonormal_coefficient(params, n).value;
    composite_eval(params, n, t).map(|base| a * base)
}

/// The parity-dependent Jacobi composite without its normalization:
/// P_k^{(λ−1/2,μ−1/2)}(2t²−1) for n = 2k, t·P_k^{(λ−1/2,μ+1/2)}(2t²−1)
/// for n = 2k+1.
fn composite_eval(params: GegenParams, n: usize, t: f64) -> Result<f64> {
    if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("evaluation point must lie in [-1, 1], got {t}")));
    }
    let u = quadratic_argument(t);
    let k = n / 2;
    if n % 2 == 0 {
        jacobi_value(params.even_inner(), k, u)
    } else {
        Ok(t * jacobi_value(params.odd_inner(), k, u)?)
    }
}

/// Weight v_{λ,μ}(t) = |t|^{2μ}(1−t²)^{λ−1/2}.
pub fn gengeg_weight(params: GegenParams, t: f64) -> Result<f64> {
    if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("weight argument must lie in [-1, 1], got {t}")));
    }
    if t.abs() == 1.0 && params.lambda < 0.5 {
        return Err(Error::domain(format!(
            "weight has a pole at t = {t} for lambda = {} < 1/2",
            params.lambda
        )));
    }
    let radial = if params.mu == 0.0 { 1.0 } else { t.abs().powf(2.0 * params.mu) };
    Ok(radial * (1.0 - t * t).powf(params.lambda - 0.5))
}

/// C_n^{(λ,μ)}(t) through the connection integral
/// c_μ ∫ C_n^{λ+μ}(tx)(1+x)(1−x²)^{μ−1} dx, with the singular factor
/// absorbed into an m-point Gauss–Jacobi rule of exponents (μ−1, μ−1)
/// and c_μ^{−1} = B(1/2, μ) in closed form.
pub fn connection_eval(params: GegenParams, n: usize, t: f64, m: usize) -> Result<f64> {
    if params.mu <= 0.0 {
        return Err(Error::domain(
            "the connection formula requires mu > 0".to_string(),
        ));
    }
    if m < n / 2 + 8 {
        return Err(Error::domain(format!(
            "connection quadrature needs at least n/2 + 8 = {} points, got {m}",
            n / 2 + 8
        )));
    }
    if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("evaluation point must lie in [-1, 1], got {t}")));
    }
    let gegen = GegenParams { lambda: params.lambda + params.mu, mu: 0.0 };
    let rule_params = JacobiParams::new(params.mu - 1.0, params.mu - 1.0)?;
    let rule = gauss_jacobi_rule(rule_params, m)?;
    let mut acc = 0.0f64;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let arg = (t * x).clamp(-1.0, 1.0);
        acc += w * gengeg_eval(gegen, n, arg)? * (1.0 + x);
    }
    let log_c = -ln_beta(0.5, params.mu);
    Ok(log_c.exp() * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::pochhammer;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn g(l: f64, m: f64) -> GegenParams {
        GegenParams::new(l, m).unwrap()
    }

    #[test]
    fn plain_coefficient_examples() {
        assert_eq!(plain_coefficient(g(1.0, 0.5), 0), 1.0);
        assert_relative_eq!(plain_coefficient(g(1.0, 0.5), 1), 1.5, max_relative = 1e-12);
        assert_relative_eq!(plain_coefficient(g(0.5, 0.5), 2), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn plain_coefficient_matches_pochhammer_for_small_n() {
        for &(l, m) in &[(0.7, 0.3), (2.0, 1.0), (-0.3, 1.5)] {
            let params = g(l, m);
            for n in 0..40usize {
                let k = if n % 2 == 0 { n / 2 } else { n / 2 + 1 };
                let expected =
                    pochhammer(l + m, k).unwrap() / pochhammer(m + 0.5, k).unwrap();
                assert_relative_eq!(
                    plain_coefficient(params, n),
                    expected,
                    max_relative = 1e-11
                );
            }
        }
    }

    #[test]
    fn orthonormal_coefficient_examples() {
        assert_relative_eq!(
            orthonormal_coefficient(g(0.5, 0.5), 0).value,
            1.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            orthonormal_coefficient(g(1.0, 0.5), 0).value,
            1.5f64.sqrt(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn orthonormal_coefficient_negative_lambda_plus_mu() {
        // λ+μ < 0 at n = 0 exercises the folded gamma form.
        let c = orthonormal_coefficient(g(-0.3, 0.2), 0).value;
        assert!(c.is_finite() && c > 0.0);
    }

    #[test]
    fn coefficient_growth_band() {
        // ã_{2k} ≍ k^{1/2}
        let params = g(2.0, 1.0);
        let r = orthonormal_coefficient(params, 2000).value / 1000f64.sqrt();
        assert!(r > 0.1 && r < 10.0, "ratio {r}");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(gengeg_eval(g(0.9, 0.3), 0, -0.7).unwrap(), 1.0);
        assert_relative_eq!(gengeg_eval(g(1.0, 0.5), 1, 0.4).unwrap(), 0.6, max_relative = 1e-12);
        assert_relative_eq!(gengeg_eval(g(0.5, 0.5), 2, 1.0).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn orthonormal_eval_examples() {
        for &t in &[-1.0, -0.4, 0.0, 0.8, 1.0] {
            assert_relative_eq!(
                gengeg_orthonormal_eval(g(0.5, 0.5), 0, t).unwrap(),
                1.0,
                max_relative = 1e-13
            );
        }
        assert_eq!(gengeg_orthonormal_eval(g(2.0, 1.0), 7, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn orthonormal_odd_endpoint_closed_form() {
        // C̃_6 at t = 1 equals ã_6 · P_3^{(1,1.3)}(1) = ã_6 · (2)_3/3!
        let params = g(1.5, 0.8);
        let a6 = orthonormal_coefficient(params, 6).value;
        let expected = a6 * pochhammer(2.0, 3).unwrap() / 6.0;
        assert_relative_eq!(
            gengeg_orthonormal_eval(params, 6, 1.0).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn weight_examples() {
        assert_relative_eq!(gengeg_weight(g(0.5, 0.5), 0.5).unwrap(), 0.5, max_relative = 1e-15);
        assert_eq!(gengeg_weight(g(0.5, 1.0), 0.0).unwrap(), 0.0);
        assert_relative_eq!(gengeg_weight(g(1.5, 0.0), 0.6).unwrap(), 0.64, max_relative = 1e-14);
        // μ = 0 at t = 0 is 1, not 0^0 trouble
        assert_eq!(gengeg_weight(g(1.5, 0.0), 0.0).unwrap(), 1.0);
        assert!(gengeg_weight(g(0.2, 0.5), 1.0).is_err());
    }

    #[test]
    fn gegenbauer_specialization() {
        // C_n^λ(t) = ((2λ)_n/(λ+½)_n) P_n^{(λ−1/2,λ−1/2)}(t)
        for &l in &[0.5, 1.0, 2.5] {
            let params = g(l, 0.0);
            let inner = JacobiParams::new(l - 0.5, l - 0.5).unwrap();
            for n in 0..=30usize {
                let factor =
                    pochhammer(2.0 * l, n).unwrap() / pochhammer(l + 0.5, n).unwrap();
                for i in 0..=20 {
                    let t = -1.0 + 0.1 * i as f64;
                    let lhs = gengeg_eval(params, n, t).unwrap();
                    let rhs = factor * jacobi_value(inner, n, t).unwrap();
                    let scale = rhs.abs().max(1.0);
                    assert!((lhs - rhs).abs() <= 1e-9 * scale, "λ={l}, n={n}, t={t}");
                }
            }
        }
        // Legendre endpoint: C_n^{1/2}(1) = 1
        for n in 0..=20usize {
            assert_relative_eq!(gengeg_eval(g(0.5, 0.0), n, 1.0).unwrap(), 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn connection_trivial_and_linear() {
        assert_relative_eq!(connection_eval(g(0.9, 0.3), 0, 0.25, 10).unwrap(), 1.0, max_relative = 1e-11);
        assert_relative_eq!(connection_eval(g(1.0, 0.5), 1, 0.4, 10).unwrap(), 0.6, max_relative = 1e-10);
    }

    #[test]
    fn connection_matches_direct_eval() {
        let params = g(0.7, 0.9);
        let direct = gengeg_eval(params, 3, 0.3).unwrap();
        let via_integral = connection_eval(params, 3, 0.3, 12).unwrap();
        assert_relative_eq!(via_integral, direct, max_relative = 1e-8);
    }

    #[test]
    fn connection_rejects_mu_zero_and_small_m() {
        assert!(connection_eval(g(1.0, 0.0), 3, 0.5, 20).is_err());
        assert!(connection_eval(g(1.0, 0.5), 40, 0.5, 10).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(GegenParams::new(-0.5, 0.0).is_err());
        assert!(GegenParams::new(1.0, -0.1).is_err());
        assert!(GegenParams::new(f64::INFINITY, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn parity(l in -0.4f64..3.0, m in 0.0f64..3.0, n in 0usize..60, t in -1.0f64..=1.0) {
            let params = g(l, m);
            let plus = gengeg_eval(params, n, t).unwrap();
            let minus = gengeg_eval(params, n, -t).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let scale = plus.abs().max(1.0);
            prop_assert!((minus - sign * plus).abs() <= 1e-10 * scale);
        }
    }
}
