//! Scalar kernels: log-gamma, the Pochhammer symbol, and gamma-function
//! ratios. Every coefficient formula in the library routes through these.

use crate::error::{Error, Result};

/// A finite, strictly positive real number — the domain of `log_gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositiveReal(f64);

impl PositiveReal {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::domain(format!(
                "log_gamma requires a finite positive argument, got {value}"
            )));
        }
        Ok(PositiveReal(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

// Stirling series coefficients B_{2k} / (2k (2k-1)).
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918938533204672741780329736406;

/// ln Γ(x) for x > 0, unchecked. Arguments below 12 are shifted up with the
/// recurrence Γ(x+1) = x Γ(x) before applying the Stirling series.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0 && x.is_finite());
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    let mut shift = 0.0f64;
    let mut z = x;
    while z < 12.0 {
        shift += z.ln();
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut power = inv;
    for c in STIRLING {
        series += c * power;
        power *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + series - shift
}

/// Natural log of the gamma function on the positive axis.
pub fn log_gamma(x: PositiveReal) -> f64 {
    ln_gamma(x.value())
}

/// ln B(a, b) for positive a, b.
pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Rising factorial (q)_n = q (q+1) ⋯ (q+n−1), with (q)_0 = 1.
///
/// Direct product for n ≤ 64; the log-gamma form for larger n. A negative
/// q is peeled off factor by factor until the remainder is positive, so the
/// log form only ever sees positive arguments.
pub fn pochhammer(q: f64, n: usize) -> Result<f64> {
    if !q.is_finite() {
        return Err(Error::domain(format!("pochhammer requires finite q, got {q}")));
    }
    let value = if n <= 64 {
        let mut acc = 1.0f64;
        for k in 0..n {
            acc *= q + k as f64;
        }
        acc
    } else if q > 0.0 {
        (ln_gamma(q + n as f64) - ln_gamma(q)).exp()
    } else {
        // Peel leading non-positive factors; q + k eventually exceeds 0.
        let mut head = 1.0f64;
        let mut k = 0usize;
        let mut base = q;
        while base <= 0.0 && k < n {
            head *= base;
            base += 1.0;
            k += 1;
        }
        if k == n {
            head
        } else {
            head * (ln_gamma(base + (n - k) as f64) - ln_gamma(base)).exp()
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::computation(format!(
            "pochhammer({q}, {n}) overflows the representable range"
        )))
    }
}

/// Γ(n+a) / Γ(n+b), computed in log space so neither gamma overflows.
pub fn gamma_ratio(a: f64, b: f64, n: usize) -> Result<f64> {
    let na = n as f64 + a;
    let nb = n as f64 + b;
    if !(na > 0.0) || !(nb > 0.0) {
        return Err(Error::domain(format!(
            "gamma_ratio requires n+a > 0 and n+b > 0, got n+a = {na}, n+b = {nb}"
        )));
    }
    Ok((ln_gamma(na) - ln_gamma(nb)).exp())
}
