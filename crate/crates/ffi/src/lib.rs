//! C ABI over the `gegen` library.
//!
//! Every fallible entry point returns a [`GegenStatus`] and writes its result
//! through out-pointers. A thread-local message describing the most recent
//! error is available via [`gegen_last_error_message`]. Quadrature rules are
//! exposed as opaque handles that must be released with
//! [`gegen_quadrature_free`]; strings returned by the library must be
//! released with [`gegen_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_void, CString};
use std::sync::Arc;

use gegen::asymptotics::{verify_theorem1, DEFAULT_BAND_TOL, DEFAULT_SLOPE_TOL};
use gegen::extrema::jacobi_sup_norm;
use gegen::geggen::{
    connection_eval, gengeg_eval, gengeg_orthonormal_eval, gengeg_weight,
    orthonormal_coefficient,
};
use gegen::jacobi::{
    jacobi_derivative, jacobi_endpoint_values, jacobi_eval, jacobi_norm_squared, jacobi_value,
    jacobi_weight,
};
use gegen::quadrature::{gauss_jacobi_rule, integrate, QuadratureRule};
use gegen::special::{gamma_ratio, log_gamma, pochhammer, PositiveReal};
use gegen::{Error, GegenParams, JacobiParams};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GegenStatus {
    /// Success.
    Ok = 0,
    /// A parameter was outside the supported domain.
    DomainError = 1,
    /// The computation could not be carried out at the requested accuracy.
    ComputationError = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> GegenStatus {
    set_error(&err.to_string());
    match err {
        Error::Domain(_) => GegenStatus::DomainError,
        Error::Computation(_) => GegenStatus::ComputationError,
    }
}

/// Message describing the most recent error on this thread, or null if no
/// error has occurred. The pointer stays valid until the next failing call
/// on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn gegen_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.as_ptr(),
        None => std::ptr::null(),
    })
}

unsafe fn write_out(out: *mut f64, value: f64) -> GegenStatus {
    if out.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    *out = value;
    GegenStatus::Ok
}

unsafe fn write_result(out: *mut f64, r: gegen::Result<f64>) -> GegenStatus {
    match r {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

fn jacobi_params(alpha: f64, beta: f64) -> gegen::Result<JacobiParams> {
    JacobiParams::new(alpha, beta)
}

fn gegen_params(lambda: f64, mu: f64) -> gegen::Result<GegenParams> {
    GegenParams::new(lambda, mu)
}

/// ln Γ(x) for x > 0.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_log_gamma(x: f64, out: *mut f64) -> GegenStatus {
    match PositiveReal::new(x) {
        Ok(p) => write_out(out, log_gamma(p)),
        Err(e) => status_of(&e),
    }
}

/// Pochhammer symbol (q)_n.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_pochhammer(q: f64, n: usize, out: *mut f64) -> GegenStatus {
    write_result(out, pochhammer(q, n))
}

/// Γ(a + n) / Γ(b + n) for a, b > 0.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_gamma_ratio(a: f64, b: f64, n: usize, out: *mut f64) -> GegenStatus {
    write_result(out, gamma_ratio(a, b, n))
}

/// P_n^{(α,β)}(t).
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_value(
    alpha: f64,
    beta: f64,
    n: usize,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, jacobi_params(alpha, beta).and_then(|p| jacobi_value(p, n, t)))
}

/// Fills `out[0..=n_max]` with P_0^{(α,β)}(t), …, P_{n_max}^{(α,β)}(t).
///
/// # Safety
/// `out` must point to at least `n_max + 1` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_eval(
    alpha: f64,
    beta: f64,
    n_max: usize,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    if out.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    match jacobi_params(alpha, beta).and_then(|p| jacobi_eval(p, n_max, t)) {
        Ok(seq) => {
            std::ptr::copy_nonoverlapping(seq.values.as_ptr(), out, seq.values.len());
            GegenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// d/dt P_n^{(α,β)}(t).
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_derivative(
    alpha: f64,
    beta: f64,
    n: usize,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, jacobi_params(alpha, beta).and_then(|p| jacobi_derivative(p, n, t)))
}

/// P_n^{(α,β)}(1) and |P_n^{(α,β)}(−1)|.
///
/// # Safety
/// `out_plus` and `out_abs_minus` must be valid pointers to doubles.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_endpoint_values(
    alpha: f64,
    beta: f64,
    n: usize,
    out_plus: *mut f64,
    out_abs_minus: *mut f64,
) -> GegenStatus {
    if out_plus.is_null() || out_abs_minus.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    match jacobi_params(alpha, beta) {
        Ok(p) => {
            let (plus, abs_minus) = jacobi_endpoint_values(p, n);
            *out_plus = plus;
            *out_abs_minus = abs_minus;
            GegenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Squared weighted L² norm h_n of P_n^{(α,β)}.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_norm_squared(
    alpha: f64,
    beta: f64,
    n: usize,
    out: *mut f64,
) -> GegenStatus {
    match jacobi_params(alpha, beta) {
        Ok(p) => write_out(out, jacobi_norm_squared(p, n)),
        Err(e) => status_of(&e),
    }
}

/// Jacobi weight (1−t)^α (1+t)^β.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_weight(
    alpha: f64,
    beta: f64,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, jacobi_params(alpha, beta).and_then(|p| jacobi_weight(p, t)))
}

/// Generalized Gegenbauer polynomial C_n^{(λ,μ)}(t).
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_gengeg_value(
    lambda: f64,
    mu: f64,
    n: usize,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, gegen_params(lambda, mu).and_then(|p| gengeg_eval(p, n, t)))
}

/// Orthonormal generalized Gegenbauer polynomial C̃_n^{(λ,μ)}(t).
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_gengeg_orthonormal_value(
    lambda: f64,
    mu: f64,
    n: usize,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, gegen_params(lambda, mu).and_then(|p| gengeg_orthonormal_eval(p, n, t)))
}

/// Leading coefficient ã_n of the orthonormal family.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_orthonormal_coefficient(
    lambda: f64,
    mu: f64,
    n: usize,
    out: *mut f64,
) -> GegenStatus {
    match gegen_params(lambda, mu) {
        Ok(p) => write_out(out, orthonormal_coefficient(p, n).value),
        Err(e) => status_of(&e),
    }
}

/// Weight |t|^{2μ} (1−t²)^{λ−1/2}.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_gengeg_weight(
    lambda: f64,
    mu: f64,
    t: f64,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, gegen_params(lambda, mu).and_then(|p| gengeg_weight(p, t)))
}

/// C_n^{(λ,μ)}(t) through the integral connecting it to C_n^{λ+μ}, using an
/// m-point rule; requires μ > 0 and m ≥ n/2 + 8.
///
/// # Safety
/// `out` must be a valid pointer to a double.
#[no_mangle]
pub unsafe extern "C" fn gegen_connection_value(
    lambda: f64,
    mu: f64,
    n: usize,
    t: f64,
    m: usize,
    out: *mut f64,
) -> GegenStatus {
    write_result(out, gegen_params(lambda, mu).and_then(|p| connection_eval(p, n, t, m)))
}

/// max_{[−1,1]} |P_n^{(α,β)}| together with a maximizing abscissa.
///
/// # Safety
/// `out_value` and `out_argmax` must be valid pointers to doubles.
#[no_mangle]
pub unsafe extern "C" fn gegen_jacobi_sup_norm(
    alpha: f64,
    beta: f64,
    n: usize,
    out_value: *mut f64,
    out_argmax: *mut f64,
) -> GegenStatus {
    if out_value.is_null() || out_argmax.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    match jacobi_params(alpha, beta).and_then(|p| jacobi_sup_norm(p, n)) {
        Ok(est) => {
            *out_value = est.value;
            *out_argmax = est.argmax_t;
            GegenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Opaque Gauss–Jacobi quadrature rule.
pub struct GegenQuadrature {
    rule: Arc<QuadratureRule>,
}

/// Builds the m-point Gauss–Jacobi rule for (α, β) and stores a handle in
/// `*out`. The handle must be released with `gegen_quadrature_free`.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_new(
    alpha: f64,
    beta: f64,
    m: usize,
    out: *mut *mut GegenQuadrature,
) -> GegenStatus {
    if out.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    match jacobi_params(alpha, beta).and_then(|p| gauss_jacobi_rule(p, m)) {
        Ok(rule) => {
            *out = Box::into_raw(Box::new(GegenQuadrature { rule }));
            GegenStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of nodes in the rule; 0 for a null handle.
///
/// # Safety
/// `rule` must be null or a handle from `gegen_quadrature_new`.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_len(rule: *const GegenQuadrature) -> usize {
    if rule.is_null() {
        return 0;
    }
    (*rule).rule.len()
}

/// Copies the nodes into `buf`, which must hold at least `len` doubles;
/// `len` must equal the rule size.
///
/// # Safety
/// `rule` must be a live handle and `buf` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_nodes(
    rule: *const GegenQuadrature,
    buf: *mut f64,
    len: usize,
) -> GegenStatus {
    copy_rule_slice(rule, buf, len, |r| &r.nodes)
}

/// Copies the weights into `buf`, which must hold at least `len` doubles;
/// `len` must equal the rule size.
///
/// # Safety
/// `rule` must be a live handle and `buf` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_weights(
    rule: *const GegenQuadrature,
    buf: *mut f64,
    len: usize,
) -> GegenStatus {
    copy_rule_slice(rule, buf, len, |r| &r.weights)
}

unsafe fn copy_rule_slice(
    rule: *const GegenQuadrature,
    buf: *mut f64,
    len: usize,
    pick: impl Fn(&QuadratureRule) -> &Vec<f64>,
) -> GegenStatus {
    if rule.is_null() || buf.is_null() {
        set_error("null pointer");
        return GegenStatus::NullPointer;
    }
    let data = pick(&(*rule).rule);
    if data.len() != len {
        set_error("buffer length does not match the rule size");
        return GegenStatus::DomainError;
    }
    std::ptr::copy_nonoverlapping(data.as_ptr(), buf, len);
    GegenStatus::Ok
}

/// Approximates ∫ f(t) (1−t)^α (1+t)^β dt over [−1, 1]. `f` receives each
/// node and `ctx` verbatim.
///
/// # Safety
/// `rule` must be a live handle, `out` writable, and `f` safe to call with
/// `ctx` from this thread.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_integrate(
    rule: *const GegenQuadrature,
    f: Option<extern "C" fn(t: f64, ctx: *mut c_void) -> f64>,
    ctx: *mut c_void,
    out: *mut f64,
) -> GegenStatus {
    let Some(f) = f else {
        set_error("null integrand");
        return GegenStatus::NullPointer;
    };
    if rule.is_null() {
        set_error("null rule handle");
        return GegenStatus::NullPointer;
    }
    write_result(out, integrate(&(*rule).rule, |t| f(t, ctx)))
}

/// Releases a quadrature handle; null is a no-op.
///
/// # Safety
/// `rule` must be null or a handle that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn gegen_quadrature_free(rule: *mut GegenQuadrature) {
    if !rule.is_null() {
        drop(Box::from_raw(rule));
    }
}

/// Runs the sup-norm sweep for C̃_n^{(λ,μ)} over a log-spaced grid in
/// [n_min, n_max], fits the growth exponent, and stores the JSON report in
/// `*out`. Pass non-finite or non-positive tolerances to use the defaults.
/// The string must be released with `gegen_string_free`.
///
/// # Safety
/// `out` must be a valid pointer to a string slot.
#[no_mangle]
pub unsafe extern "C" fn gegen_theorem1_report_json(
    lambda: f64,
    mu: f64,
    n_min: usize,
    n_max: usize,
    samples: usize,
    slope_tol: f64,
    band_tol: f64,
    out: *mut *mut c_char,
) -> GegenStatus {
    if out.is_null() {
        set_error("null out pointer");
        return GegenStatus::NullPointer;
    }
    let slope = if slope_tol.is_finite() && slope_tol > 0.0 { slope_tol } else { DEFAULT_SLOPE_TOL };
    let band = if band_tol.is_finite() && band_tol > 0.0 { band_tol } else { DEFAULT_BAND_TOL };
    let report = match gegen_params(lambda, mu)
        .and_then(|p| verify_theorem1(p, n_min, n_max, samples, slope, band))
    {
        Ok(r) => r,
        Err(e) => return status_of(&e),
    };
    let json = match serde_json::to_string_pretty(&report) {
        Ok(j) => j,
        Err(e) => {
            set_error(&e.to_string());
            return GegenStatus::ComputationError;
        }
    };
    *out = CString::new(json).unwrap().into_raw();
    GegenStatus::Ok
}

/// Releases a string returned by this library; null is a no-op.
///
/// # Safety
/// `s` must be null or a string from this library that has not already been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gegen_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
