#ifndef GEGEN_H
#define GEGEN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum GegenStatus {
  /**
   * Success.
   */
  GegenStatus_Ok = 0,
  /**
   * A parameter was outside the supported domain.
   */
  GegenStatus_DomainError = 1,
  /**
   * The computation could not be carried out at the requested accuracy.
   */
  GegenStatus_ComputationError = 2,
  /**
   * A required pointer argument was null.
   */
  GegenStatus_NullPointer = 3,
} GegenStatus;

/**
 * Opaque Gauss–Jacobi quadrature rule.
 */
typedef struct GegenQuadrature GegenQuadrature;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread, or null if no
 * error has occurred. The pointer stays valid until the next failing call
 * on the same thread; do not free it.
 */
const char *gegen_last_error_message(void);

/**
 * ln Γ(x) for x > 0.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_log_gamma(double x, double *out);

/**
 * Pochhammer symbol (q)_n.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_pochhammer(double q, uintptr_t n, double *out);

/**
 * Γ(a + n) / Γ(b + n) for a, b > 0.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_gamma_ratio(double a, double b, uintptr_t n, double *out);

/**
 * P_n^{(α,β)}(t).
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_jacobi_value(double alpha, double beta, uintptr_t n, double t, double *out);

/**
 * Fills `out[0..=n_max]` with P_0^{(α,β)}(t), …, P_{n_max}^{(α,β)}(t).
 *
 * # Safety
 * `out` must point to at least `n_max + 1` writable doubles.
 */
enum GegenStatus gegen_jacobi_eval(double alpha,
                                   double beta,
                                   uintptr_t n_max,
                                   double t,
                                   double *out);

/**
 * d/dt P_n^{(α,β)}(t).
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_jacobi_derivative(double alpha,
                                         double beta,
                                         uintptr_t n,
                                         double t,
                                         double *out);

/**
 * P_n^{(α,β)}(1) and |P_n^{(α,β)}(−1)|.
 *
 * # Safety
 * `out_plus` and `out_abs_minus` must be valid pointers to doubles.
 */
enum GegenStatus gegen_jacobi_endpoint_values(double alpha,
                                              double beta,
                                              uintptr_t n,
                                              double *out_plus,
                                              double *out_abs_minus);

/**
 * Squared weighted L² norm h_n of P_n^{(α,β)}.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_jacobi_norm_squared(double alpha, double beta, uintptr_t n, double *out);

/**
 * Jacobi weight (1−t)^α (1+t)^β.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_jacobi_weight(double alpha, double beta, double t, double *out);

/**
 * Generalized Gegenbauer polynomial C_n^{(λ,μ)}(t).
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_gengeg_value(double lambda, double mu, uintptr_t n, double t, double *out);

/**
 * Orthonormal generalized Gegenbauer polynomial C̃_n^{(λ,μ)}(t).
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_gengeg_orthonormal_value(double lambda,
                                                double mu,
                                                uintptr_t n,
                                                double t,
                                                double *out);

/**
 * Leading coefficient ã_n of the orthonormal family.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_orthonormal_coefficient(double lambda, double mu, uintptr_t n, double *out);

/**
 * Weight |t|^{2μ} (1−t²)^{λ−1/2}.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_gengeg_weight(double lambda, double mu, double t, double *out);

/**
 * C_n^{(λ,μ)}(t) through the integral connecting it to C_n^{λ+μ}, using an
 * m-point rule; requires μ > 0 and m ≥ n/2 + 8.
 *
 * # Safety
 * `out` must be a valid pointer to a double.
 */
enum GegenStatus gegen_connection_value(double lambda,
                                        double mu,
                                        uintptr_t n,
                                        double t,
                                        uintptr_t m,
                                        double *out);

/**
 * max_{[−1,1]} |P_n^{(α,β)}| together with a maximizing abscissa.
 *
 * # Safety
 * `out_value` and `out_argmax` must be valid pointers to doubles.
 */
enum GegenStatus gegen_jacobi_sup_norm(double alpha,
                                       double beta,
                                       uintptr_t n,
                                       double *out_value,
                                       double *out_argmax);

/**
 * Builds the m-point Gauss–Jacobi rule for (α, β) and stores a handle in
 * `*out`. The handle must be released with `gegen_quadrature_free`.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum GegenStatus gegen_quadrature_new(double alpha,
                                      double beta,
                                      uintptr_t m,
                                      struct GegenQuadrature **out);

/**
 * Number of nodes in the rule; 0 for a null handle.
 *
 * # Safety
 * `rule` must be null or a handle from `gegen_quadrature_new`.
 */
uintptr_t gegen_quadrature_len(const struct GegenQuadrature *rule);

/**
 * Copies the nodes into `buf`, which must hold at least `len` doubles;
 * `len` must equal the rule size.
 *
 * # Safety
 * `rule` must be a live handle and `buf` writable for `len` doubles.
 */
enum GegenStatus gegen_quadrature_nodes(const struct GegenQuadrature *rule,
                                        double *buf,
                                        uintptr_t len);

/**
 * Copies the weights into `buf`, which must hold at least `len` doubles;
 * `len` must equal the rule size.
 *
 * # Safety
 * `rule` must be a live handle and `buf` writable for `len` doubles.
 */
enum GegenStatus gegen_quadrature_weights(const struct GegenQuadrature *rule,
                                          double *buf,
                                          uintptr_t len);

/**
 * Approximates ∫ f(t) (1−t)^α (1+t)^β dt over [−1, 1]. `f` receives each
 * node and `ctx` verbatim.
 *
 * # Safety
 * `rule` must be a live handle, `out` writable, and `f` safe to call with
 * `ctx` from this thread.
 */
enum GegenStatus gegen_quadrature_integrate(const struct GegenQuadrature *rule,
                                            double (*f)(double t, void *ctx),
                                            void *ctx,
                                            double *out);

/**
 * Releases a quadrature handle; null is a no-op.
 *
 * # Safety
 * `rule` must be null or a handle that has not already been freed.
 */
void gegen_quadrature_free(struct GegenQuadrature *rule);

/**
 * Runs the sup-norm sweep for C̃_n^{(λ,μ)} over a log-spaced grid in
 * [n_min, n_max], fits the growth exponent, and stores the JSON report in
 * `*out`. Pass non-finite or non-positive tolerances to use the defaults.
 * The string must be released with `gegen_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer to a string slot.
 */
enum GegenStatus gegen_theorem1_report_json(double lambda,
                                            double mu,
                                            uintptr_t n_min,
                                            uintptr_t n_max,
                                            uintptr_t samples,
                                            double slope_tol,
                                            double band_tol,
                                            char **out);

/**
 * Releases a string returned by this library; null is a no-op.
 *
 * # Safety
 * `s` must be null or a string from this library that has not already been
 * freed.
 */
void gegen_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEGEN_H */
