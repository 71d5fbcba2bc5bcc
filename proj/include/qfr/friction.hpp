#pragma once

#include <complex>
#include <string>

namespace qfr {

enum class Method {
    exact,
    exact_thermal,
    deep_stable,
    near_threshold,
    log_asymptote,
    thermal_asymptote,
};

const char* method_name(Method m);
// Throws std::invalid_argument on an unknown name.
Method method_from_name(const std::string& name);

// Friction force per unit area in units of F0 = hbar omega_s / d^3.
// Negative for every stable parameter point (drag opposes motion).
struct ForceResult {
    double value = 0.0;
    Method method = Method::exact;
    double err_estimate = 0.0;  // absolute; 0 for closed forms
    struct Meta {
        double eta = 0.0;
        double Gamma = 0.0;
        double theta = 0.0;
        double epsilon = 0.0;  // Gamma / weak_gamma_c(eta) - 1
    } meta;
};

// Quasi-static reflection coefficient 1 / (w (w + 2i Gamma) - 1), w real in
// units of omega_s. Throws PoleError exactly on the lossless pole
// (Gamma = 0, w = +-1).
std::complex<double> reflection(double w, double Gamma);

// Zero-temperature integrand, normalized so that
//   F/F0 = Int dy Int_0^inf dx Int_{-eta x/2}^{+eta x/2} dw integrand_exact.
double integrand_exact(double w, double x, double y, double eta, double Gamma);

// Adaptive evaluation of the full force integral. Requires a stable point
// (else InstabilityError). err_estimate <= tol_rel * |value| on success;
// ConvergenceError (carrying the best estimate) otherwise.
ForceResult force_exact(double eta, double Gamma, double tol_rel = 1e-3);

// Finite temperature: same integrand weighted by the smoothing factor
//   (1/2) [coth(w+/(2 theta)) - coth(w-/(2 theta))]
// with the w range extended beyond the zero-temperature window. Reduces to
// force_exact as theta -> 0.
ForceResult force_exact_thermal(double eta, double Gamma, double theta,
                                double tol_rel = 1e-3);

// Deep-stable closed form -(15 / (64 pi^2)) eta^3 Gamma^2 (cubic in the
// sliding speed). Warns on stderr outside Gamma in (10 weak_gamma_c, 0.3).
ForceResult force_deep_stable(double eta, double Gamma);

// Near-threshold 1-d reduction
//   F/F0 = -(1/(2 pi^2 eta^2)) Int dY arcsin(u)/sqrt(1-u^2) f(Y)^2,
//   f(Y) = exp(-sqrt((2/eta)^2 + Y^2)),  u = f/(2 Gamma).
// Requires Gamma > weak_gamma_c(eta) (else domain error).
ForceResult force_near_threshold(double eta, double Gamma,
                                 double tol_rel = 1e-8);

// Leading logarithmic divergence
//   F/F0 = -(1/(2 pi sqrt(2))) eta^{-5/2} e^{-4/eta} ln(1/eps).
ForceResult force_log_asymptote(double eta, double epsilon);

// Log asymptote times the thermal factor coth(1/(2 theta)).
ForceResult force_thermal_asymptote(double eta, double epsilon, double theta);

namespace detail {

// Test hook: evaluates the exact force with the w integration variable
// shifted by `w_shift` (and the window shifted to match). Galilean
// invariance makes the result independent of the shift.
ForceResult force_exact_shifted(double eta, double Gamma, double tol_rel,
                                double w_shift);

}  // namespace detail

}  // namespace qfr
