#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qfr {

struct QuadResult {
    double value = 0.0;
    double err = 0.0;  // absolute error estimate
    long evals = 0;    // integrand evaluation count
};

// Thrown when the subdivision budget is exhausted before the tolerance is
// met. Carries the best estimate obtained so far.
struct ConvergenceError : std::runtime_error {
    QuadResult best;
    ConvergenceError(const std::string& msg, QuadResult r)
        : std::runtime_error(msg), best(r) {}
};

struct QuadOptions {
    double tol_rel = 1e-9;
    double tol_abs = 0.0;
    int max_intervals = 4000;
    // Interior points at which the initial partition is cut. Points outside
    // (a, b) are ignored. Used to force resolution of known narrow features.
    std::vector<double> presplit;
};

// Adaptive Gauss-Kronrod 7/15 with global interval refinement.
// Error contract: |value - integral| <= max(tol_rel*|value|, tol_abs) with
// high confidence. Throws ConvergenceError when max_intervals is reached
// with the tolerance unmet.
QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, double tol_rel, double tol_abs = 0.0);
QuadResult integrate_1d(const std::function<double(double)>& f, double a,
                        double b, const QuadOptions& opt);

// A near-singular feature of a 3-d integrand: location and per-axis scales.
struct SingularityHint {
    std::array<double, 3> center{};
    std::array<double, 3> widths{};  // strictly positive
};

// Nested adaptive cubature over a finite box: axis 2 outermost, axis 0
// innermost. The initial partition of each axis resolves the hint widths.
// Semi-infinite tails must be truncated by the caller.
QuadResult integrate_3d(
    const std::function<double(const std::array<double, 3>&)>& f,
    const std::array<double, 3>& lo, const std::array<double, 3>& hi,
    const std::optional<SingularityHint>& hint, double tol_rel);

// Bracketing root finder (Illinois-damped false position with bisection
// safeguard). Requires f(a)*f(b) < 0, else throws BracketError. Converges
// to |interval| <= tol; exact on linear functions after one secant step.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double tol);

struct MaxResult {
    double x = 0.0;
    double value = 0.0;
    bool on_boundary = false;
};

// Coarse linear scan of `scan_points` samples followed by golden-section
// refinement around the best sample. For multimodal f the caller controls
// the scan density (or supplies its own grid via the overload).
MaxResult maximize_1d(const std::function<double(double)>& f, double a,
                      double b, double tol, int scan_points = 128);
MaxResult maximize_1d(const std::function<double(double)>& f,
                      std::span<const double> grid, double tol);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Least-squares line through (s, F) pairs; the caller passes s = ln(1/eps)
// or ln(eta) as needed. Requires >= 3 points and non-degenerate abscissae.
LineFit fit_log_slope(std::span<const std::pair<double, double>> points);

namespace detail {

// Kernel shared by the public entry points. The integrand returns
// {value, aux}: `aux` is a nonnegative per-point error density (used to
// propagate inner-quadrature error through nested integrals); it is
// integrated with absolute weights and added to the reported error, but
// does not drive subdivision.
struct CoreResult {
    double value = 0.0;
    double err = 0.0;  // quadrature estimate plus integrated aux
    long evals = 0;
    bool converged = true;
};

using Integrand2 = std::function<std::pair<double, double>(double)>;

CoreResult adaptive_core(const Integrand2& f, double a, double b,
                         const QuadOptions& opt);

}  // namespace detail

}  // namespace qfr
