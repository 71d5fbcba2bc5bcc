#include "qfr/friction.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qfr/errors.hpp"
#include "qfr/numerics.hpp"
#include "qfr/stability.hpp"

namespace qfr {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kPrefactor = 1.0 / (2.0 * kPi * kPi * kPi);

cplx refl(double w, double Gamma) {
    return 1.0 / cplx(w * w - 1.0, 2.0 * Gamma * w);
}

double coth(double t) {
    if (t > 20.0) return 1.0;
    if (t < -20.0) return -1.0;
    return 1.0 / std::tanh(t);
}

double integrand_exact_impl(double w, double x, double y, double eta,
                            double Gamma) {
    // The x = 0 line contributes nothing (overall factor x); at the corner
    // x = y = 0 the raw expression is 0/0 with limit 0.
    if (x == 0.0) return 0.0;
    const double m = std::sqrt(x * x + y * y);
    const double E = std::exp(-2.0 * m);
    if (E == 0.0) return 0.0;
    const double a = eta * x / 2.0;
    const cplx Rp = refl(w + a, Gamma);
    const cplx Rm = refl(w - a, Gamma);
    const double num = std::imag(Rm) * std::imag(Rp) * E;
    const double den = std::norm(1.0 - Rm * Rp * E);
    return kPrefactor * x * num / den;
}

double integrand_thermal_impl(double w, double x, double y, double eta,
                              double Gamma, double theta) {
    if (x == 0.0) return 0.0;
    const double m = std::sqrt(x * x + y * y);
    const double E = std::exp(-2.0 * m);
    if (E == 0.0) return 0.0;
    const double a = eta * x / 2.0;
    const double wp = w + a;
    const double wm = w - a;
    const cplx Dp(wp * wp - 1.0, 2.0 * Gamma * wp);
    const cplx Dm(wm * wm - 1.0, 2.0 * Gamma * wm);
    const cplx Rp = 1.0 / Dp;
    const cplx Rm = 1.0 / Dm;
    // Im R(v) * coth(v/(2 theta)); the raw quotient is 0 * inf at v = 0,
    // the limit is -4 Gamma theta / |D(0)|^2.
    auto weighted = [&](double v, const cplx& D) {
        if (std::abs(v) < 1e-8) return -4.0 * Gamma * theta / std::norm(D);
        return (-2.0 * Gamma * v / std::norm(D)) * coth(v / (2.0 * theta));
    };
    const double num =
        0.5 * (weighted(wp, Dp) * std::imag(Rm) - std::imag(Rp) * weighted(wm, Dm));
    const double den = std::norm(1.0 - Rm * Rp * E);
    return kPrefactor * x * E * num / den;
}

void push_scaled(std::vector<double>& cuts, double center, double width,
                 std::initializer_list<double> ks) {
    cuts.push_back(center);
    for (double k : ks) {
        cuts.push_back(center - k * width);
        cuts.push_back(center + k * width);
    }
}

// Nested adaptive evaluation of the force integral: outer y (folded to
// [0, Ymax]), middle x, inner w. The initial partition of each axis is cut
// at the known narrow features: the near-marginal mode at w ~ 0 of width
// |Gamma - g|, the reflection poles at w± = ±1 of width ~Gamma, the
// unstable band |x - 2/eta| < f(y)/eta, and the y scale sqrt(eps * 2/eta)
// of the near-threshold resonance.
struct Engine {
    double eta, Gamma, theta, tol, w_shift;
    bool thermal;
    double x0, Xmax, Ymax, Wmax, sigma_y;

    mutable long evals = 0;

    Engine(double eta_, double Gamma_, double theta_, double tol_,
           double shift)
        : eta(eta_), Gamma(Gamma_), theta(theta_), tol(tol_), w_shift(shift) {
        thermal = theta > 0.0;
        x0 = 2.0 / eta;
        // Tail bounds: the integrand carries e^{-2 sqrt(x^2+y^2)}, so 15
        // e-folds past the resonance shell keep the relative truncation
        // error below 1e-8.
        Xmax = x0 + 15.0;
        Ymax = std::min(std::sqrt(30.0 * x0 + 225.0), x0 + 15.0);
        Wmax = eta * Xmax / 2.0 + 40.0 * theta + 10.0;
        const double eps_w = Gamma / weak_gamma_c(eta) - 1.0;
        sigma_y = std::clamp(std::sqrt(std::max(eps_w, 1e-8) * x0), 1e-8,
                             Ymax / 2.0);
    }

    std::vector<double> w_cuts(double x, double y) const {
        std::vector<double> cuts;
        const double a = eta * x / 2.0;
        const double m = std::sqrt(x * x + y * y);
        const double e1 = std::exp(-m);
        const double gw = std::max(Gamma, 1e-13);
        if (e1 > 0.0) {
            const double t = (2.0 - eta * x) / e1;
            if (std::abs(t) <= 1.0) {
                const double g = 0.5 * e1 * std::sqrt(std::max(1.0 - t * t, 0.0));
                const double w1 = std::max(std::abs(Gamma - g), 1e-13);
                push_scaled(cuts, 0.0, w1, {1.0, 4.0, 16.0, 64.0});
                push_scaled(cuts, 0.0, Gamma + g, {1.0, 4.0});
            } else {
                const double s = 0.5 * e1 * std::sqrt(t * t - 1.0);
                push_scaled(cuts, s, gw, {1.0, 4.0});
                push_scaled(cuts, -s, gw, {1.0, 4.0});
                cuts.push_back(0.0);
            }
        }
        push_scaled(cuts, 1.0 - a, gw, {2.0, 8.0});
        push_scaled(cuts, a - 1.0, gw, {2.0, 8.0});
        if (thermal) {
            push_scaled(cuts, 1.0 + a, gw, {2.0, 8.0});
            push_scaled(cuts, -1.0 - a, gw, {2.0, 8.0});
            const double tw = std::max(theta, 1e-6);
            push_scaled(cuts, a, tw, {1.0, 4.0});
            push_scaled(cuts, -a, tw, {1.0, 4.0});
        }
        if (w_shift != 0.0) {
            for (double& c : cuts) c += w_shift;
        }
        return cuts;
    }

    std::vector<double> x_cuts(double y) const {
        std::vector<double> cuts;
        const double fy = std::exp(-std::sqrt(x0 * x0 + y * y));
        const double hw = std::max(fy / eta, 2e-12);
        push_scaled(cuts, x0, hw / 2.0, {1.0, 4.0, 16.0, 64.0});
        cuts.push_back(1.0 / eta);  // w+ pole enters the window above this x
        return cuts;
    }

    std::vector<double> y_cuts() const {
        std::vector<double> cuts;
        for (double k : {1.0, 4.0, 16.0, 64.0}) cuts.push_back(k * sigma_y);
        cuts.push_back(1.0);
        return cuts;
    }

    detail::CoreResult run() const {
        QuadOptions wopt, xopt, yopt;
        wopt.tol_rel = 0.12 * tol;
        wopt.max_intervals = 1600;
        xopt.tol_rel = 0.25 * tol;
        xopt.max_intervals = 1200;
        yopt.tol_rel = 0.45 * tol;
        yopt.max_intervals = 800;

        auto xline = [&](double y) -> std::pair<double, double> {
            auto wline = [&](double x) -> std::pair<double, double> {
                double lo, hi;
                if (thermal) {
                    lo = -Wmax;
                    hi = Wmax;
                } else {
                    const double a = eta * x / 2.0;
                    lo = -a + w_shift;
                    hi = a + w_shift;
                }
                if (!(hi - lo > 1e-300)) return {0.0, 0.0};
                QuadOptions o = wopt;
                o.presplit = w_cuts(x, y);
                auto f = [&](double w) -> std::pair<double, double> {
                    const double v =
                        thermal
                            ? integrand_thermal_impl(w, x, y, eta, Gamma, theta)
                            : integrand_exact_impl(w - w_shift, x, y, eta, Gamma);
                    return {v, 0.0};
                };
                auto r = detail::adaptive_core(f, lo, hi, o);
                evals += r.evals;
                return {r.value, r.err};
            };
            QuadOptions o = xopt;
            o.presplit = x_cuts(y);
            auto r = detail::adaptive_core(wline, 0.0, Xmax, o);
            return {r.value, r.err};
        };

        QuadOptions o = yopt;
        o.presplit = y_cuts();
        detail::CoreResult r = detail::adaptive_core(xline, 0.0, Ymax, o);
        r.value *= 2.0;  // integrand is even in y
        r.err *= 2.0;
        r.evals = evals;
        r.converged = r.err <= tol * std::abs(r.value);
        return r;
    }
};

ForceResult::Meta make_meta(double eta, double Gamma, double theta) {
    ForceResult::Meta m;
    m.eta = eta;
    m.Gamma = Gamma;
    m.theta = theta;
    m.epsilon = Gamma / weak_gamma_c(eta) - 1.0;
    return m;
}

ForceResult exact_impl(double eta, double Gamma, double theta, double tol_rel,
                       double w_shift, Method method) {
    if (!(eta > 0.0))
        throw std::invalid_argument("force_exact: eta must be > 0");
    if (!(Gamma >= 0.0))
        throw std::invalid_argument("force_exact: Gamma must be >= 0");
    if (!(tol_rel > 0.0))
        throw std::invalid_argument("force_exact: tol must be > 0");
    if (!is_stable(eta, Gamma)) {
        throw InstabilityError(
            "force_exact: unstable parameters (no stationary state); "
            "critical Gamma = " +
            std::to_string(critical_gamma(eta).gamma_c));
    }
    Engine engine(eta, Gamma, theta, tol_rel, w_shift);
    detail::CoreResult r = engine.run();
    ForceResult out;
    out.value = r.value;
    out.method = method;
    out.err_estimate = r.err;
    out.meta = make_meta(eta, Gamma, theta);
    if (!r.converged) {
        throw ConvergenceError("force_exact: tolerance not reached",
                               QuadResult{r.value, r.err, r.evals});
    }
    return out;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::exact_thermal: return "exact_thermal";
        case Method::deep_stable: return "deep_stable";
        case Method::near_threshold: return "near_threshold";
        case Method::log_asymptote: return "log_asymptote";
        case Method::thermal_asymptote: return "thermal_asymptote";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    for (Method m : {Method::exact, Method::exact_thermal, Method::deep_stable,
                     Method::near_threshold, Method::log_asymptote,
                     Method::thermal_asymptote}) {
        if (name == method_name(m)) return m;
    }
    throw std::invalid_argument("unknown force method: " + name);
}

std::complex<double> reflection(double w, double Gamma) {
    const cplx den(w * w - 1.0, 2.0 * Gamma * w);
    if (den == cplx(0.0, 0.0)) {
        throw PoleError("reflection: pole at Gamma = 0, w = +-1");
    }
    return 1.0 / den;
}

double integrand_exact(double w, double x, double y, double eta,
                       double Gamma) {
    return integrand_exact_impl(w, x, y, eta, Gamma);
}

ForceResult force_exact(double eta, double Gamma, double tol_rel) {
    return exact_impl(eta, Gamma, 0.0, tol_rel, 0.0, Method::exact);
}

ForceResult force_exact_thermal(double eta, double Gamma, double theta,
                                double tol_rel) {
    if (!(theta >= 0.0))
        throw std::invalid_argument("force_exact_thermal: theta must be >= 0");
    const double th = theta < 1e-12 ? 0.0 : theta;
    return exact_impl(eta, Gamma, th, tol_rel, 0.0, Method::exact_thermal);
}

ForceResult force_deep_stable(double eta, double Gamma) {
    if (!(eta > 0.0))
        throw std::invalid_argument("force_deep_stable: eta must be > 0");
    if (!(Gamma >= 0.0))
        throw std::invalid_argument("force_deep_stable: Gamma must be >= 0");
    const double gcw = weak_gamma_c(eta);
    if (Gamma <= 10.0 * gcw || Gamma >= 0.3) {
        std::cerr << "force_deep_stable: warning: Gamma = " << Gamma
                  << " is outside the deep-stable validity window ("
                  << 10.0 * gcw << ", 0.3)\n";
    }
    ForceResult out;
    out.value = -(15.0 / (64.0 * kPi * kPi)) * eta * eta * eta * Gamma * Gamma;
    out.method = Method::deep_stable;
    out.err_estimate = 0.0;
    out.meta = make_meta(eta, Gamma, 0.0);
    return out;
}

ForceResult force_near_threshold(double eta, double Gamma, double tol_rel) {
    if (!(eta > 0.0))
        throw std::invalid_argument("force_near_threshold: eta must be > 0");
    const double gcw = weak_gamma_c(eta);
    if (!(Gamma > gcw)) {
        throw std::domain_error(
            "force_near_threshold: requires Gamma > (1/2) e^{-2/eta}");
    }
    const double x0 = 2.0 / eta;
    // Support cutoff where f^2 drops below 1e-16 f(0)^2.
    const double reach = -std::log(1e-8);
    const double Ystar = std::sqrt((x0 + reach) * (x0 + reach) - x0 * x0);
    const double eps = Gamma / gcw - 1.0;

    auto f = [x0, Gamma](double Y) {
        const double fy = std::exp(-std::sqrt(x0 * x0 + Y * Y));
        const double u = fy / (2.0 * Gamma);
        return std::asin(u) / std::sqrt(1.0 - u * u) * fy * fy;
    };
    QuadOptions opt;
    opt.tol_rel = tol_rel;
    opt.max_intervals = 4000;
    const double yc = 2.0 * std::sqrt(std::max(eps, 1e-12) / eta);
    for (double k : {1.0, 4.0, 16.0, 64.0}) opt.presplit.push_back(k * yc);
    QuadResult q = integrate_1d(f, 0.0, Ystar, opt);

    const double scale = 1.0 / (2.0 * kPi * kPi * eta * eta);
    ForceResult out;
    out.value = -scale * 2.0 * q.value;  // even in Y
    out.method = Method::near_threshold;
    out.err_estimate = scale * 2.0 * q.err;
    out.meta = make_meta(eta, Gamma, 0.0);
    return out;
}

ForceResult force_log_asymptote(double eta, double epsilon) {
    if (!(eta > 0.0))
        throw std::invalid_argument("force_log_asymptote: eta must be > 0");
    if (!(epsilon > 0.0))
        throw std::domain_error("force_log_asymptote: requires epsilon > 0");
    if (std::exp(-4.0 / eta) >= 0.1) {
        std::cerr << "force_log_asymptote: warning: eta = " << eta
                  << " is outside the weak-dissipation regime\n";
    }
    ForceResult out;
    out.value = -(1.0 / (2.0 * kPi * std::numbers::sqrt2)) *
                std::pow(eta, -2.5) * std::exp(-4.0 / eta) *
                std::log(1.0 / epsilon);
    out.method = Method::log_asymptote;
    out.err_estimate = 0.0;
    out.meta = make_meta(eta, weak_gamma_c(eta) * (1.0 + epsilon), 0.0);
    out.meta.epsilon = epsilon;
    return out;
}

ForceResult force_thermal_asymptote(double eta, double epsilon, double theta) {
    if (!(theta >= 0.0))
        throw std::invalid_argument(
            "force_thermal_asymptote: theta must be >= 0");
    ForceResult out = force_log_asymptote(eta, epsilon);
    const double factor = theta > 0.0 ? coth(1.0 / (2.0 * theta)) : 1.0;
    out.value *= factor;
    out.method = Method::thermal_asymptote;
    out.meta.theta = theta;
    return out;
}

namespace detail {

ForceResult force_exact_shifted(double eta, double Gamma, double tol_rel,
                                double w_shift) {
    return exact_impl(eta, Gamma, 0.0, tol_rel, w_shift, Method::exact);
}

}  // namespace detail

}  // namespace qfr
