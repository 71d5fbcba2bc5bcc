#include "qfr/stability.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qfr/numerics.hpp"

namespace qfr {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

double gamma_sq_of_beta(double beta, double eta) {
    const double b = std::abs(beta);
    const double one_minus_b2 = 1.0 - b * b;
    return (std::exp(-4.0 * b / eta) - one_minus_b2 * one_minus_b2) /
           (4.0 * b * b);
}

// Mixed log + linear scan grid over beta in (0, 3], seeded with the two
// candidate extremum regions: the unstable band around beta = 1, whose
// half-width (1/2) e^{-2/eta} is far below any fixed grid spacing at small
// eta, and the strong-dissipation maximum near (2/eta)^(1/3).
std::vector<double> boundary_scan_grid(double eta) {
    std::vector<double> grid;
    grid.reserve(340);
    const double lo = 1e-6, hi = 3.0;
    for (int i = 0; i < 160; ++i) {
        grid.push_back(lo * std::pow(hi / lo, i / 159.0));
    }
    for (int i = 0; i < 140; ++i) {
        grid.push_back(0.01 + (hi - 0.01) * i / 139.0);
    }
    const double half_band = 0.5 * std::exp(-2.0 / eta);
    for (double k : {-1.5, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 1.5}) {
        grid.push_back(1.0 + k * half_band);
    }
    const double beta_strong = std::cbrt(2.0 / eta);
    for (double k : {0.5, 0.75, 1.0, 1.5, 2.0}) {
        const double b = k * beta_strong;
        if (b > lo && b < hi) grid.push_back(b);
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

}  // namespace

double weak_gamma_c(double eta) { return 0.5 * std::exp(-2.0 / eta); }

std::optional<double> gamma_of_beta(double beta, double eta) {
    if (beta == 0.0)
        throw std::domain_error("gamma_of_beta: beta = 0 is singular");
    if (!(eta > 0.0))
        throw std::invalid_argument("gamma_of_beta: eta must be > 0");
    const double g2 = gamma_sq_of_beta(beta, eta);
    if (!(g2 >= 0.0)) return std::nullopt;
    return std::sqrt(g2);
}

BoundaryPoint critical_gamma(double eta) {
    if (!(eta > 0.0))
        throw std::invalid_argument("critical_gamma: eta must be > 0");
    const std::vector<double> grid = boundary_scan_grid(eta);
    auto objective = [eta](double b) {
        const double g2 = gamma_sq_of_beta(b, eta);
        return g2 >= 0.0 ? g2 : -std::numeric_limits<double>::infinity();
    };
    MaxResult m = maximize_1d(objective, grid, 1e-12);
    BoundaryPoint p;
    p.eta = eta;
    p.beta_star = m.x;
    p.gamma_c = m.value > 0.0 ? std::sqrt(m.value) : 0.0;
    return p;
}

std::optional<double> critical_eta(double Gamma) {
    if (!(Gamma >= 0.0))
        throw std::invalid_argument("critical_eta: Gamma must be >= 0");
    if (Gamma >= kInvSqrt2) return std::nullopt;
    if (Gamma == 0.0) return 0.0;  // unstable at any velocity

    // critical_gamma is nondecreasing in eta; bisect on log(eta).
    auto h = [Gamma](double t) { return critical_gamma(std::exp(t)).gamma_c - Gamma; };
    double t_lo = std::log(1e-3);
    while (h(t_lo) > 0.0) t_lo -= 2.0;
    double t_hi = std::log(2.0);
    for (int i = 0; i < 60 && h(t_hi) < 0.0; ++i) {
        t_hi += 1.0;
        if (t_hi > 30.0)
            throw std::runtime_error("critical_eta: bracket growth failed");
    }
    const double t = find_root(h, t_lo, t_hi, 1e-8);
    return std::exp(t);
}

bool is_stable(double eta, double Gamma) {
    if (!(eta > 0.0))
        throw std::invalid_argument("is_stable: eta must be > 0");
    if (!(Gamma >= 0.0))
        throw std::invalid_argument("is_stable: Gamma must be >= 0");
    if (Gamma >= kInvSqrt2) return true;
    return Gamma > critical_gamma(eta).gamma_c;
}

double epsilon_of(double Gamma, double eta) {
    if (!(eta > 0.0))
        throw std::invalid_argument("epsilon_of: eta must be > 0");
    if (std::exp(-4.0 / eta) >= 0.1) {
        std::cerr << "epsilon_of: warning: eta = " << eta
                  << " is outside the weak-dissipation regime\n";
    }
    return Gamma / weak_gamma_c(eta) - 1.0;
}

}  // namespace qfr
