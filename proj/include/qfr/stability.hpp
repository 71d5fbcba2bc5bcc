#pragma once

#include <optional>

namespace qfr {

// One point of the stability-instability phase boundary.
struct BoundaryPoint {
    double eta = 0.0;
    double gamma_c = 0.0;    // critical reduced dissipation
    double beta_star = 0.0;  // extremizing k_x / k_0
};

// Marginal dissipation for a single wavenumber ratio beta,
//   Gamma(beta) = sqrt( (e^{-4|beta|/eta} - (1 - beta^2)^2) / (4 beta^2) ),
// or nullopt when the radicand is negative (that beta cannot destabilize).
// beta = 0 is a domain error; the limit is handled by critical_gamma.
std::optional<double> gamma_of_beta(double beta, double eta);

// Phase boundary: supremum of gamma_of_beta over beta > 0, with the
// extremizer. The system is stable iff Gamma > gamma_c (strict).
BoundaryPoint critical_gamma(double eta);

// Inverse boundary: the unique eta with critical_gamma(eta) = Gamma.
// Returns nullopt for Gamma >= 1/sqrt(2) (always stable) and 0.0 for
// Gamma = 0 (unstable at any velocity).
std::optional<double> critical_eta(double Gamma);

bool is_stable(double eta, double Gamma);

// Weak-dissipation threshold Gamma_c = (1/2) e^{-2/eta}.
double weak_gamma_c(double eta);

// Criticality distance eps = Gamma / weak_gamma_c(eta) - 1. Warns on
// stderr outside the weak-dissipation regime (e^{-4/eta} >= 0.1).
double epsilon_of(double Gamma, double eta);

}  // namespace qfr
