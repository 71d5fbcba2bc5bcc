#pragma once

#include <complex>
#include <utility>

namespace qfr {

// Gap-normalized in-plane wavevector: x = k_x d, y = k_y d.
struct TransverseWavevector {
    double x = 0.0;
    double y = 0.0;

    double magnitude() const;              // |k| d
    double beta(double eta) const;         // k_x / k_0 = x * eta / 2
};

// The four complex mode frequencies, in units of omega_s. Labels are
// assigned by continuity from the lossless limit: a/b is the inner branch
// sign, plus/minus the outer one.
struct ModeRoots {
    std::complex<double> a_plus;
    std::complex<double> a_minus;
    std::complex<double> b_plus;
    std::complex<double> b_minus;
};

struct LosslessBranches {
    std::complex<double> a;
    std::complex<double> b;  // purely imaginary inside the unstable window
};

// Principal roots of the lossless coupled-plasmon dispersion relation,
//   w_{a,b} = sqrt(1 + beta^2 +- sqrt(e^{-2|k|d} + 4 beta^2)).
// The remaining two roots are their negatives.
LosslessBranches lossless_branches(const TransverseWavevector& k, double eta);

// Positive imaginary part of the lossless b root inside the instability
// window, zero outside. Units of omega_s.
double growth_rate(const TransverseWavevector& k, double eta);

// (beta_min, beta_max) of the unstable band at fixed y, with the coupling
// factor pinned at k_x = k_0: f(y) = exp(-sqrt((2/eta)^2 + y^2)).
std::pair<double, double> instability_window(double y, double eta);

// All four roots with dissipation,
//   w = -i Gamma +- sqrt(B +- sqrt(A)),
//   A = e^{-2|k|d} + 4 beta^2 (1 - Gamma^2),  B = 1 + beta^2 - Gamma^2,
// principal complex square roots throughout. Reduces to
// +-lossless_branches at Gamma = 0.
ModeRoots lossy_roots(const TransverseWavevector& k, double eta, double Gamma);

// The potentially unstable b root at k_y = 0,
//   i [ -Gamma + sqrt( sqrt(e^{-4|beta|/eta} + 4 beta^2 (1 - Gamma^2))
//                      - (1 + beta^2 - Gamma^2) ) ].
std::complex<double> unstable_root(double beta, double eta, double Gamma);

// Determinant whose zeros are the modes:
//   (w+(w+ + 2i Gamma) - 1)(w-(w- + 2i Gamma) - 1) - e^{-2|k|d},
// with w± = w ± eta x / 2.
std::complex<double> delta_determinant(std::complex<double> w,
                                       const TransverseWavevector& k,
                                       double eta, double Gamma);

}  // namespace qfr
