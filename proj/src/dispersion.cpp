#include "qfr/dispersion.hpp"

#include <cmath>

namespace qfr {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

}  // namespace

double TransverseWavevector::magnitude() const { return std::sqrt(x * x + y * y); }

double TransverseWavevector::beta(double eta) const { return x * eta / 2.0; }

LosslessBranches lossless_branches(const TransverseWavevector& k, double eta) {
    const double b = k.beta(eta);
    const double m = k.magnitude();
    const double inner = std::sqrt(std::exp(-2.0 * m) + 4.0 * b * b);
    LosslessBranches out;
    out.a = std::sqrt(cplx(1.0 + b * b + inner, 0.0));
    out.b = std::sqrt(cplx(1.0 + b * b - inner, 0.0));
    return out;
}

double growth_rate(const TransverseWavevector& k, double eta) {
    const double m = k.magnitude();
    const double e = std::exp(-m);
    if (e == 0.0) return 0.0;
    const double t = (2.0 - eta * std::abs(k.x)) / e;
    const double rad = 1.0 - t * t;
    if (!(rad > 0.0)) return 0.0;
    return 0.5 * e * std::sqrt(rad);
}

std::pair<double, double> instability_window(double y, double eta) {
    const double k0d = 2.0 / eta;
    const double f = std::exp(-std::sqrt(k0d * k0d + y * y));
    return {1.0 - 0.5 * f, 1.0 + 0.5 * f};
}

// Substituting z = w + i Gamma turns the determinant into a biquadratic,
//   (z^2 + C)^2 - 4 beta^2 z^2 - E = 0,  C = Gamma^2 + beta^2 - 1,
// whose z^2 roots are B +- sqrt(A). Each labeled root is continuous in
// Gamma on [0, 1] (A stays real nonnegative there), so the a/b and plus/
// minus labels track the lossless branches.
ModeRoots lossy_roots(const TransverseWavevector& k, double eta, double Gamma) {
    const double b = k.beta(eta);
    const double m = k.magnitude();
    const double E = std::exp(-2.0 * m);
    const cplx A(E + 4.0 * b * b * (1.0 - Gamma * Gamma), 0.0);
    const cplx B(1.0 + b * b - Gamma * Gamma, 0.0);
    const cplx sA = std::sqrt(A);
    const cplx za = std::sqrt(B + sA);
    const cplx zb = std::sqrt(B - sA);
    const cplx shift = -kI * Gamma;
    return ModeRoots{shift + za, shift - za, shift + zb, shift - zb};
}

std::complex<double> unstable_root(double beta, double eta, double Gamma) {
    const double E = std::exp(-4.0 * std::abs(beta) / eta);
    const cplx inner = std::sqrt(cplx(E + 4.0 * beta * beta * (1.0 - Gamma * Gamma), 0.0));
    const cplx arg = inner - cplx(1.0 + beta * beta - Gamma * Gamma, 0.0);
    return kI * (-Gamma + std::sqrt(arg));
}

std::complex<double> delta_determinant(std::complex<double> w,
                                       const TransverseWavevector& k,
                                       double eta, double Gamma) {
    const double a = eta * k.x / 2.0;
    const cplx wp = w + a;
    const cplx wm = w - a;
    const cplx two_i_gamma = 2.0 * kI * Gamma;
    const cplx fp = wp * (wp + two_i_gamma) - 1.0;
    const cplx fm = wm * (wm + two_i_gamma) - 1.0;
    return fp * fm - std::exp(-2.0 * k.magnitude());
}

}  // namespace qfr
