#pragma once

namespace qfr {

// Dimensionful plate parameters. omega_s is the surface-plasmon resonance
// of an isolated plate, gamma the carrier collision rate, gap the vacuum
// separation, v the relative sliding speed.
struct PhysicalConfig {
    double omega_s = 0.0;      // rad/s
    double gamma = 0.0;        // rad/s
    double gap = 0.0;          // m
    double v = 0.0;            // m/s
    double temperature = 0.0;  // K

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

// Reduced parameter triple: everything downstream runs on these.
//   eta   = v / (omega_s * gap)        (destabilizing factor)
//   Gamma = gamma / (2 omega_s)        (reduced dissipation)
//   theta = k_B T / (hbar omega_s)     (reduced temperature)
struct Dimensionless {
    double eta = 0.0;
    double Gamma = 0.0;
    double theta = 0.0;

    double k0_gap() const { return 2.0 / eta; }  // k_0 d
};

Dimensionless normalize(const PhysicalConfig& cfg);

// Natural force-per-area scale F0 = hbar * omega_s / gap^3, in N/m^2
// (numerically equal to pN/um^2).
double force_scale(const PhysicalConfig& cfg);

}  // namespace qfr
