#include "qfr/params.hpp"

#include <stdexcept>

#include "qfr/constants.hpp"

namespace qfr {

void PhysicalConfig::validate() const {
    if (!(omega_s > 0.0))
        throw std::invalid_argument("PhysicalConfig: omega_s must be > 0");
    if (!(gap > 0.0))
        throw std::invalid_argument("PhysicalConfig: gap must be > 0");
    if (!(gamma >= 0.0))
        throw std::invalid_argument("PhysicalConfig: gamma must be >= 0");
    if (!(v >= 0.0))
        throw std::invalid_argument("PhysicalConfig: v must be >= 0");
    if (!(temperature >= 0.0))
        throw std::invalid_argument("PhysicalConfig: temperature must be >= 0");
}

Dimensionless normalize(const PhysicalConfig& cfg) {
    cfg.validate();
    Dimensionless d;
    d.eta = cfg.v / (cfg.omega_s * cfg.gap);
    d.Gamma = cfg.gamma / (2.0 * cfg.omega_s);
    d.theta = constants::k_boltzmann * cfg.temperature /
              (constants::hbar * cfg.omega_s);
    return d;
}

double force_scale(const PhysicalConfig& cfg) {
    cfg.validate();
    return constants::hbar * cfg.omega_s / (cfg.gap * cfg.gap * cfg.gap);
}

}  // namespace qfr
