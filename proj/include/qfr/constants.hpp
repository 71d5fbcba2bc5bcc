#pragma once

namespace qfr::constants {

// SI exact values (2019 redefinition).
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J / K

}  // namespace qfr::constants
