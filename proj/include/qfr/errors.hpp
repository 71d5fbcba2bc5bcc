#pragma once

#include <stdexcept>
#include <string>

namespace qfr {

// Requested an exact-force evaluation at parameters where no stationary
// state exists (Gamma at or below the stability boundary).
struct InstabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Reflection coefficient evaluated exactly on its lossless pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Root bracketing failed: no sign change on the given interval.
struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qfr
