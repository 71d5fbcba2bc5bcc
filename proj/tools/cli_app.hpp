#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfr::cli {

// Exit codes: 0 success, 2 invalid arguments or I/O failure, 3 instability
// requested with an exact method, 4 quadrature convergence failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Shortest decimal representation that re-parses to the same double.
std::string format_double(double v);

}  // namespace qfr::cli
