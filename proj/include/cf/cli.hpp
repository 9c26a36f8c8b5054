#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cf::cli {

// Batch command surface: table, seq, dist, verify, series, identity,
// bijection. Returns 0 on success/pass, 1 on verification failure, 2 on
// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cf::cli
