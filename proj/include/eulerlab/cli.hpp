#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eulerlab::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 success, 1 hypothesis failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default sampling seed: EULERLAB_SEED when set, otherwise 0. Throws
/// InputError when the variable is not an unsigned integer.
std::uint64_t default_seed();

}  // namespace eulerlab::cli
