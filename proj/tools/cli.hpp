#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "gls/psi.hpp"

namespace gls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `family[:params]@(a,b)`, e.g. `const:1@(2,6)`, `sqrtp@(1,inf)`,
/// `pow:0.5@(2,8)`, `extremal:4@(2,6)`, `table:psi.csv` or `table:psi.csv@(2,8)`.
/// Throws Error{ParseError}.
GeneratingFunction parse_psi(std::string_view token);

/// Comma-separated reals; `inf` allowed.
std::vector<double> parse_reals(std::string_view text);
std::vector<int> parse_ints(std::string_view text);

/// Runs one subcommand. Exit codes: 0 success, 1 failed check or numeric
/// error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gls::cli
