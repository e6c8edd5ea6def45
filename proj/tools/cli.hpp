#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coadjoint::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNotQuantizable = 3;

/// Runs one command. args excludes the program name. Reports go to out,
/// one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coadjoint::cli
