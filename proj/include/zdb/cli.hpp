#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace zdb::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kFormat = 3;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "{1,3,3}" style; runs are collapsed to "3x9" once the list is longer
/// than eight entries.
std::string format_multiset(const std::vector<std::uint64_t>& values, char open = '{',
                            char close = '}');

}  // namespace zdb::cli
