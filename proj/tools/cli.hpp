#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `exlab` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error (bad file, unknown builtin,
/// failed paper check) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exlab::cli
