#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfeul {

inline constexpr int kExitPass = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches `dedekind`, `lens`, `surgery`, `hfmodel check` and `verify`.
/// `args` excludes the program name. Returns 0 when every identity checked
/// in the run holds exactly, 1 when one fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hfeul
