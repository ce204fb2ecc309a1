#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgwa {

/// Runs one CLI invocation.  Exit codes: 0 success (and, where applicable,
/// property true), 1 property false, 2 input or parse error, 3 iteration cap
/// exceeded.  Reports are byte-deterministic given inputs and seed.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace tgwa
