// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace castelbound::cli {

/// Runs one CLI invocation. argv excludes the program name. Returns the
/// process exit code: 0 success, 2 argument errors, 3 domain errors.
int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err);

} // namespace castelbound::cli
