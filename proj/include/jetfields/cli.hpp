#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetfields {

/// Runs the command line `args` (without the program name). Returns the
/// exit status: 0 on success, 1 when the suite finds an unexpected failure,
/// 2 on parse or usage errors. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetfields
