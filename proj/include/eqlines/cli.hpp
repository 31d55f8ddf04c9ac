#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlines {

/// Runs one CLI invocation. Exit codes: 0 all checks pass, 1 a checked
/// inequality or verification failed, 2 usage or input error. `in` backs
/// --input - (stdin); all JSON/CSV goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace eqlines
