#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octobil::cli {

/// Runs one octobil command. Exit status: 0 on pass/success, 1 when the run
/// found a property violation (a fuzz zero, a rank deficiency, an attained
/// line, a kernel witness), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octobil::cli
