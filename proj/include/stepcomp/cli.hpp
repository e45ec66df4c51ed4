#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stepcomp {

/// Full command-line driver. Exit codes: 0 success/verified, 1 violation
/// found, 2 usage or parse error, 3 indeterminate (search budget exhausted).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace stepcomp
