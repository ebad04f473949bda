#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roughstat {

// Full command-line driver; returns the process exit code.
//   roughstat run <config-file> [--out DIR] [--format json|csv|both] [--seed INT]
//   roughstat suite [--n INT] [--tau P/Q] [--out DIR]
//   roughstat check-axioms <space> [--a DECIMAL] [--samples INT] [--out DIR]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughstat
