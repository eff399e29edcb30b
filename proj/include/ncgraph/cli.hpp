#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

struct UnknownGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entry point behind the ncgraph binary; exposed so the subcommands can be
// driven in-process. args excludes the program name. Returns the process
// exit code: 0 on success, 1 when `verify` finds failures, 2 on usage or
// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ncg
