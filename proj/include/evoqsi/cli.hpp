#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evoqsi::cli {

/// Entry point of the `evoqsi` command. args[0] is the program name.
/// Returns 0 on success; on error prints one diagnostic line to `err` and
/// returns nonzero.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evoqsi::cli
