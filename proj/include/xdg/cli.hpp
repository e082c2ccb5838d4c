#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xdg {

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2 };

// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace xdg
