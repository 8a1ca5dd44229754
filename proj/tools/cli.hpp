#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dk::cli {

  enum ExitCode : int { ok = 0, failed = 1, usage = 2, undecided = 3 };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace dk::cli
