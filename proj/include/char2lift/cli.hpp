#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace char2lift {

// Runs the command-line interface.  args excludes the program name.
// Returns the process exit code: 0 success / verification passed,
// 1 verification failed, 2 usage or input error.  Progress goes to err,
// results to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace char2lift
