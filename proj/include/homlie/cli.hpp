#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kHolds = 0,         // success, or every checked property holds
  kPropertyFails = 1, // a mathematically meaningful "no"
  kInputError = 2,    // unreadable input, bad flags, violated preconditions
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlie::cli
