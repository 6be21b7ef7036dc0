#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crcforge {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,    // verification failed, infeasible, or internal self-check failure
    exit_usage = 2,     // bad arguments or malformed input
};

/// Runs the crc-forge command line; `args` excludes the program name.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
