// cli.hpp: `optobath` command-line front end.
//
//   optobath spectrum  [--preset fig1-bare|fig1-cooled|fig3] [overrides] -o out.csv
//   optobath rates     [...]
//   optobath stability [--x gc --x-min 0 --x-max 0.8 --x-count 81 --y ga ...]
//   optobath validate  [--no-acceptance]
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 any other runtime failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optobath::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation_failed = 1,
    exit_config_error = 2,
    exit_runtime_error = 3,
};

int run(int argc, char** argv);
// Same as above with explicit streams; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optobath::cli
