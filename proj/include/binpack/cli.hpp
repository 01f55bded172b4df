#ifndef BINPACK_CLI_HPP
#define BINPACK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace binpack {

// Full command-line driver, separated from main() so tests can invoke it
// with captured streams. `args` excludes the program name.
//
// Exit codes: 0 success; 1 failed verification or violated bound;
// 2 usage or input parse error. Diagnostics go to `err` only.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace binpack

#endif
