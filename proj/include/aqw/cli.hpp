#ifndef AQW_CLI_HPP
#define AQW_CLI_HPP

namespace aqw {

// Full command-line driver. Exit codes: 0 success, 1 check failure
// (verify/reproduce mismatch), 2 usage or parse error.
int run_cli(int argc, const char* const* argv);

}  // namespace aqw

#endif
