#pragma once

namespace rhombforge {

/// Entry point for the command-line tool; returns the process exit code
/// (0 success, 2 invalid input, 3 failed assertion).
int run_cli(int argc, const char* const* argv);

}  // namespace rhombforge
