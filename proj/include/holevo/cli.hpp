#pragma once

namespace holevo {

// Full command-line front end; returns the process exit code.
// 0 success, 1 validation or usage error, 2 solver non-convergence.
int run_cli(int argc, char** argv);

}  // namespace holevo
