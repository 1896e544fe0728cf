#pragma once

namespace concyclic::app {

/// Full CLI entry point; returns the process exit code
/// (0 success, 1 input error, 2 precondition or guard violation).
int run(int argc, char** argv);

} // namespace concyclic::app
