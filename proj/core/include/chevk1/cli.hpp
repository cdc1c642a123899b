#pragma once

namespace chevk1::cli {

/// Entry point for the command-line tool. Exit codes: 0 success, 1 domain
/// errors, 2 usage errors; machine-readable {"error": {...}} on stderr.
int run(int argc, const char *const *argv);

} // namespace chevk1::cli
