#pragma once

namespace ertbp {

/// Command-line entry point. Exit codes: 0 success, 2 usage error,
/// 3 domain/constraint error.
int cli_run(int argc, const char* const* argv);

}  // namespace ertbp
