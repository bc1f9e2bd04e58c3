#pragma once

#include <ostream>

namespace hstarlab {

/// Exit codes of the hstar_lab front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitDisagreement = 2,
};

/// Entry point shared by the hstar_lab binary and the CLI tests.
///
///   hstar   --r R --k K --n N [--method formula|enum|oracle|all] [--format json|csv]
///   enum    --k K --n N --d D [--r R] [--hypersimplicial] [--limit M] [--format json|text]
///   verify  [--suite NAME|all] [--max-n N] [--max-k K] [--max-r R] [--seed S] [--format text|json]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hstarlab
