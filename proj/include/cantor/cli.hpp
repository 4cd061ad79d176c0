#pragma once

namespace cantor {

/// Exit 0 when every certificate passes, 1 when one fails (the failing
/// invariant is named on stderr), 2 on usage errors.
int run_cli(int argc, char** argv);

}  // namespace cantor
