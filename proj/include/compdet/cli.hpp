#pragma once

#include <iosfwd>

namespace compdet {

/// Entry point behind the `compdet` executable. Results go to `out` (or the
/// --output file), diagnostics to `err`. Returns 0 iff every check passed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace compdet
