#pragma once

#include <iosfwd>

namespace listcolor {

/// Command-line entry point. Returns 0 on success, 1 on a domain error and
/// 2 on a usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace listcolor
