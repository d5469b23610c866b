#pragma once

#include <iosfwd>

namespace cpv::cli {

/// Exit codes: 0 success, 1 domain error, 2 I/O or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpv::cli
