#pragma once

#include <iosfwd>

namespace dotconf {

/// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dotconf
