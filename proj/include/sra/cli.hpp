#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error or failed
// check, 2 usage error.

#include <ostream>

namespace sra {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sra
