#pragma once

#include <ostream>

namespace hke::cli {

/// Runs one command. Returns 0 when the property holds or the construction
/// succeeded, 1 when the property fails, 2 on usage, input or capacity errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hke::cli
