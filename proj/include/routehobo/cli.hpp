#pragma once

#include <iosfwd>

namespace routehobo {

/// Entry point of the `routehobo` tool. Returns 0 on success, 2 on usage
/// errors and 1 on data errors; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace routehobo
