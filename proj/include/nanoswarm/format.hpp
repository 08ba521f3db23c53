#pragma once

#include <string>

namespace nanoswarm {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace nanoswarm
