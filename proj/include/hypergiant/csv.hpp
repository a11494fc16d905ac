#pragma once

#include <string>

namespace hypergiant {

/// Locale-independent shortest-safe rendering with 17 significant digits;
/// "nan", "inf", "-inf" for non-finite values.
std::string format_double(double value);

}  // namespace hypergiant
