#pragma once

#include <string>

namespace lexfreq {

enum class Decimal { dot, comma };

struct FormatOptions {
    Decimal decimal = Decimal::dot;
};

/// Fixed-point formatting with half-up rounding (0.1445 -> "0.145" at three
/// decimals). printf-style formatting would round half-to-even on exact
/// midpoints, which is not what frequency-dictionary tables use.
std::string format_fixed(double value, int decimals, Decimal decimal = Decimal::dot);

}  // namespace lexfreq
