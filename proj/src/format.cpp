#include "lexfreq/format.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace lexfreq {

std::string format_fixed(double value, int decimals, Decimal decimal) {
    long double scale = 1.0L;
    for (int i = 0; i < decimals; ++i) scale *= 10.0L;
    // llroundl rounds halves away from zero, i.e. half-up for the
    // non-negative percentages and ratios this library prints.
    long long scaled = llroundl(static_cast<long double>(value) * scale);
    bool negative = scaled < 0;
    unsigned long long mag = negative ? -static_cast<unsigned long long>(scaled) : scaled;
    unsigned long long unit = 1;
    for (int i = 0; i < decimals; ++i) unit *= 10;
    char buf[64];
    if (decimals == 0) {
        std::snprintf(buf, sizeof buf, "%s%llu", negative ? "-" : "", mag);
    } else {
        std::snprintf(buf, sizeof buf, "%s%llu%c%0*llu", negative ? "-" : "", mag / unit,
                      decimal == Decimal::comma ? ',' : '.', decimals, mag % unit);
    }
    return buf;
}

}  // namespace lexfreq
