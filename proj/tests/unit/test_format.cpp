#include "doctest.h"

#include "lexfreq/format.hpp"

using namespace lexfreq;

TEST_CASE("half-up rounding at the printed precision") {
    CHECK(format_fixed(0.1446, 3) == "0.145");
    CHECK(format_fixed(0.1444, 3) == "0.144");
    // exact binary midpoints: half-up differs from printf's half-to-even here
    CHECK(format_fixed(0.125, 2) == "0.13");
    CHECK(format_fixed(2.5, 0) == "3");
    CHECK(format_fixed(1.125, 2) == "1.13");
    CHECK(format_fixed(6486.0 / 44840.0, 3) == "0.145");
    CHECK(format_fixed(44840.0 / 6486.0, 1) == "6.9");
    CHECK(format_fixed(100.0, 2) == "100.00");
    CHECK(format_fixed(0.0, 3) == "0.000");
    CHECK(format_fixed(7.0, 0) == "7");
}

TEST_CASE("comma separator") {
    CHECK(format_fixed(3.3333, 2, Decimal::comma) == "3,33");
    CHECK(format_fixed(3363.0 / 6486.0, 3, Decimal::comma) == "0,519");
    CHECK(format_fixed(100.0, 2, Decimal::comma) == "100,00");
}

TEST_CASE("negative deltas format symmetrically") {
    CHECK(format_fixed(-0.125, 2) == "-0.13");
    CHECK(format_fixed(-2.5, 0) == "-3");
    CHECK(format_fixed(-0.0004, 3) == "0.000");
}
