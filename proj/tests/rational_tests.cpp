#include <cmath>

#include "doctest.h"
#include "florist/rational.hpp"

using namespace florist;

TEST_SUITE("rational") {
    TEST_CASE("string round-trip in lowest terms") {
        CHECK(rat_to_string(Rat(4, 195)) == "4/195");
        CHECK(rat_to_string(Rat(6, 4)) == "3/2");
        CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
        CHECK(rat_to_string(Rat(8, 2)) == "4");
        CHECK(rat_to_string(Rat(0)) == "0");
        CHECK(rat_to_string(Rat(-7)) == "-7");

        for (const char* text : {"4/195", "-3/2", "0", "130", "-63/4", "199/65"}) {
            CHECK(rat_to_string(rat_from_string(text)) == text);
        }
        CHECK(rat_from_string("6/4") == Rat(3, 2));
        CHECK(rat_from_string("+5") == Rat(5));
        CHECK(rat_from_string("-12/8") == Rat(-3, 2));
    }

    TEST_CASE("rational parse errors") {
        for (const char* bad : {"", "/", "1/", "/2", "a", "1/b", "1.5", "1/2/3", "1 / 2", "--3"}) {
            CHECK_THROWS_AS(rat_from_string(bad), Error);
        }
        CHECK_THROWS_WITH_AS(rat_from_string("1/0"), "Syntax: zero denominator in '1/0'", Error);
        try {
            rat_from_string("x");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Syntax);
        }
    }

    TEST_CASE("integer parse") {
        CHECK(int_from_string("0") == 0);
        CHECK(int_from_string("-17") == -17);
        CHECK(int_to_string(int_from_string("123456789012345678901234567890")) ==
              "123456789012345678901234567890");
        CHECK_THROWS_AS(int_from_string("1/2"), Error);
        CHECK_THROWS_AS(int_from_string(""), Error);
        CHECK_THROWS_AS(int_from_string("ten"), Error);
    }

    TEST_CASE("power-of-two threshold: exact small cases") {
        // 2^(1/2): 1 < sqrt(2) < 2
        CHECK_FALSE(reaches_power_of_two(1, 1, 2));
        CHECK(reaches_power_of_two(2, 1, 2));
        // exact tie's: count^den == 2^num
        CHECK(reaches_power_of_two(2, 1, 1));
        CHECK(reaches_power_of_two(4, 2, 1));
        CHECK(reaches_power_of_two(8, 9, 3));
        CHECK_FALSE(reaches_power_of_two(8, 10, 3));
        // 3 >= 2^(19/12) but not 2^(20/12): 3^12 = 531441 vs 2^19 = 524288, 2^20 = 1048576
        CHECK(reaches_power_of_two(3, 19, 12));
        CHECK_FALSE(reaches_power_of_two(3, 20, 12));
    }

    TEST_CASE("power-of-two threshold: sign conventions") {
        // nonpositive exponents are thresholds <= 1, met by any positive count
        CHECK(reaches_power_of_two(1, 0, 1));
        CHECK(reaches_power_of_two(1, -100, 7));
        // zero count misses every threshold, even negative ones
        CHECK_FALSE(reaches_power_of_two(0, -5, 2));
        CHECK_FALSE(reaches_power_of_two(0, 3, 1));
        CHECK_THROWS_AS(reaches_power_of_two(1, 1, 0), Error);
        CHECK_THROWS_AS(reaches_power_of_two(1, 1, -2), Error);
        CHECK_THROWS_AS(reaches_power_of_two(-1, 1, 1), Error);
    }

    TEST_CASE("power-of-two threshold agrees with floating-point logarithms off ties") {
        for (int count = 1; count <= 40; ++count) {
            for (int num = -8; num <= 64; ++num) {
                for (int den = 1; den <= 8; ++den) {
                    const long double lhs = den * std::log2(static_cast<long double>(count));
                    const long double margin = lhs - static_cast<long double>(num);
                    if (std::fabs(margin) < 1e-9L) continue;  // ties decided exactly elsewhere
                    CHECK(reaches_power_of_two(count, num, den) == (margin > 0));
                }
            }
        }
    }

    TEST_CASE("power-of-two threshold on large counts") {
        const Int big = Int("12960");  // 12960^2 = 167961600, 2^27 = 134217728, 2^28 = 268435456
        CHECK(reaches_power_of_two(big, 27, 2));
        CHECK_FALSE(reaches_power_of_two(big, 28, 2));
        // 84 >= 2^(51/8)? 84^8 vs 2^51: log2(84) = 6.392..., 8 * 6.392 = 51.14 > 51
        CHECK(reaches_power_of_two(84, 51, 8));
        CHECK_FALSE(reaches_power_of_two(84, 52, 8));
    }
}
