#include "gwcp3/combinatorics.hpp"

#include <doctest.h>

using gwcp3::binom;
using gwcp3::factorial;
using gwcp3::Int;
using gwcp3::multinom;

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(1, -1) == 0);   // required by terms like C(b, b1-1) at b1 = 0
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-2, 0) == 0);
    CHECK(binom(40, 20) == Int("137846528820"));
}

TEST_CASE("multinomials") {
    CHECK(multinom(4, 1, 2) == 12);
    CHECK(multinom(2, 0, -1) == 0);  // negative lower index, e.g. a3 - 2 < 0
    CHECK(multinom(5, 3, 4) == 0);
    CHECK(multinom(-1, 0, 0) == 0);
    for (int m = 0; m <= 12; ++m)
        for (int k = 0; k <= m; ++k) CHECK(multinom(m, k, m - k) == binom(m, k));
}

TEST_CASE("Pascal identity including the zero convention") {
    for (int m = 1; m <= 20; ++m)
        for (int k = -3; k <= m + 3; ++k)
            CHECK(binom(m, k) == binom(m - 1, k - 1) + binom(m - 1, k));
}

TEST_CASE("multinomial factorization") {
    for (int m = 0; m <= 10; ++m)
        for (int k1 = -2; k1 <= m + 1; ++k1)
            for (int k2 = -2; k2 <= m + 1; ++k2)
                CHECK(multinom(m, k1, k2) == (k1 < 0 || k2 < 0 || k1 + k2 > m
                                                  ? Int(0)
                                                  : binom(m, k1) * binom(m - k1, k2)));
}

TEST_CASE("factorial table") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
