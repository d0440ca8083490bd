#include <doctest.h>

#include <cstdint>
#include <limits>

#include "hirzebruch/cohomology.hpp"
#include "oracle.hpp"

using namespace hirz;

TEST_CASE("h0") {
    for (std::int64_t m = -5; m <= 5; ++m) CHECK(h0(Surface(1), {-1, 1 - m}) == 0);
    for (std::int64_t e = 0; e <= 3; ++e) {
        for (std::int64_t m = 1; m <= 6; ++m) CHECK(h0(Surface(e), {0, -m}) == 0);
        CHECK(h0(Surface(e), {0, 0}) == 1);
    }
    // 3 + 2 + 1 sections over the summands O(2), O(1), O(0).
    CHECK(h0(Surface(1), {2, 2}) == 6);
}

TEST_CASE("h1") {
    CHECK(h1(Surface(1), {1, -1}) == 1);
    CHECK(h1(Surface(0), {1, -3}) == 4);
    for (std::int64_t e = 0; e <= 3; ++e) CHECK(h1(Surface(e), {0, 0}) == 0);
}

TEST_CASE("h2") {
    for (std::int64_t e = 0; e <= 3; ++e) {
        const Surface s(e);
        CHECK(h0(s, canonical_divisor(s)) == 0);
        CHECK(h2(s, {0, 0}) == 0);
    }
    CHECK(h2(Surface(1), {-2, -3}) == 1);
    CHECK(h2(Surface(0), {-3, -3}) == h0(Surface(0), {1, 1}));
    CHECK(h2(Surface(0), {-3, -3}) == 4);
}

TEST_CASE("euler_char") {
    for (std::int64_t e = 0; e <= 3; ++e) CHECK(euler_char(Surface(e), {0, 0}) == 1);
    CHECK(euler_char(Surface(1), {2, 2}) == 6);
    CHECK(euler_char(Surface(0), {1, -3}) == -4);
}

TEST_CASE("ext1_dim") {
    CHECK(ext1_dim(Surface(1), {1, 3}, {2, 2}) == 1);
    CHECK(ext1_dim(Surface(0), {1, 3}, {2, 0}) == 4);
    CHECK(ext1_dim(Surface(2), {1, 4}, {2, 4}) == 1);
    for (std::int64_t e = 0; e <= 3; ++e)
        for (std::int64_t a = -3; a <= 3; ++a)
            for (std::int64_t b = -3; b <= 3; ++b)
                CHECK(ext1_dim(Surface(e), {a, b}, {a, b}) == 0);
}

TEST_CASE("closed forms agree with the pushforward/relative-duality oracle") {
    for (std::int64_t e = 0; e <= 4; ++e) {
        const Surface s(e);
        for (std::int64_t a = -12; a <= 12; ++a)
            for (std::int64_t b = -30; b <= 30; ++b) {
                const auto want = oracle::cohomology(e, {a, b});
                const CohomologyTable got = cohomology(s, {a, b});
                REQUIRE(got.h0 == want.h0);
                REQUIRE(got.h1 == want.h1);
                REQUIRE(got.h2 == want.h2);
            }
    }
}

TEST_CASE("Riemann-Roch and Serre duality over the sweep") {
    for (std::int64_t e = 0; e <= 3; ++e) {
        const Surface s(e);
        const DivisorClass k = canonical_divisor(s);
        for (std::int64_t a = -10; a <= 10; ++a)
            for (std::int64_t b = -10; b <= 10; ++b) {
                const DivisorClass d{a, b};
                const CohomologyTable t = cohomology(s, d);
                REQUIRE(t.h0 >= 0);
                REQUIRE(t.h1 >= 0);
                REQUIRE(t.h2 >= 0);
                REQUIRE(t.euler_characteristic() == euler_char(s, d));
                REQUIRE(t.h0 == h2(s, k - d));
                REQUIRE(t.h1 == h1(s, k - d));
                REQUIRE(t.h2 == h0(s, k - d));
                REQUIRE(h0(s, d) <= h0(s, {a, b + 1}));
                if (a == -1) REQUIRE(t == CohomologyTable{0, 0, 0});
            }
    }
}

TEST_CASE("ext1 vanishes when every pushforward summand has degree >= -1") {
    for (std::int64_t e = 0; e <= 3; ++e) {
        const Surface s(e);
        for (std::int64_t qa = -3; qa <= 3; ++qa)
            for (std::int64_t qb = -3; qb <= 3; ++qb)
                for (std::int64_t a = 0; a <= 6; ++a)
                    for (std::int64_t b = a * e - 1; b <= a * e + 4; ++b) {
                        const DivisorClass q{qa, qb};
                        REQUIRE(ext1_dim(s, q, q + DivisorClass{a, b}) == 0);
                    }
    }
}

TEST_CASE("large arguments use closed forms and report overflow") {
    const Surface s(1);
    // a = 10^6: the sum has ~10^6 terms, evaluated in O(1).
    const std::int64_t a = 1'000'000;
    CHECK(h0(s, {a, a}) == (a + 1) * (a + 2) / 2);
    const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 4;
    CHECK_THROWS_AS(h0(Surface(0), {huge, huge}), Error);
}
