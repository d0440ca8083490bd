#include <doctest.h>

#include <cstdint>
#include <random>

#include "hirzebruch/bundles.hpp"
#include "hirzebruch/cohomology.hpp"

using namespace hirz;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected hirz::Error");
    return ErrorCode::InternalInconsistency;
}

} // namespace

TEST_CASE("extension bundle invariants") {
    CHECK(code_of([] { ExtensionBundle(Surface(1), {2, 2}, {1, 3}, -1); }) ==
          ErrorCode::InvalidBundle);
    // Ext^1(O, O) = 0: no non-split extension of O by O.
    CHECK(code_of([] { ExtensionBundle(Surface(0), {0, 0}, {0, 0}); }) ==
          ErrorCode::InvalidBundle);
    CHECK_NOTHROW(ExtensionBundle(Surface(0), {0, 0}, {0, 0}, 0, Splitting::Split));
    CHECK_NOTHROW(ExtensionBundle(Surface(0), {0, 0}, {0, 0}, 2, Splitting::NonSplit));
}

TEST_CASE("chern_from_extension") {
    const auto a = chern_from_extension(ExtensionBundle(Surface(1), {2, 2}, {1, 3}));
    CHECK(a == ChernData{{3, 5}, 6});
    const auto d = chern_from_extension(ExtensionBundle(Surface(2), {2, 4}, {1, 4}));
    CHECK(d == ChernData{{3, 8}, 8});
    const auto trivial =
        chern_from_extension(ExtensionBundle(Surface(0), {0, 0}, {0, 0}, 0, Splitting::Split));
    CHECK(trivial == ChernData{{0, 0}, 0});
    const auto c = chern_from_extension(ExtensionBundle(Surface(1), {2, 1}, {1, 4}));
    CHECK(c == ChernData{{3, 5}, 7});
    const auto with_y = chern_from_extension(ExtensionBundle(Surface(1), {2, 1}, {1, 4}, 3));
    CHECK(with_y.c2 == 10);
}

TEST_CASE("deg_y_from_invariants") {
    CHECK(deg_y_from_invariants(6, 3, 5, 2, 2, Surface(1)) == 0);
    CHECK(deg_y_from_invariants(8, 3, 8, 2, 4, Surface(2)) == 0);
    for (std::int64_t e = 0; e <= 3; ++e) CHECK(deg_y_from_invariants(0, 0, 0, 0, 0, Surface(e)) == 0);
    // Inconsistent data comes back negative rather than clamped.
    CHECK(deg_y_from_invariants(5, 3, 5, 2, 2, Surface(1)) == -1);
}

TEST_CASE("generic_splitting_type") {
    CHECK(generic_splitting_type(ExtensionBundle(Surface(1), {2, 2}, {1, 3})) ==
          SplittingType{2, 1});
    CHECK(generic_splitting_type(ExtensionBundle(Surface(2), {2, 4}, {1, 4})) ==
          SplittingType{2, 1});
    CHECK(generic_splitting_type(ExtensionBundle(Surface(1), {3, 0}, {3, 7})) ==
          SplittingType{3, 3});
    CHECK(code_of([] {
              generic_splitting_type(
                  ExtensionBundle(Surface(1), {0, 0}, {2, 0}, 0, Splitting::Split));
          }) == ErrorCode::UnsupportedFiberType);
}

TEST_CASE("generic_splitting_type is symmetric in sub and quotient") {
    for (std::int64_t e = 0; e <= 3; ++e)
        for (std::int64_t x = -3; x <= 5; ++x)
            for (std::int64_t y = x - 1; y <= x + 1; ++y) {
                const ExtensionBundle fwd(Surface(e), {x, 1}, {y, 2}, 0, Splitting::Split);
                const ExtensionBundle rev(Surface(e), {y, 2}, {x, 1}, 0, Splitting::Split);
                CHECK(generic_splitting_type(fwd) == generic_splitting_type(rev));
            }
}

TEST_CASE("canonical_invariants for the four classified extensions") {
    CHECK(canonical_invariants(ExtensionBundle(Surface(1), {2, 2}, {1, 3})) ==
          CanonicalInvariants{2, 1, 2, 3, 0});
    CHECK(canonical_invariants(ExtensionBundle(Surface(0), {2, 0}, {1, 3})) ==
          CanonicalInvariants{2, 1, 0, 3, 0});
    CHECK(canonical_invariants(ExtensionBundle(Surface(1), {2, 1}, {1, 4})) ==
          CanonicalInvariants{2, 1, 1, 4, 0});
    CHECK(canonical_invariants(ExtensionBundle(Surface(2), {2, 4}, {1, 4})) ==
          CanonicalInvariants{2, 1, 4, 4, 0});
}

TEST_CASE("canonical_invariants rejects presentations it cannot read") {
    CHECK(code_of([] {
              canonical_invariants(ExtensionBundle(Surface(0), {1, 0}, {1, 0}, 0, Splitting::Split));
          }) == ErrorCode::AmbiguousInvariants);
    CHECK(code_of([] {
              canonical_invariants(ExtensionBundle(Surface(1), {1, 3}, {2, 2}, 0, Splitting::Split));
          }) == ErrorCode::UnsupportedFiberType);
}

TEST_CASE("Whitney consistency over the full sweep") {
    std::int64_t checked_count = 0;
    for (std::int64_t e = 0; e <= 3; ++e)
        for (std::int64_t ga = -3; ga <= 5; ++ga)
            for (std::int64_t gb = -3; gb <= 5; ++gb)
                for (std::int64_t qa = -3; qa < ga; ++qa)
                    for (std::int64_t qb = -3; qb <= 5; ++qb)
                        for (std::int64_t y = 0; y <= 4; ++y) {
                            const ExtensionBundle b(Surface(e), {ga, gb}, {qa, qb}, y,
                                                    Splitting::Split);
                            const ChernData c = chern_from_extension(b);
                            const CanonicalInvariants inv = canonical_invariants(b);
                            REQUIRE(deg_y_from_invariants(c.c2, c.c1.a, c.c1.b, inv.d, inv.r,
                                                          b.surface()) == y);
                            REQUIRE(inv.d + inv.d_prime == c.c1.a);
                            REQUIRE(inv.r + inv.s == c.c1.b);
                            REQUIRE(inv.d >= inv.d_prime);
                            ++checked_count;
                        }
    CHECK(checked_count > 10000);
}
