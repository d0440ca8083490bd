#include "hirzebruch/cohomology.hpp"

#include <algorithm>

namespace hirz {
namespace {

using namespace checked;

// n(n+1)/2 for n >= 0, halving the even factor first.
std::int64_t triangular(std::int64_t n) {
    if (n % 2 == 0) return mul(n / 2, add(n, 1));
    return mul(n, add(n, 1) / 2);
}

// Sum of k over [lo, hi], lo <= hi, both non-negative.
std::int64_t range_sum(std::int64_t lo, std::int64_t hi) {
    return sub(triangular(hi), lo == 0 ? 0 : triangular(lo - 1));
}

// sum_{k=0}^{a} max(0, b - k*e + 1), a >= 0.
std::int64_t pushforward_h0(std::int64_t e, std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (e == 0) return mul(add(a, 1), add(b, 1));
    const std::int64_t last = std::min(a, b / e);
    const std::int64_t count = add(last, 1);
    return sub(mul(count, add(b, 1)), mul(e, triangular(last)));
}

// sum_{k=0}^{a} max(0, k*e - b - 1), a >= 0.
std::int64_t pushforward_h1(std::int64_t e, std::int64_t a, std::int64_t b) {
    const std::int64_t shift = add(b, 1);
    if (e == 0) return shift >= 0 ? 0 : mul(add(a, 1), neg(shift));
    const std::int64_t first = std::max<std::int64_t>(0, add(floor_div(shift, e), 1));
    if (first > a) return 0;
    const std::int64_t count = add(sub(a, first), 1);
    return sub(mul(e, range_sum(first, a)), mul(shift, count));
}

} // namespace

std::int64_t CohomologyTable::euler_characteristic() const { return add(sub(h0, h1), h2); }

std::int64_t h0(const Surface& s, const DivisorClass& d) {
    if (d.a < 0) return 0;
    return pushforward_h0(s.e(), d.a, d.b);
}

std::int64_t h1(const Surface& s, const DivisorClass& d) {
    if (d.a >= 0) return pushforward_h1(s.e(), d.a, d.b);
    if (d.a == -1) return 0;
    const DivisorClass dual = canonical_divisor(s) - d;
    return pushforward_h1(s.e(), dual.a, dual.b);
}

std::int64_t h2(const Surface& s, const DivisorClass& d) { return h0(s, canonical_divisor(s) - d); }

CohomologyTable cohomology(const Surface& s, const DivisorClass& d) {
    return {h0(s, d), h1(s, d), h2(s, d)};
}

std::int64_t euler_char(const Surface& s, const DivisorClass& d) {
    const std::int64_t twice = intersect(s, d, d - canonical_divisor(s));
    if (twice % 2 != 0) {
        throw Error(ErrorCode::InternalInconsistency,
                    "D.(D-K) is odd for D=" + to_string(d) + "; adjunction violated");
    }
    return add(1, twice / 2);
}

std::int64_t ext1_dim(const Surface& s, const DivisorClass& quotient, const DivisorClass& sub) {
    return h1(s, sub - quotient);
}

} // namespace hirz
