#pragma once

// Reference computations for tests. Nothing here calls into the library: the
// intersection form is a Gram matrix, cohomology is summed term by term over the
// pushforward to P^1, and negative C0-degree uses relative duality on the ruling
// (the library goes through Serre duality instead).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace oracle {

using i64 = std::int64_t;

struct Pair {
    i64 a;
    i64 b;
};

// Gram matrix of {C0, f0}: [[-e, 1], [1, 0]].
inline i64 dot(i64 e, Pair x, Pair y) {
    const std::array<std::array<i64, 2>, 2> gram{{{-e, 1}, {1, 0}}};
    const std::array<i64, 2> u{x.a, x.b};
    const std::array<i64, 2> v{y.a, y.b};
    i64 total = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) total += u[i] * gram[i][j] * v[j];
    return total;
}

inline i64 p1_h0(i64 n) { return std::max<i64>(0, n + 1); }
inline i64 p1_h1(i64 n) { return std::max<i64>(0, -n - 1); }

// Canonical class found by search: the unique K with (K + C0).C0 = -2 and (K + f0).f0 = -2.
inline std::optional<Pair> canonical_by_adjunction(i64 e) {
    std::optional<Pair> found;
    for (i64 x = -20; x <= 20; ++x) {
        for (i64 y = -20; y <= 20; ++y) {
            const Pair k{x, y};
            if (dot(e, {x + 1, y}, {1, 0}) == -2 && dot(e, {x, y + 1}, {0, 1}) == -2) {
                if (found) return std::nullopt;
                found = k;
            }
        }
    }
    return found;
}

struct Table {
    i64 h0;
    i64 h1;
    i64 h2;
};

// a >= 0: pi_* O(aC0 + bf0) = sum_{k=0}^{a} O(b - ke), R^1 pi_* = 0.
// a = -1: both direct images vanish.
// a <= -2: pi_* = 0, R^1 pi_* = sum_{k=0}^{-a-2} O(b + e + ke) by relative duality
// with omega_{X/P^1} = -2C0 - e f0.
inline Table cohomology(i64 e, Pair d) {
    Table t{0, 0, 0};
    if (d.a >= 0) {
        for (i64 k = 0; k <= d.a; ++k) {
            t.h0 += p1_h0(d.b - k * e);
            t.h1 += p1_h1(d.b - k * e);
        }
    } else if (d.a <= -2) {
        for (i64 k = 0; k <= -d.a - 2; ++k) {
            t.h1 += p1_h0(d.b + e + k * e);
            t.h2 += p1_h1(d.b + e + k * e);
        }
    }
    return t;
}

// Sub-line-bundle degrees D.H in the window below one corner.
inline i64 max_degree_below(i64 e, Pair corner, Pair h, i64 window) {
    i64 best = dot(e, corner, h);
    for (i64 p = 0; p <= window; ++p)
        for (i64 q = 0; q <= window; ++q)
            best = std::max(best, dot(e, {corner.a - p, corner.b - q}, h));
    return best;
}

} // namespace oracle
