#pragma once

/**
 * @file cohomology.hpp
 * @brief Line-bundle cohomology dimensions on a Hirzebruch surface.
 *
 * For a >= 0 the pushforward of O(aC0 + bf0) to P^1 is the sum of O(b - ke),
 * k = 0..a, with vanishing higher direct image, so h0 and h1 are sums of
 * P^1 cohomology dimensions. a = -1 is acyclic; a <= -2 is reached through
 * Serre duality against the canonical class.
 */

#include <cstdint>

#include "hirzebruch/picard.hpp"

namespace hirz {

struct CohomologyTable {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;

    std::int64_t euler_characteristic() const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

std::int64_t h0(const Surface& s, const DivisorClass& d);
std::int64_t h1(const Surface& s, const DivisorClass& d);
std::int64_t h2(const Surface& s, const DivisorClass& d);

CohomologyTable cohomology(const Surface& s, const DivisorClass& d);

/// Riemann-Roch: 1 + D.(D - K)/2. Throws InternalInconsistency if D.(D - K) is odd.
std::int64_t euler_char(const Surface& s, const DivisorClass& d);

/// dim Ext^1(O(quotient), O(sub)) = h1(sub - quotient).
std::int64_t ext1_dim(const Surface& s, const DivisorClass& quotient, const DivisorClass& sub);

} // namespace hirz
