#pragma once

/**
 * @file bundles.hpp
 * @brief Rank-2 bundles given as extensions 0 -> O(sub) -> E -> O(quotient) (x) I_Y -> 0.
 *
 * Only the numerical shadow of E is modelled: the two line-bundle classes, the
 * length of Y and whether the extension splits.
 */

#include <cstdint>
#include <string_view>

#include "hirzebruch/picard.hpp"

namespace hirz {

enum class Splitting { NonSplit, Split };

std::string_view to_string(Splitting s) noexcept;

class ExtensionBundle {
public:
    /// Throws InvalidBundle if deg_y < 0, or if a non-split extension with Y empty
    /// is requested while Ext^1(O(quotient), O(sub)) = 0.
    ExtensionBundle(Surface surface, DivisorClass sub, DivisorClass quotient,
                    std::int64_t deg_y = 0, Splitting splitting = Splitting::NonSplit);

    const Surface& surface() const noexcept { return surface_; }
    const DivisorClass& sub() const noexcept { return sub_; }
    const DivisorClass& quotient() const noexcept { return quotient_; }
    std::int64_t deg_y() const noexcept { return deg_y_; }
    Splitting splitting() const noexcept { return splitting_; }

    friend bool operator==(const ExtensionBundle&, const ExtensionBundle&) = default;

private:
    Surface surface_;
    DivisorClass sub_;
    DivisorClass quotient_;
    std::int64_t deg_y_;
    Splitting splitting_;
};

struct ChernData {
    DivisorClass c1; // (alpha, beta)
    std::int64_t c2 = 0;

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

struct SplittingType {
    std::int64_t d = 0;
    std::int64_t d_prime = 0;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct CanonicalInvariants {
    std::int64_t d = 0;
    std::int64_t d_prime = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t deg_y = 0;

    friend bool operator==(const CanonicalInvariants&, const CanonicalInvariants&) = default;
};

/// Whitney formula: c1 = sub + quotient, c2 = sub.quotient + deg Y.
ChernData chern_from_extension(const ExtensionBundle& bundle);

/// c2 + alpha(de - r) - beta d + 2dr - d^2 e. A negative result is returned
/// unchanged; it means the invariants are inconsistent with the Chern data.
std::int64_t deg_y_from_invariants(std::int64_t c2, std::int64_t alpha, std::int64_t beta,
                                   std::int64_t d, std::int64_t r, const Surface& s);

/// Restriction to a general fibre. Requires sub.a >= quotient.a - 1, otherwise
/// throws UnsupportedFiberType.
SplittingType generic_splitting_type(const ExtensionBundle& bundle);

/// Throws AmbiguousInvariants if sub.a == quotient.a, UnsupportedFiberType if
/// sub.a < quotient.a.
void require_canonical_presentation(const DivisorClass& sub, const DivisorClass& quotient);

/// (d, d', r, s, deg Y) read off the presentation. Requires sub.a > quotient.a:
/// equal fibre degrees throw AmbiguousInvariants, reversed ones UnsupportedFiberType.
///
/// Twisting by -d C0 - m f0 leaves the quotient term with negative C0-coefficient,
/// whose pushforward vanishes, so h0(E(-dC0 - mf0)) = h0(O((r - m) f0)) and the
/// second invariant is exactly sub.b.
CanonicalInvariants canonical_invariants(const ExtensionBundle& bundle);

} // namespace hirz
