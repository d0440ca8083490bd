#pragma once

/**
 * @file stability.hpp
 * @brief Slopes, the 2r < beta criterion, walls and chambers, and a direct
 *        slope-stability check against sub-line-bundles of an extension.
 *
 * Stability is strict: a sub-line-bundle of equal slope destabilizes.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hirzebruch/bundles.hpp"
#include "hirzebruch/picard.hpp"

namespace hirz {

/// Exact rational, stored reduced with a positive denominator.
class Slope {
public:
    /// Throws InvalidArgument if den == 0.
    Slope(std::int64_t num, std::int64_t den = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    /// Divide by a positive integer.
    Slope divided_by(std::int64_t k) const;

    friend bool operator==(const Slope& x, const Slope& y) noexcept {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Slope& x, const Slope& y) noexcept {
        return static_cast<wide_int>(x.num_) * y.den_ <=> static_cast<wide_int>(y.num_) * x.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// "13/2", or "6" for integral values.
std::string to_string(const Slope& m);
std::ostream& operator<<(std::ostream& os, const Slope& m);

/// mu_H = c1.H / rank. Throws NotAmple unless H is ample, InvalidArgument unless rank > 0.
Slope slope(const Surface& s, const DivisorClass& polarization, const DivisorClass& c1,
            std::int64_t rank);

/// True iff 2r < beta and the extension does not split. Assumes inv.r + inv.s == beta.
bool stable_for_some_polarization(const CanonicalInvariants& inv, std::int64_t beta,
                                  Splitting splitting) noexcept;

struct Wall {
    DivisorClass zeta;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// zeta = 2G - c1.
Wall wall(const DivisorClass& sub_class, const DivisorClass& c1);

/// {H = (a,b) : u*a + v*b < 0} intersected with the ample cone.
struct ChamberRegion {
    std::int64_t u = 0;
    std::int64_t v = 0;
    Surface surface{0};
    std::string human_readable;
};

/// Region where H.zeta < 0. Throws EmptyChamber if no integer point with
/// 1 <= a, b <= 1000 lies in it.
ChamberRegion stable_chamber(const Surface& s, const Wall& w);

bool is_in_chamber(const ChamberRegion& region, const DivisorClass& polarization);

enum class Outcome { Stable, Destabilized };

std::string_view to_string(Outcome o) noexcept;

/// A sub-line-bundle class together with D.H, which is its slope.
struct Candidate {
    DivisorClass divisor;
    std::int64_t degree = 0;
};

struct SweepReport {
    std::int64_t window = 0;
    std::int64_t examined = 0;
    std::int64_t corner_max = 0;
    std::int64_t sweep_max = 0;
    DivisorClass sweep_witness;

    bool corner_exceeded() const noexcept { return sweep_max > corner_max; }
};

struct StabilityVerdict {
    Outcome outcome = Outcome::Stable;
    std::optional<DivisorClass> witness; // present iff Destabilized
    Slope mu{0};
    std::vector<Candidate> candidates; // sub, quotient - C0, quotient - f0
    std::optional<SweepReport> sweep;
};

struct BruteForceOptions {
    bool exhaustive = false;
    std::int64_t window = 10;
};

/// Compares mu_H(E) with every sub-line-bundle family of the extension. O(D) either
/// factors through O(sub) (sub - D effective) or maps non-trivially to the quotient
/// (quotient - D effective, D != quotient since the extension does not split). H is
/// positive on C0 and f0, so each family peaks at its corners: sub, quotient - C0 and
/// quotient - f0. Ties for the witness go to the earliest of those three.
///
/// Exhaustive mode additionally walks D = corner - (p, q) for 0 <= p, q <= window and
/// decides the verdict over everything seen.
///
/// Throws NotAmple, or UnsupportedBundle for deg Y != 0, split extensions, or
/// sub.a <= quotient.a.
StabilityVerdict brute_force_stability(const ExtensionBundle& bundle,
                                       const DivisorClass& polarization,
                                       const BruteForceOptions& options = {});

/// The window walk on its own: largest D.H found versus the corner maximum.
SweepReport exhaustive_sweep(const ExtensionBundle& bundle, const DivisorClass& polarization,
                             std::int64_t window);

} // namespace hirz
