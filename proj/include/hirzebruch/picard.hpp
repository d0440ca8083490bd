#pragma once

/**
 * @file picard.hpp
 * @brief Picard lattice of a Hirzebruch surface.
 *
 * Divisor classes are integer pairs (a, b) meaning aC0 + bf0, where C0 is the
 * negative section (C0^2 = -e) and f0 a fibre (C0.f0 = 1, f0^2 = 0). All
 * arithmetic is checked; overflow raises hirz::Error(ErrorCode::Overflow).
 */

#include <cstdint>
#include <ostream>
#include <string>

#include "hirzebruch/error.hpp"

namespace hirz {

class Surface {
public:
    /// Throws InvalidArgument for e < 0.
    explicit Surface(std::int64_t e);

    std::int64_t e() const noexcept { return e_; }

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    std::int64_t e_;
};

struct DivisorClass {
    std::int64_t a = 0; // coefficient of C0
    std::int64_t b = 0; // coefficient of f0

    static constexpr DivisorClass section() noexcept { return {1, 0}; }
    static constexpr DivisorClass fiber() noexcept { return {0, 1}; }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)};
    }
    friend DivisorClass operator-(const DivisorClass& x) {
        return {checked::neg(x.a), checked::neg(x.b)};
    }
    friend DivisorClass operator*(std::int64_t k, const DivisorClass& x) {
        return {checked::mul(k, x.a), checked::mul(k, x.b)};
    }
};

/// Renders as "(a,b)", the same form the CLI accepts.
std::string to_string(const DivisorClass& d);
std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

/// Intersection pairing: a1*a2*(-e) + a1*b2 + a2*b1.
std::int64_t intersect(const Surface& s, const DivisorClass& d1, const DivisorClass& d2);

/// a > 0 and b > a*e. Ampleness and very ampleness coincide on these surfaces.
bool is_ample(const Surface& s, const DivisorClass& d);
inline bool is_very_ample(const Surface& s, const DivisorClass& d) { return is_ample(s, d); }

bool is_effective(const DivisorClass& d) noexcept;

/// K = -2C0 - (e+2)f0.
DivisorClass canonical_divisor(const Surface& s);

} // namespace hirz
