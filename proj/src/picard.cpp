#include "hirzebruch/picard.hpp"

#include <sstream>

namespace hirz {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::InvalidBundle: return "InvalidBundle";
    case ErrorCode::UnsupportedFiberType: return "UnsupportedFiberType";
    case ErrorCode::AmbiguousInvariants: return "AmbiguousInvariants";
    case ErrorCode::UnsupportedBundle: return "UnsupportedBundle";
    case ErrorCode::EmptyChamber: return "EmptyChamber";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Surface::Surface(std::int64_t e) : e_(e) {
    if (e < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "Hirzebruch invariant must be non-negative, got " + std::to_string(e));
    }
}

std::string to_string(const DivisorClass& d) {
    std::ostringstream os;
    os << '(' << d.a << ',' << d.b << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << to_string(d); }

std::int64_t intersect(const Surface& s, const DivisorClass& d1, const DivisorClass& d2) {
    using namespace checked;
    const std::int64_t self = mul(mul(d1.a, d2.a), neg(s.e()));
    return add(add(self, mul(d1.a, d2.b)), mul(d2.a, d1.b));
}

bool is_ample(const Surface& s, const DivisorClass& d) {
    if (d.a <= 0) return false;
    // b > a*e, evaluated without overflow: a*e may exceed int64 while b cannot.
    const wide_int ae = static_cast<wide_int>(d.a) * s.e();
    return static_cast<wide_int>(d.b) > ae;
}

bool is_effective(const DivisorClass& d) noexcept { return d.a >= 0 && d.b >= 0; }

DivisorClass canonical_divisor(const Surface& s) {
    return {-2, checked::neg(checked::add(s.e(), 2))};
}

} // namespace hirz
