#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hirz {

// Wide enough for any product of two int64 values.
__extension__ using wide_int = __int128;

enum class ErrorCode {
    Overflow,
    InvalidArgument,
    NotAmple,
    InvalidBundle,
    UnsupportedFiberType,
    AmbiguousInvariants,
    UnsupportedBundle,
    EmptyChamber,
    InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and machine-checkable;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw Error(ErrorCode::Overflow, "integer overflow in addition");
    }
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
    }
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    }
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

// Floor division; divisor must be positive.
inline std::int64_t floor_div(std::int64_t x, std::int64_t d) {
    std::int64_t q = x / d;
    if ((x % d != 0) && (x < 0)) --q;
    return q;
}

} // namespace checked
} // namespace hirz
