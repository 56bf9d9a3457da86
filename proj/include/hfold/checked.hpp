#pragma once

#include <cstdint>

#include "hfold/errors.hpp"

namespace hfold {

// All set elements, sums and bound values use one exact integer width.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

} // namespace hfold
