#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by checked machine-integer arithmetic; callers retry with BigInt.
class Overflow : public Error {
public:
    Overflow() : Error("integer overflow") {}
};

template <class Int>
Int checked_add(Int a, Int b)
{
    if constexpr (std::integral<Int>) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow();
        return r;
    } else {
        return a + b;
    }
}

template <class Int>
Int checked_mul(Int a, Int b)
{
    if constexpr (std::integral<Int>) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
        return r;
    } else {
        return a * b;
    }
}

template <class Int>
Int checked_neg(Int a)
{
    if constexpr (std::integral<Int>) {
        Int r;
        if (__builtin_sub_overflow(Int{0}, a, &r)) throw Overflow();
        return r;
    } else {
        return -a;
    }
}

template <class Int>
std::string int_to_string(const Int& v)
{
    if constexpr (std::integral<Int>) return std::to_string(v);
    else return v.str();
}

} // namespace hurwitz
