#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hurwitz {

inline constexpr int kMaxDim = 64;

/// Mask with the low n bits set.
constexpr std::uint64_t low_mask(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Bit position of coordinate i (1-based) in an n-dimensional vector.
///
/// Coordinate 1 is the most significant of the n bits, so the numeric value of
/// `bits` reads the same as the row notation x_1 x_2 ... x_n.
constexpr int coord_bit(int n, int i) { return n - i; }

/// Element of F_2^n held in one machine word.
class BitVec {
public:
    constexpr BitVec() = default;

    constexpr BitVec(int n, std::uint64_t bits) : bits_(bits), n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be in 1..64, got " + std::to_string(n));
        if ((bits & ~low_mask(n)) != 0) throw DomainError("bits set beyond dimension " + std::to_string(n));
    }

    static constexpr BitVec zero(int n) { return BitVec(n, 0); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int dim() const { return n_; }

    /// Coordinate i (1-based).
    constexpr bool operator[](int i) const { return ((bits_ >> coord_bit(n_, i)) & 1U) != 0; }

    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr BitVec operator+(BitVec a, BitVec b)
    {
        require_same_dim(a.n_, b.n_);
        BitVec r;
        r.n_ = a.n_;
        r.bits_ = a.bits_ ^ b.bits_;
        return r;
    }

    constexpr BitVec& operator+=(BitVec other) { return *this = *this + other; }

    friend constexpr bool operator==(BitVec, BitVec) = default;

    /// Orders by dimension, then by numeric value of the row string.
    friend constexpr std::strong_ordering operator<=>(BitVec a, BitVec b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    int n_ = 1;
};

/// Hamming weight.
constexpr int wt(BitVec x) { return std::popcount(x.bits()); }

/// The all-ones vector e_1 + ... + e_n.
constexpr BitVec omega(int n) { return BitVec(n, low_mask(n)); }

/// Standard basis vector e_i, 1 <= i <= n.
constexpr BitVec basis(int n, int i)
{
    if (i < 1 || i > n) throw DomainError("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return BitVec(n, std::uint64_t{1} << coord_bit(n, i));
}

/// Row string, coordinate 1 first.
inline std::string to_string(BitVec x)
{
    std::string s(static_cast<std::size_t>(x.dim()), '0');
    for (int i = 1; i <= x.dim(); ++i)
        if (x[i]) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

inline std::string to_hex(BitVec x)
{
    static constexpr char digits[] = "0123456789abcdef";
    const int nibbles = (x.dim() + 3) / 4;
    std::string s(static_cast<std::size_t>(nibbles), '0');
    std::uint64_t v = x.bits();
    for (int k = nibbles - 1; k >= 0; --k) {
        s[static_cast<std::size_t>(k)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

/// Parses a row string of '0'/'1'; the dimension is the string length.
inline BitVec parse_bitvec(std::string_view s)
{
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxDim))
        throw ParseError("binary vector must have 1..64 digits: '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("not a binary digit in '" + std::string(s) + "'");
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitVec(static_cast<int>(s.size()), v);
}

/// Parses a hex value into an n-dimensional vector.
inline BitVec parse_hex(std::string_view s, int n)
{
    if (s.empty() || s.size() > 16) throw ParseError("bad hex vector '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw ParseError("bad hex digit in '" + std::string(s) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    if ((v & ~low_mask(n)) != 0) throw ParseError("hex value '" + std::string(s) + "' exceeds dimension");
    return BitVec(n, v);
}

/// Calls fn(x) for every x in F_2^n in increasing numeric order. Requires n < 64.
template <class Fn>
void for_each_vector(int n, Fn&& fn)
{
    if (n >= 64) throw DomainError("cannot enumerate F_2^64");
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < end; ++v) fn(BitVec(n, v));
}

} // namespace hurwitz

template <>
struct std::hash<hurwitz::BitVec> {
    std::size_t operator()(hurwitz::BitVec x) const noexcept
    {
        return std::hash<std::uint64_t>{}(x.bits() * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(x.dim()));
    }
};
