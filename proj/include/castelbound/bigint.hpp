// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace castelbound::numerics {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
///
/// Values that fit in two limbs (the common case everywhere in this
/// project) take a fast path through native 128-bit arithmetic.
class big_int {
public:
    big_int() = default;
    big_int(long long v);
    explicit big_int(std::string_view decimal);

    static big_int from_string(std::string_view decimal);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }
    bool is_even() const;

    /// True when the value fits in a signed 64-bit integer.
    bool fits_i64() const;
    long long to_i64() const; // requires fits_i64()

    big_int operator-() const;
    big_int abs() const;

    friend big_int operator+(const big_int& a, const big_int& b);
    friend big_int operator-(const big_int& a, const big_int& b);
    friend big_int operator*(const big_int& a, const big_int& b);
    /// Quotient truncated toward zero.
    friend big_int operator/(const big_int& a, const big_int& b);
    /// Remainder with sign of the dividend (C semantics).
    friend big_int operator%(const big_int& a, const big_int& b);

    big_int& operator+=(const big_int& o) { return *this = *this + o; }
    big_int& operator-=(const big_int& o) { return *this = *this - o; }
    big_int& operator*=(const big_int& o) { return *this = *this * o; }
    big_int& operator/=(const big_int& o) { return *this = *this / o; }

    friend bool operator==(const big_int& a, const big_int& b);
    friend std::strong_ordering operator<=>(const big_int& a, const big_int& b);

    friend big_int gcd(big_int a, big_int b);

    /// Floor of the square root. Requires a non-negative value.
    friend big_int isqrt(const big_int& n);
    bool is_perfect_square() const;

    big_int pow(unsigned e) const;

    /// Number of significant bits of |*this| (0 for zero).
    std::size_t bit_length() const;

private:
    // limbs_ little-endian, no trailing zero limbs; sign_ == 0 iff empty.
    std::vector<std::uint32_t> limbs_;
    int sign_ = 0;

    void trim();
    static int cmp_mag(const big_int& a, const big_int& b);
    static big_int from_mag(std::vector<std::uint32_t> limbs, int sign);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&,
                                              const std::vector<std::uint32_t>&);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&,
                                              const std::vector<std::uint32_t>&);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>&,
                                              const std::vector<std::uint32_t>&);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
    friend void divmod(const big_int& a, const big_int& b, big_int& q, big_int& r);

    bool fits_u128_mag() const { return limbs_.size() <= 4; }
    unsigned __int128 to_u128_mag() const;
    static big_int from_i128(__int128 v);
    static big_int from_u128_mag(unsigned __int128 v, int sign);
};

void divmod(const big_int& a, const big_int& b, big_int& q, big_int& r);

} // namespace castelbound::numerics
