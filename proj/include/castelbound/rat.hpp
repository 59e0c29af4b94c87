// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "castelbound/bigint.hpp"

namespace castelbound::numerics {

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) == 1. All arithmetic is exact; there is no implicit
/// float conversion anywhere on a decision path.
class rat {
public:
    rat() : num_(0), den_(1) {}
    rat(long long v) : num_(v), den_(1) {}
    rat(big_int v) : num_(std::move(v)), den_(1) {}
    rat(big_int num, big_int den);
    rat(long long num, long long den) : rat(big_int(num), big_int(den)) {}

    /// Parses "num/den" or a plain decimal integer.
    static rat from_string(std::string_view s);
    /// Canonical "num/den" form, e.g. "-3/2", "5/1".
    std::string to_string() const;

    const big_int& num() const { return num_; }
    const big_int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    rat operator-() const;
    rat abs() const;

    friend rat operator+(const rat& a, const rat& b);
    friend rat operator-(const rat& a, const rat& b);
    friend rat operator*(const rat& a, const rat& b);
    friend rat operator/(const rat& a, const rat& b);

    rat& operator+=(const rat& o) { return *this = *this + o; }
    rat& operator-=(const rat& o) { return *this = *this - o; }
    rat& operator*=(const rat& o) { return *this = *this * o; }
    rat& operator/=(const rat& o) { return *this = *this / o; }

    friend bool operator==(const rat& a, const rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rat& a, const rat& b);

    big_int floor() const;
    big_int ceil() const;

    rat pow(unsigned e) const;

    /// Render-only conversion for SVG emission; never used in decisions.
    double to_double_lossy() const;

private:
    big_int num_;
    big_int den_; // > 0
    void normalize();
};

std::strong_ordering rat_cmp(const rat& a, const rat& b);

} // namespace castelbound::numerics
