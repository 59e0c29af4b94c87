// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "castelbound/rat.hpp"

namespace castelbound::numerics {

/// Exact value of the form p + q*sqrt(m) with p, q rational and m a
/// non-negative integer. One radical per value; if m is a perfect square
/// (or q == 0) the value normalizes to a plain rational with m == 0.
///
/// Comparisons are decided by sign analysis and a single squaring step,
/// never by floating approximation. Operands whose radicands generate the
/// same quadratic field (m1*m2 a perfect square) are rebased onto a common
/// radicand first; genuinely distinct fields raise mixed_radicals_error.
class surd {
public:
    surd() : p_(0), q_(0), m_(0) {}
    surd(rat p) : p_(std::move(p)), q_(0), m_(0) {}
    surd(rat p, rat q, big_int m);

    /// sqrt(m) for an integer m >= 0.
    static surd sqrt_int(const big_int& m);
    /// sqrt(r) for a rational r >= 0, rationalized to (1/b)*sqrt(a*b).
    static surd sqrt_rat(const rat& r);

    const rat& rational_part() const { return p_; }
    const rat& coeff() const { return q_; }
    const big_int& radicand() const { return m_; }

    bool is_rational() const { return q_.is_zero(); }
    /// Requires is_rational().
    const rat& as_rat() const;

    int sign() const;

    surd operator-() const;
    friend surd operator+(const surd& a, const rat& b);
    friend surd operator-(const surd& a, const rat& b);
    friend surd operator*(const surd& a, const rat& b);
    /// Same-radicand addition; throws mixed_radicals_error otherwise.
    friend surd operator+(const surd& a, const surd& b);
    surd square() const;

    /// Serialized as "p" when rational, else "p+q*sqrt(m)" with rational
    /// pieces in num/den form.
    std::string to_string() const;
    static surd from_string(std::string_view s);

private:
    rat p_, q_;
    big_int m_;
    void normalize();
};

/// Exact total-order comparison of two surds over the same radicand (or
/// of a surd with a rational). Throws mixed_radicals_error when the
/// operands involve distinct non-square radicands.
std::strong_ordering surd_cmp(const surd& x, const surd& y);
std::strong_ordering surd_cmp(const surd& x, const rat& y);

/// Greatest integer <= x, exact.
big_int floor_of_surd(const surd& x);
big_int ceil_of_surd(const surd& x);

} // namespace castelbound::numerics
