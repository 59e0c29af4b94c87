// SPDX-License-Identifier: Apache-2.0

#include "castelbound/rat.hpp"

#include <stdexcept>

namespace castelbound::numerics {

rat::rat(big_int num, big_int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rat: zero denominator");
    normalize();
}

void rat::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = big_int(1);
        return;
    }
    big_int g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

rat rat::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return rat(big_int::from_string(s));
    return rat(big_int::from_string(s.substr(0, slash)),
               big_int::from_string(s.substr(slash + 1)));
}

std::string rat::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

rat rat::operator-() const {
    rat r = *this;
    r.num_ = -r.num_;
    return r;
}

rat rat::abs() const {
    rat r = *this;
    r.num_ = r.num_.abs();
    return r;
}

rat operator+(const rat& a, const rat& b) {
    return rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rat operator-(const rat& a, const rat& b) {
    return rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rat operator*(const rat& a, const rat& b) { return rat(a.num_ * b.num_, a.den_ * b.den_); }

rat operator/(const rat& a, const rat& b) {
    if (b.is_zero()) throw std::domain_error("rat: division by zero");
    return rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const rat& a, const rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::strong_ordering rat_cmp(const rat& a, const rat& b) { return a <=> b; }

big_int rat::floor() const {
    big_int q, r;
    divmod(num_, den_, q, r);
    if (r.is_negative()) q = q - big_int(1);
    return q;
}

big_int rat::ceil() const {
    big_int q, r;
    divmod(num_, den_, q, r);
    if (r.sign() > 0) q = q + big_int(1);
    return q;
}

rat rat::pow(unsigned e) const { return rat(num_.pow(e), den_.pow(e)); }

double rat::to_double_lossy() const {
    // Good enough for plotting: split off the integer part first.
    big_int q, r;
    divmod(num_, den_, q, r);
    double head = q.fits_i64() ? (double)q.to_i64() : std::stod(q.to_string());
    big_int scaled = (r * big_int(1000000000)) / den_;
    return head + (double)scaled.to_i64() / 1e9;
}

} // namespace castelbound::numerics
