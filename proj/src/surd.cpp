// SPDX-License-Identifier: Apache-2.0

#include "castelbound/surd.hpp"

#include <cassert>

#include "castelbound/errors.hpp"

namespace castelbound::numerics {

surd::surd(rat p, rat q, big_int m) : p_(std::move(p)), q_(std::move(q)), m_(std::move(m)) {
    if (m_.is_negative()) throw std::domain_error("surd: negative radicand");
    normalize();
}

void surd::normalize() {
    if (q_.is_zero()) {
        m_ = big_int(0);
        return;
    }
    big_int root = isqrt(m_);
    if (root * root == m_) {
        p_ += q_ * rat(root);
        q_ = rat(0);
        m_ = big_int(0);
    }
}

surd surd::sqrt_int(const big_int& m) { return surd(rat(0), rat(1), m); }

surd surd::sqrt_rat(const rat& r) {
    if (r.is_negative()) throw std::domain_error("surd: sqrt of negative rational");
    // sqrt(a/b) = (1/b) * sqrt(a*b)
    return surd(rat(0), rat(big_int(1), r.den()), r.num() * r.den());
}

const rat& surd::as_rat() const {
    if (!is_rational()) throw std::domain_error("surd: not a rational value");
    return p_;
}

// Sign of p + q*sqrt(m). Case table:
//   q == 0            -> sign(p)
//   p == 0            -> sign(q)
//   sign p == sign q  -> that sign
//   p > 0 > q         -> sign of p^2 - q^2 m
//   p < 0 < q         -> sign of q^2 m - p^2
// The opposite-sign cases move the radical to one side so both sides are
// non-negative before squaring.
int surd::sign() const {
    if (q_.is_zero()) return p_.sign();
    if (p_.is_zero()) return q_.sign();
    int sp = p_.sign(), sq = q_.sign();
    if (sp == sq) return sp;
    rat p2 = p_ * p_;
    rat q2m = q_ * q_ * rat(m_);
    auto c = rat_cmp(p2, q2m);
    if (c == std::strong_ordering::equal) return 0;
    bool p_dominates = c == std::strong_ordering::greater;
    return p_dominates ? sp : sq;
}

surd surd::operator-() const {
    surd r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

surd operator+(const surd& a, const rat& b) { return surd(a.p_ + b, a.q_, a.m_); }
surd operator-(const surd& a, const rat& b) { return surd(a.p_ - b, a.q_, a.m_); }
surd operator*(const surd& a, const rat& b) { return surd(a.p_ * b, a.q_ * b, a.m_); }

// Rewrites y over x's radicand when both generate the same quadratic
// field, i.e. when m_x * m_y is a perfect square: sqrt(m_y) =
// (s / m_x) * sqrt(m_x) with s = isqrt(m_x m_y). Returns false otherwise.
static bool rebase(const surd& x, const surd& y, surd& y_out) {
    const big_int& mx = x.radicand();
    const big_int& my = y.radicand();
    if (mx == my) {
        y_out = y;
        return true;
    }
    big_int prod = mx * my;
    big_int s = isqrt(prod);
    if (!(s * s == prod)) return false;
    y_out = surd(y.rational_part(), y.coeff() * rat(s) / rat(mx), mx);
    return true;
}

surd operator+(const surd& a, const surd& b) {
    if (a.is_rational()) return b + a.p_;
    if (b.is_rational()) return a + b.p_;
    surd b2;
    if (!rebase(a, b, b2))
        throw mixed_radicals_error("surd: addition across distinct radicands");
    return surd(a.p_ + b2.p_, a.q_ + b2.q_, a.m_);
}

surd surd::square() const {
    // (p + q sqrt m)^2 = p^2 + q^2 m + 2pq sqrt m
    return surd(p_ * p_ + q_ * q_ * rat(m_), rat(2) * p_ * q_, m_);
}

std::strong_ordering surd_cmp(const surd& x, const surd& y) {
    if (!x.is_rational() && !y.is_rational()) {
        surd y2;
        if (!rebase(x, y, y2))
            throw mixed_radicals_error("surd_cmp: distinct radicands");
        surd diff(x.rational_part() - y2.rational_part(), x.coeff() - y2.coeff(),
                  x.radicand());
        return diff.sign() <=> 0;
    }
    const big_int& m = x.is_rational() ? y.radicand() : x.radicand();
    surd diff(x.rational_part() - y.rational_part(), x.coeff() - y.coeff(), m);
    return diff.sign() <=> 0;
}

std::strong_ordering surd_cmp(const surd& x, const rat& y) { return surd_cmp(x, surd(y)); }

big_int floor_of_surd(const surd& x) {
    if (x.is_rational()) return x.as_rat().floor();
    // Write x = (A + B*sqrt(m)) / E with E > 0 integral.
    big_int E = x.rational_part().den() * x.coeff().den();
    big_int A = x.rational_part().num() * x.coeff().den();
    big_int B = x.coeff().num() * x.rational_part().den();
    const big_int& m = x.radicand();

    // n <= x  <=>  n*E - A <= B*sqrt(m), decided by sign-aware squaring.
    auto le_x = [&](const big_int& n) {
        big_int L = n * E - A;
        if (!B.is_negative()) {
            if (!L.is_negative()) return L * L <= B * B * m;
            return true;
        }
        if (!L.is_negative()) return false;
        return L * L >= B * B * m;
    };

    // Estimate from an integer sqrt, then settle with the exact predicate.
    big_int s = isqrt(B * B * m);
    if (B.is_negative()) s = -s - big_int(1);
    big_int n = (A + s) / E - big_int(2);
    while (le_x(n + big_int(1))) n = n + big_int(1);
    assert(le_x(n));
    return n;
}

big_int ceil_of_surd(const surd& x) { return -floor_of_surd(-x); }

std::string surd::to_string() const {
    if (is_rational()) return p_.to_string();
    std::string qs = q_.to_string();
    std::string sep = "+";
    if (q_.is_negative()) {
        sep = "-";
        qs = (-q_).to_string();
    }
    return p_.to_string() + sep + qs + "*sqrt(" + m_.to_string() + ")";
}

surd surd::from_string(std::string_view s) {
    auto sq = s.find("*sqrt(");
    if (sq == std::string_view::npos) return surd(rat::from_string(s));
    if (s.back() != ')') throw std::invalid_argument("surd: malformed string");
    big_int m = big_int::from_string(std::string(s.substr(sq + 6, s.size() - sq - 7)));
    std::string_view head = s.substr(0, sq);
    // Split p and q at the sign that follows p's denominator.
    auto slash = head.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("surd: malformed string");
    auto sep = head.find_first_of("+-", slash + 1);
    if (sep == std::string_view::npos) throw std::invalid_argument("surd: malformed string");
    rat p = rat::from_string(head.substr(0, sep));
    rat q = rat::from_string(head.substr(sep + 1));
    if (head[sep] == '-') q = -q;
    return surd(std::move(p), std::move(q), std::move(m));
}

} // namespace castelbound::numerics
