// SPDX-License-Identifier: Apache-2.0

#include "castelbound/chern.hpp"

#include "castelbound/errors.hpp"

namespace castelbound::tiltwalls {

void polarization::validate() const {
    if (n < 1 || s < 1 || m_h < 1)
        throw config_error("polarization: n, s, m_H must all be >= 1");
}

tilt_point::tilt_point(rat b_, rat a_sq_) : b(std::move(b_)), a_sq(std::move(a_sq_)) {
    if (a_sq.is_negative()) throw std::domain_error("tilt_point: a_sq < 0");
}

chern_h twist(const chern_h& ch, const rat& b) {
    rat b2 = b * b;
    rat b3 = b2 * b;
    chern_h r;
    r.c0 = ch.c0;
    r.c1 = ch.c1 - b * ch.c0;
    r.c2 = ch.c2 - b * ch.c1 + b2 * rat(1, 2) * ch.c0;
    r.c3_known = ch.c3_known;
    if (ch.c3_known)
        r.c3 = ch.c3 - b * ch.c2 + b2 * rat(1, 2) * ch.c1 - b3 * rat(1, 6) * ch.c0;
    return r;
}

chern_h ideal_class_p3(long long d, long long g) {
    if (d < 1) throw std::domain_error("ideal_class_p3: d must be >= 1");
    return chern_h(rat(1), rat(0), rat(-d), rat(g + 2 * d - 1));
}

chern_h line_bundle_class(const rat& twist_by) {
    return twist(chern_h(rat(1), rat(0), rat(0), rat(0)), twist_by);
}

chern_h quotient_class_in_surface(long long d, long long g, long long n_surf) {
    if (d < 1 || n_surf < 1)
        throw std::domain_error("quotient_class_in_surface: d, n_surf must be >= 1");
    rat n(n_surf);
    return chern_h(rat(0), n, rat(-d) - n * n * rat(1, 2),
                   n * n * n * rat(1, 6) + rat(g + 2 * d - 1));
}

rat discriminant(const chern_h& ch) { return ch.c1 * ch.c1 - rat(2) * ch.c0 * ch.c2; }

central_charge_value central_charge(const chern_h& ch, const tilt_point& pt) {
    chern_h t = twist(ch, pt.b);
    return {pt.a_sq * rat(1, 2) * t.c0 - t.c2, t.c1};
}

std::optional<rat> slope(const chern_h& ch, const tilt_point& pt) {
    central_charge_value z = central_charge(ch, pt);
    if (z.im.is_zero()) return std::nullopt;
    return -z.re / z.im;
}

rat bmt_q(const chern_h& ch, const tilt_point& pt) {
    if (!ch.c3_known) throw unknown_ch3_error("bmt_q: ch_3 unknown for this class");
    chern_h t = twist(ch, pt.b);
    return pt.a_sq * discriminant(ch) + rat(4) * t.c2 * t.c2 - rat(6) * t.c1 * t.c3;
}

rat bmt_genus_threshold(long long d, const rat& b0) {
    if (!b0.is_negative()) throw std::domain_error("bmt_genus_threshold: b0 must be < 0");
    // Q at (b0, a_sq = 0) is linear in g with slope 6*b0.
    tilt_point boundary(b0, rat(0));
    rat q0 = bmt_q(ideal_class_p3(d, 0), boundary);
    rat q1 = bmt_q(ideal_class_p3(d, 1), boundary);
    return -q0 / (q1 - q0);
}

} // namespace castelbound::tiltwalls
