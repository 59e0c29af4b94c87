// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "castelbound/rat.hpp"

namespace castelbound::tiltwalls {

using numerics::big_int;
using numerics::rat;

/// Polarized 3-fold profile: degree n = H^3, least s with |sH| nonempty,
/// and m_H with m_H*H very ample.
struct polarization {
    long long n = 1;
    long long s = 1;
    long long m_h = 1;
    std::string label;

    /// Divisor-minimum degree n_H = s*n*m_H^2 under the rank-one factorial
    /// convention.
    long long n_h() const { return s * n * m_h * m_h; }
    void validate() const;
};

/// H-normalized truncated Chern character (ch_{H,0..3}). The third
/// component may be unknown; operations that need it check the flag.
struct chern_h {
    rat c0, c1, c2;
    rat c3;
    bool c3_known = false;

    chern_h() = default;
    chern_h(rat a0, rat a1, rat a2)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c3(0), c3_known(false) {}
    chern_h(rat a0, rat a1, rat a2, rat a3)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)), c3(std::move(a3)),
          c3_known(true) {}

    bool is_zero_class() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

    friend bool operator==(const chern_h& a, const chern_h& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2 && a.c3_known == b.c3_known &&
               (!a.c3_known || a.c3 == b.c3);
    }
};

/// Point (a, b) of the tilt half-plane, parameterized by a^2 so that all
/// formulas in play stay rational. a_sq == 0 marks a boundary evaluation.
struct tilt_point {
    rat b;
    rat a_sq;

    tilt_point(rat b_, rat a_sq_);
    bool is_boundary() const { return a_sq.is_zero(); }
};

/// b-twisted character exp(-bH).ch in normalized coordinates.
chern_h twist(const chern_h& ch, const rat& b);

/// ch_H(I_C) for a degree-d genus-g curve in P^3: (1, 0, -d, g+2d-1).
chern_h ideal_class_p3(long long d, long long g);

/// ch_H(O(-n)) on a 3-fold of any degree (normalized coordinates).
chern_h line_bundle_class(const rat& twist_by);

/// ch_H(I_{C/D}) for C of degree d and genus g on a degree-n_surf surface
/// D in P^3: (0, n, -d - n^2/2, n^3/6 + g + 2d - 1).
chern_h quotient_class_in_surface(long long d, long long g, long long n_surf);

/// Normalized discriminant c1^2 - 2 c0 c2 (a positive multiple of
/// Delta_H, so all sign tests agree).
rat discriminant(const chern_h& ch);

struct central_charge_value {
    rat re, im;
};

/// Z_{a,b} in normalized coordinates: re = a_sq/2*c0^b - c2^b, im = c1^b.
central_charge_value central_charge(const chern_h& ch, const tilt_point& pt);

/// Tilt slope -re/im; nullopt encodes +infinity (im == 0).
std::optional<rat> slope(const chern_h& ch, const tilt_point& pt);

/// BMT quadratic in the P^3 normalization (H^3 = 1):
///   Q = a_sq*(c1^2 - 2 c0 c2) + 4 (c2^b)^2 - 6 c1^b c3^b.
/// Boundary points (a_sq = 0) are permitted.
rat bmt_q(const chern_h& ch, const tilt_point& pt);

/// The rational genus g* where bmt_q(ideal_class_p3(d, g), (b0, 0))
/// crosses zero; Q >= 0 exactly for g <= g*.
rat bmt_genus_threshold(long long d, const rat& b0);

} // namespace castelbound::tiltwalls
