// SPDX-License-Identifier: Apache-2.0

#include "castelbound/tiltwalls.hpp"

#include "castelbound/errors.hpp"

namespace castelbound::tiltwalls {

const wall_geometry::semicircle& wall_geometry::circle() const {
    if (!is_semicircle()) throw not_a_semicircle_error("wall is not a semicircle");
    return std::get<semicircle>(shape);
}

const wall_geometry::vertical& wall_geometry::line() const {
    if (!is_vertical()) throw error("wall is not vertical");
    return std::get<vertical>(shape);
}

surd wall_geometry::semicircle::rightmost() const {
    return surd::sqrt_rat(radius_sq) + center;
}

surd wall_geometry::semicircle::leftmost() const {
    return -surd::sqrt_rat(radius_sq) + center;
}

// Cross-multiplying re(v) im(w) = re(w) im(v) and collecting terms gives
//   (e1/2)(a^2 + b^2) - e2 b + e3 = 0
// with e1 = v0 w1 - v1 w0, e2 = v0 w2 - v2 w0, e3 = v1 w2 - v2 w1.
std::optional<wall_geometry> numerical_wall(const chern_h& v, const chern_h& w) {
    if (v.is_zero_class() && w.is_zero_class())
        throw degenerate_class_error("numerical_wall: both classes are zero");
    if (discriminant(v).is_negative())
        throw std::domain_error("numerical_wall: discriminant(v) < 0");

    rat e1 = v.c0 * w.c1 - v.c1 * w.c0;
    rat e2 = v.c0 * w.c2 - v.c2 * w.c0;
    rat e3 = v.c1 * w.c2 - v.c2 * w.c1;

    if (e1.is_zero()) {
        if (e2.is_zero()) return std::nullopt; // equal slope everywhere, or empty
        return wall_geometry{wall_geometry::vertical{e3 / e2}};
    }
    rat center = e2 / e1;
    rat radius_sq = center * center - rat(2) * e3 / e1;
    if (!(radius_sq > rat(0))) return std::nullopt;
    return wall_geometry{wall_geometry::semicircle{center, radius_sq}};
}

surd wall_rightmost(const wall_geometry& wall) { return wall.circle().rightmost(); }

surd b_d(long long d, long long n) {
    if (d < 1 || n < 1) throw std::domain_error("b_d: d, n must be >= 1");
    return -surd::sqrt_rat(rat(d, n));
}

surd rho_d(long long d, long long n) {
    if (d < 1 || n < 1) throw std::domain_error("rho_d: d, n must be >= 1");
    return surd::sqrt_rat(rat(d, 4 * n));
}

bool admissible_d1(long long d, long long n, long long k, long long d1) {
    rat half_k2n = rat(k * k * n, 2);
    if (!(rat(d1) < rat(d) - half_k2n)) return false;
    // d1 < d + k^2 n / 2 - k sqrt(2nd)
    surd rhs = -(surd::sqrt_int(big_int(2 * n * d)) * rat(k)) + (rat(d) + half_k2n);
    return numerics::surd_cmp(rhs, rat(d1)) == std::strong_ordering::greater;
}

long long max_admissible_d1(long long d, long long n, long long k) {
    if (!admissible_d1(d, n, k, 0)) return -1;
    // Both caps decrease in nothing here: the set is downward closed, so
    // floor the strict minimum of the two bounds directly.
    rat cap1 = rat(d) - rat(k * k * n, 2);
    surd cap2 = -(surd::sqrt_int(big_int(2 * n * d)) * rat(k)) + (rat(d) + rat(k * k * n, 2));
    surd cap = numerics::surd_cmp(cap2, cap1) == std::strong_ordering::less ? cap2 : surd(cap1);
    big_int f = floor_of_surd(cap);
    // Strict inequality: when the cap is attained exactly, step down.
    if (numerics::surd_cmp(cap, rat(f)) == std::strong_ordering::equal) f = f - big_int(1);
    return f.to_i64();
}

bool divisor_wall_exists(long long d, long long n, long long k, long long deg_cd) {
    if (k < 1 || numerics::surd_cmp(-b_d(d, n), rat(k)) == std::strong_ordering::less)
        throw k_out_of_range_error("divisor_wall_exists: k exceeds -b_d");
    return admissible_d1(d, n, k, d - deg_cd);
}

long long genus_decomposition(long long g1, long long g2, long long k, long long d1) {
    return g1 + g2 + k * d1 - 1;
}

} // namespace castelbound::tiltwalls
