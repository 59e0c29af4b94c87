// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>

#include "castelbound/chern.hpp"
#include "castelbound/surd.hpp"

namespace castelbound::tiltwalls {

using numerics::surd;

/// Numerical wall W(v, w): either a vertical line b = const or a
/// semicircle centered on the b-axis, stored by center and squared
/// radius.
struct wall_geometry {
    struct vertical {
        rat b;
    };
    struct semicircle {
        rat center;
        rat radius_sq; // > 0

        /// Rightmost point of the semicircle on the b-axis.
        surd rightmost() const;
        surd leftmost() const;
    };
    std::variant<vertical, semicircle> shape;

    bool is_vertical() const { return std::holds_alternative<vertical>(shape); }
    bool is_semicircle() const { return std::holds_alternative<semicircle>(shape); }
    const semicircle& circle() const;
    const vertical& line() const;
};

/// Solves mu_{a,b}(v) = mu_{a,b}(w) symbolically. Returns nullopt when the
/// locus is empty or the two classes have everywhere-equal slope; throws
/// degenerate_class_error when both classes vanish.
std::optional<wall_geometry> numerical_wall(const chern_h& v, const chern_h& w);

/// center + sqrt(radius_sq); throws not_a_semicircle_error on verticals.
surd wall_rightmost(const wall_geometry& wall);

/// b_d = -sqrt(d/n) and rho_d = sqrt(d/(4n)) for ideal-sheaf classes.
surd b_d(long long d, long long n);
surd rho_d(long long d, long long n);

/// Degree cap for the residual curve of a wall in the window b_d <= b < 0:
/// d1 < min{ d - k^2 n/2, d + k^2 n/2 - k*sqrt(2nd) }, decided exactly.
bool admissible_d1(long long d, long long n, long long k, long long d1);

/// Largest admissible d1 >= 0, or -1 when the admissible set is empty.
long long max_admissible_d1(long long d, long long n, long long k);

/// Wall-existence test for a divisor D in |O(k)| with deg(C cap D) given:
/// d - deg(C cap D) < min{ d - k^2 n/2, d + k^2 n/2 - k*sqrt(2nd) }.
/// Requires 1 <= k <= -b_d.
bool divisor_wall_exists(long long d, long long n, long long k, long long deg_cd);

/// g(C) = g(C1) + g(C2) + k*d1 - 1 across a curve wall.
long long genus_decomposition(long long g1, long long g2, long long k, long long d1);

} // namespace castelbound::tiltwalls
