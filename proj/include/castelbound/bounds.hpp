// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "castelbound/rat.hpp"
#include "castelbound/surd.hpp"

namespace castelbound::bounds {

using numerics::big_int;
using numerics::rat;
using numerics::surd;

/// epsilon(d, n) = (f/2)(n - f - 1 + f/n) with d = f mod n, 0 <= f < n.
/// Periodic correction sharpening the quadratic genus bound.
rat epsilon(long long d, long long n);

/// Conjectural ideal correction table for a named 3-fold: values for
/// residues 1..n, with values[n] = 0 and values[f] = values[n-f].
struct epsilon_table {
    long long n = 0;
    std::vector<rat> values; // index 0 <-> residue 1, ..., index n-1 <-> residue n

    /// Lookup by degree using the periodicity; accepts any d >= 1.
    const rat& at_degree(long long d) const;
    void validate() const;
};

/// (d-1)(d-2)/2, with equality exactly for plane curves.
long long planar_bound(long long d);

/// d^2/(2n) + (n-4)/2*d + 1 - epsilon(d, n): curves on a degree-n surface
/// in P^3.
rat surface_bound(long long d, long long n_surf);

/// 2/(-3 b0)*d^2 + (-b0/3 - 2)*d + 1: the boundary Bogomolov-Gieseker
/// bound at (a, b) = (0, b0), b0 < 0.
rat bmt_bound(long long d, const rat& b0);

/// Same bound evaluated at b0 = -sqrt(d): d*sqrt(d) - 2d + 1 as an exact
/// surd.
surd bmt_bound_at_bd(long long d);

/// d^2/(2sn) + (s n m^3 - 4m)/2*d + 1 - epsilon(m d, s n m^2).
rat asymptotic_main_bound(long long d, long long n, long long m, long long s);

/// d^2/(2n) + d/2 + 1.
rat castelnuovo_conjecture_bound(long long d, long long n);

/// d^2/(2n) + d/2 + 1 - eps(d), where eps is the target table when given
/// and epsilon(d, n) otherwise.
rat optimal_bound(long long d, long long n, const epsilon_table* table);

/// ch_3 cap for surfaces in a Calabi-Yau 4-fold:
/// d^2/(2n) + (n-5)/2*d - epsilon(d, n).
rat cy4_ch3_bound(long long d, long long n);

} // namespace castelbound::bounds
