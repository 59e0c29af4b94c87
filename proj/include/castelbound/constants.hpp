// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "castelbound/bounds.hpp"
#include "castelbound/chern.hpp"

namespace castelbound::constants {

using numerics::big_int;
using numerics::rat;
using tiltwalls::polarization;

/// One inequality participating in a "smallest integer such that ..."
/// definition, with the least value satisfying it alone. Values are
/// arbitrary precision: the closing thresholds of the theorem chain grow
/// past 64 bits already for small inputs.
struct inequality_status {
    std::string id;
    std::string detail;
    big_int min_value = big_int(1);
    bool binding = false;
};

/// A solved constant: the value satisfies every listed inequality and
/// value-1 violates the recorded witness.
struct constant_report {
    std::string name;
    big_int value;
    std::vector<inequality_status> inequalities;
    std::string minimality_witness;

    const inequality_status* find(const std::string& id) const;
};

/// Smallest N0 >= 1 with
///   d^2/(2s) + s d/2 - eps(d,s) <= d^2/(2n) + n d/2 - eps(d,n)
/// for all d >= N0 and integers n <= s <= 4n/3. Decided by finite
/// verification up to the quadratic horizon plus an exact check that the
/// quadratic part dominates the periodic band beyond it.
constant_report solve_N0(long long n);

/// Smallest N1 >= N0 satisfying the five wall-control inequalities
/// ("b-d", "18-epsilon", "no-wall", "high-deg", "jiaocha"); the square
/// root conditions are solved by exact squaring.
constant_report solve_N1(long long n, long long l);

/// Smallest N >= N1 with
///   k + k^2/(2n) - (k/n) sqrt(2N) + (n^2-n)/8 <= -N1^2/2
/// for all integers n <= k <= 4n/3.
constant_report solve_N_nl(long long n, long long l);

/// Smallest N >= ceil(N_{n_D,l} / m_H) such that the n_D surface bound is
/// <= the n_target surface bound at m_H*d for every d >= N. Requires
/// n_target <= n_D.
constant_report cor_in_divisor_threshold(long long n_target, long long n_D, long long m_H,
                                         long long l);

struct theorem_chain {
    long long n_H = 0;
    constant_report N2, N3, N4, N_H;
};

/// The N2 <= N3 <= N4 <= N_H chain for a polarized 3-fold. nH_by_k maps
/// k to the divisor-minimum degree in |k m_H H| for 1 <= k <= 4 n_H/3;
/// when empty it defaults to the constant s*n*m_H^2.
theorem_chain solve_theorem_chain(const polarization& pol,
                                  std::map<long long, long long> nH_by_k = {});

struct degree_threshold {
    rat exact;
    big_int value; // ceil(exact)
    bool ceiled = false;
};

/// (n^3 m^5 - n^2 m^3)/4 + n m (m^2 N_H^2 - n + 1), ceiled to an integer
/// when fractional.
degree_threshold gv_degree_threshold(long long n, long long m, const big_int& N_H);

/// DT/PT vanishing: d >= N_H and
///   s < -( d^2/(2n) + (n m^3 - 4m)/2 d - eps(m d, n m^2) ).
bool pt_dt_vanish(long long s, long long d, long long n, long long m, long long N_H);

/// GV vanishing: d >= gv_degree_threshold(n, m, N_H) and
///   g > d^2/(2n) + (n m^3 - 4m)/2 d + 1 - eps(m d, n m^2).
bool gv_vanish(long long g, long long d, long long n, long long m, long long N_H);

/// Canonical rendering of the gv_vanish genus inequality, e.g. for the
/// quintic (n=5, m=1): "g > 1/10*d^2 + 1/2*d + 1 - eps(d, 5)".
std::string gv_vanish_inequality(long long n, long long m);

/// CY4 emptiness: d >= N_H and beta.H < -cy4_ch3_bound(d, n).
bool cy4_empty(long long d, const rat& beta_h, long long n, long long N_H);

} // namespace castelbound::constants
