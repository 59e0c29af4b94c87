// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "castelbound/bigint.hpp"
#include "castelbound/laurent.hpp"

namespace castelbound::gvseries {

using numerics::big_int;
using numerics::rat;

/// Integer invariants indexed by (genus, degree), finitely supported.
struct gv_table {
    std::map<std::pair<long long, long long>, big_int> entries; // (g, d) -> value
    long long d_max = 0;

    void set(long long g, long long d, big_int v);
    big_int get(long long g, long long d) const;
    long long g_max_for(long long d) const; // -1 when empty in degree d
    long long g_max() const;

    friend bool operator==(const gv_table& a, const gv_table& b) {
        return a.entries == b.entries;
    }
};

/// Rational stable-pair coefficients indexed by (s, d) with per-degree
/// exactness bounds.
struct pt_table {
    std::map<std::pair<long long, long long>, rat> entries; // (s, d) -> value
    long long d_max = 0;
    long long window_lo = 0, window_hi = 0;
    std::map<long long, long long> valid_to; // per-degree exact-up-to bound
    bool clipped = false;

    laurent_q degree_series(long long d) const;
};

struct series_window {
    long long lo = 0, hi = 0;
};

/// ((-q)^{r/2} - (-q)^{-r/2})^{2g-2} as an honest Laurent object in q.
/// For g >= 1 the expansion is finite and exact; for g = 0 it is the
/// ascending-q branch sum_{j>=1} j (-1)^{rj} q^{rj}, truncated at
/// trunc_hi.
laurent_q g_block(long long g, long long r, long long trunc_hi);

/// Per-t-degree coefficients of log PT built from a GV table:
/// coefficient of t^d is sum over r | d, g of
/// GV_{g, d/r} * (-1)^{g-1}/r * g_block(g, r).
std::vector<laurent_q> gv_to_logpt(const gv_table& gv, const series_window& window);

/// Exponentiates the t-graded log series and extracts PT coefficients.
pt_table pt_from_gv(const gv_table& gv, const series_window& window);

/// Inverse: log the PT series, subtract multiple-cover contributions, and
/// peel each degree triangularly by genus. Throws inconsistent_series_error
/// when no finitely supported integer table matches.
gv_table gv_from_pt(const pt_table& pt, const series_window& window);

/// Piecewise bound function driving the partition inequality: planar
/// below N, surface-type from N on. Requires N^2 >= n - 1.
rat lemgv_f(long long x, long long N, long long n);

struct partition_report {
    bool holds = true;
    std::vector<long long> witness; // a violating partition when !holds
};

/// Checks f(x) - 1 >= sum_i (f(x_i) - 1) over all partitions of x by
/// maximizing the right side exactly; the witness realizes the maximum
/// when the inequality fails.
partition_report partition_check(long long n, long long N, long long x,
                                 long long cap = 40);

struct vanishing_violation {
    long long g = 0, d = 0;
    big_int value;
};

/// Entries of the table that a proved vanishing region says must be zero
/// but are not.
std::vector<vanishing_violation> vanishing_consistency(const gv_table& gv, long long n,
                                                       long long m, long long N_H);

} // namespace castelbound::gvseries
