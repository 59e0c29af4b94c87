// SPDX-License-Identifier: Apache-2.0

#include "castelbound/gvseries.hpp"

#include <algorithm>

#include "castelbound/bounds.hpp"
#include "castelbound/constants.hpp"
#include "castelbound/errors.hpp"

namespace castelbound::gvseries {

void gv_table::set(long long g, long long d, big_int v) {
    if (g < 0 || d < 1) throw std::domain_error("gv_table: need g >= 0, d >= 1");
    if (v.is_zero())
        entries.erase({g, d});
    else
        entries[{g, d}] = std::move(v);
    d_max = std::max(d_max, d);
}

big_int gv_table::get(long long g, long long d) const {
    auto it = entries.find({g, d});
    return it == entries.end() ? big_int(0) : it->second;
}

long long gv_table::g_max_for(long long d) const {
    long long g = -1;
    for (const auto& [key, v] : entries) {
        (void)v;
        if (key.second == d) g = std::max(g, key.first);
    }
    return g;
}

long long gv_table::g_max() const {
    long long g = 0;
    for (const auto& [key, v] : entries) {
        (void)v;
        g = std::max(g, key.first);
    }
    return g;
}

laurent_q pt_table::degree_series(long long d) const {
    laurent_q s;
    for (const auto& [key, v] : entries)
        if (key.second == d) s.set_coeff(key.first, v);
    auto it = valid_to.find(d);
    s.truncate(it != valid_to.end() ? it->second : window_hi);
    return s;
}

laurent_q g_block(long long g, long long r, long long trunc_hi) {
    if (g < 0 || r < 1) throw std::domain_error("g_block: need g >= 0, r >= 1");
    laurent_q out;
    if (g >= 1) {
        // (x - 1/x)^{2g-2} with x^2 = (-q)^r: exponents r(g-1-j), signs
        // (-1)^j (-1)^{r(g-1-j)}.
        long long n = 2 * g - 2;
        rat binom(1);
        for (long long j = 0; j <= n; ++j) {
            long long e = g - 1 - j;
            long long sign = ((j + r * std::llabs(e)) % 2 == 0) ? 1 : -1;
            out.set_coeff(r * e, out.coeff(r * e) + binom * rat(sign));
            binom = binom * rat(n - j) / rat(j + 1);
        }
        return out;
    }
    // g = 0: ascending branch of the inverse square, sum_j j (-q)^{rj}.
    for (long long j = 1; r * j <= trunc_hi; ++j)
        out.set_coeff(r * j, rat((r * j) % 2 == 0 ? j : -j));
    out.truncate(trunc_hi);
    return out;
}

namespace {

std::vector<laurent_q> logpt_internal(const gv_table& gv, long long cap) {
    std::vector<laurent_q> f(static_cast<std::size_t>(gv.d_max) + 1);
    for (const auto& [key, value] : gv.entries) {
        auto [g, d0] = key;
        rat v(value);
        for (long long r = 1; r * d0 <= gv.d_max; ++r) {
            rat coeff = v * rat((g - 1) % 2 == 0 ? 1 : -1) / rat(r);
            f[static_cast<std::size_t>(r * d0)] += g_block(g, r, cap).scaled(coeff);
        }
    }
    return f;
}

/// Blanket bound on the exponent spread of any t-degree coefficient.
long long block_spread(const gv_table& gv) {
    long long m = 0;
    for (const auto& [key, v] : gv.entries) {
        (void)v;
        auto [g, d0] = key;
        if (g >= 1) m = std::max(m, (gv.d_max / d0) * (g - 1));
    }
    return m;
}

} // namespace

std::vector<laurent_q> gv_to_logpt(const gv_table& gv, const series_window& window) {
    auto f = logpt_internal(gv, window.hi);
    std::vector<laurent_q> out;
    for (std::size_t d = 1; d < f.size(); ++d) out.push_back(f[d].clip(window.lo, window.hi));
    return out;
}

pt_table pt_from_gv(const gv_table& gv, const series_window& window) {
    if (window.lo > window.hi) throw std::domain_error("pt_from_gv: bad window");
    pt_table out;
    out.d_max = gv.d_max;
    out.window_lo = window.lo;
    out.window_hi = window.hi;
    if (gv.d_max == 0) return out;

    // Headroom: each multiplication in the exp recurrence can lose at
    // most the factor's depth below zero, bounded by block_spread.
    long long cap = window.hi + gv.d_max * std::max(0LL, block_spread(gv)) + 2;
    auto f = logpt_internal(gv, cap);

    std::vector<laurent_q> p(static_cast<std::size_t>(gv.d_max) + 1);
    p[0] = laurent_q(rat(1));
    for (long long m = 1; m <= gv.d_max; ++m) {
        laurent_q acc;
        for (long long j = 1; j <= m; ++j)
            acc += (f[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(m - j)])
                       .scaled(rat(j));
        p[static_cast<std::size_t>(m)] = acc.scaled(rat(1, m));
    }

    for (long long d = 1; d <= gv.d_max; ++d) {
        bool cut = false;
        laurent_q clipped = p[static_cast<std::size_t>(d)].clip(window.lo, window.hi, &cut);
        out.clipped = out.clipped || cut;
        out.valid_to[d] = clipped.trunc_above();
        for (const auto& [e, c] : clipped.coeffs()) out.entries[{e, d}] = c;
    }
    return out;
}

gv_table gv_from_pt(const pt_table& pt, const series_window& window) {
    gv_table out;
    if (pt.d_max == 0) return out;
    out.d_max = pt.d_max;

    std::vector<laurent_q> p(static_cast<std::size_t>(pt.d_max) + 1);
    p[0] = laurent_q(rat(1));
    for (long long d = 1; d <= pt.d_max; ++d)
        p[static_cast<std::size_t>(d)] = pt.degree_series(d);

    std::vector<laurent_q> f(static_cast<std::size_t>(pt.d_max) + 1);
    for (long long m = 1; m <= pt.d_max; ++m) {
        laurent_q acc;
        for (long long j = 1; j < m; ++j)
            acc += (f[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(m - j)])
                       .scaled(rat(j, m));
        f[static_cast<std::size_t>(m)] = p[static_cast<std::size_t>(m)] - acc;
    }

    for (long long d = 1; d <= pt.d_max; ++d) {
        laurent_q residual = f[static_cast<std::size_t>(d)];
        long long trunc = residual.trunc_above();
        // Multiple covers of lower degrees are already known; remove them.
        for (long long r = 2; r <= d; ++r) {
            if (d % r != 0) continue;
            long long d0 = d / r;
            for (long long g = 0; g <= out.g_max_for(d0); ++g) {
                big_int v = out.get(g, d0);
                if (v.is_zero()) continue;
                rat coeff = rat(v) * rat((g - 1) % 2 == 0 ? 1 : -1) / rat(r);
                residual -= g_block(g, r, trunc).scaled(coeff);
            }
        }

        long long g_top = 0;
        // Genus >= 2 blocks are the only sources of negative exponents;
        // the lowest one determines the genus and its coefficient is the
        // invariant itself.
        while (!residual.is_zero() && residual.min_exponent() < 0) {
            long long e = residual.min_exponent();
            long long g = 1 - e;
            rat c = residual.coeff(e);
            if (!c.is_integer())
                throw inconsistent_series_error("gv_from_pt: non-integer invariant at g=" +
                                                std::to_string(g));
            rat sign((g - 1) % 2 == 0 ? 1 : -1);
            residual -= g_block(g, 1, trunc).scaled(c * sign);
            out.set(g, d, c.num());
            g_top = std::max(g_top, g);
        }
        if (trunc >= 0) {
            rat c1 = residual.coeff(0);
            if (!c1.is_zero()) {
                if (!c1.is_integer())
                    throw inconsistent_series_error("gv_from_pt: non-integer genus-1 value");
                out.set(1, d, c1.num());
                residual -= laurent_q(c1);
                g_top = std::max(g_top, 1LL);
            }
        }
        if (trunc >= 1) {
            rat c0 = residual.coeff(1);
            if (!c0.is_zero()) {
                if (!c0.is_integer())
                    throw inconsistent_series_error("gv_from_pt: non-integer genus-0 value");
                out.set(0, d, c0.num());
                residual -= g_block(0, 1, trunc).scaled(rat(-1) * c0);
            }
        }
        if (!residual.vanishes_up_to(trunc))
            throw inconsistent_series_error(
                "gv_from_pt: residual series does not match any finite table at d=" +
                std::to_string(d));
        if (window.hi < d * (g_top - 1))
            throw window_too_narrow_error("gv_from_pt: window must satisfy e_max >= d*(g_max-1)");
    }
    return out;
}

rat lemgv_f(long long x, long long N, long long n) {
    if (x < 1 || N < 1 || n < 1) throw std::domain_error("lemgv_f: arguments must be >= 1");
    if (N * N < n - 1) throw precondition_error("lemgv_f: requires N^2 >= n - 1");
    if (x >= N) return bounds::surface_bound(x, n);
    return rat(bounds::planar_bound(x));
}

partition_report partition_check(long long n, long long N, long long x, long long cap) {
    if (x > cap) throw too_large_error("partition_check: x exceeds the configured cap");
    if (x < 1) throw std::domain_error("partition_check: x must be >= 1");
    // Maximize sum_i (f(x_i) - 1) over all partitions with a part-sum DP;
    // the inequality holds iff the maximum stays below f(x) - 1.
    std::vector<rat> best(static_cast<std::size_t>(x) + 1, rat(0));
    std::vector<long long> take(static_cast<std::size_t>(x) + 1, 0);
    for (long long t = 1; t <= x; ++t) {
        bool first = true;
        for (long long part = 1; part <= t; ++part) {
            rat cand = lemgv_f(part, N, n) - rat(1) + best[static_cast<std::size_t>(t - part)];
            if (first || cand > best[static_cast<std::size_t>(t)]) {
                best[static_cast<std::size_t>(t)] = cand;
                take[static_cast<std::size_t>(t)] = part;
                first = false;
            }
        }
    }
    partition_report rep;
    rep.holds = lemgv_f(x, N, n) - rat(1) >= best[static_cast<std::size_t>(x)];
    if (!rep.holds) {
        for (long long t = x; t > 0; t -= take[static_cast<std::size_t>(t)])
            rep.witness.push_back(take[static_cast<std::size_t>(t)]);
    }
    return rep;
}

std::vector<vanishing_violation> vanishing_consistency(const gv_table& gv, long long n,
                                                       long long m, long long N_H) {
    std::vector<vanishing_violation> out;
    for (const auto& [key, value] : gv.entries) {
        auto [g, d] = key;
        if (value.is_zero()) continue;
        if (constants::gv_vanish(g, d, n, m, N_H)) out.push_back({g, d, value});
    }
    return out;
}

} // namespace castelbound::gvseries
