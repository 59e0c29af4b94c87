// SPDX-License-Identifier: Apache-2.0

#include "castelbound/bounds.hpp"

#include "castelbound/errors.hpp"

namespace castelbound::bounds {

rat epsilon(long long d, long long n) {
    if (d < 1 || n < 1) throw std::domain_error("epsilon: d, n must be >= 1");
    long long f = d % n;
    return rat(f, 2) * (rat(n - f - 1) + rat(f, n));
}

const rat& epsilon_table::at_degree(long long d) const {
    if (d < 1) throw std::domain_error("epsilon_table: d must be >= 1");
    long long f = ((d - 1) % n) + 1; // residue in 1..n
    return values[static_cast<std::size_t>(f - 1)];
}

void epsilon_table::validate() const {
    if (n < 1 || values.size() != static_cast<std::size_t>(n))
        throw config_error("epsilon_table: need exactly n values");
    if (!values.back().is_zero())
        throw config_error("epsilon_table: value at residue n must be 0");
    for (long long f = 1; f <= n - 1; ++f)
        if (!(values[f - 1] == values[n - f - 1]))
            throw config_error("epsilon_table: symmetry values[f] == values[n-f] violated");
}

long long planar_bound(long long d) {
    if (d < 1) throw std::domain_error("planar_bound: d must be >= 1");
    return (d - 1) * (d - 2) / 2;
}

rat surface_bound(long long d, long long n_surf) {
    if (d < 1 || n_surf < 1) throw std::domain_error("surface_bound: d, n must be >= 1");
    return rat(d * d) / rat(2 * n_surf) + rat(n_surf - 4, 2) * rat(d) + rat(1) -
           epsilon(d, n_surf);
}

rat bmt_bound(long long d, const rat& b0) {
    if (!b0.is_negative()) throw std::domain_error("bmt_bound: b0 must be < 0");
    return rat(2) / (rat(-3) * b0) * rat(d) * rat(d) + (-b0 / rat(3) - rat(2)) * rat(d) +
           rat(1);
}

surd bmt_bound_at_bd(long long d) {
    if (d < 1) throw std::domain_error("bmt_bound_at_bd: d must be >= 1");
    return surd(rat(1 - 2 * d), rat(d), big_int(d));
}

rat asymptotic_main_bound(long long d, long long n, long long m, long long s) {
    if (d < 1 || n < 1 || m < 1 || s < 1)
        throw std::domain_error("asymptotic_main_bound: all arguments must be >= 1");
    rat dd(d);
    return dd * dd / rat(2 * s * n) + rat(s * n * m * m * m - 4 * m, 2) * dd + rat(1) -
           epsilon(m * d, s * n * m * m);
}

rat castelnuovo_conjecture_bound(long long d, long long n) {
    if (d < 1 || n < 1)
        throw std::domain_error("castelnuovo_conjecture_bound: d, n must be >= 1");
    return rat(d * d) / rat(2 * n) + rat(d, 2) + rat(1);
}

rat optimal_bound(long long d, long long n, const epsilon_table* table) {
    rat eps = table ? table->at_degree(d) : epsilon(d, n);
    return castelnuovo_conjecture_bound(d, n) - eps;
}

rat cy4_ch3_bound(long long d, long long n) {
    if (d < 1 || n < 1) throw std::domain_error("cy4_ch3_bound: d, n must be >= 1");
    return rat(d * d) / rat(2 * n) + rat(n - 5, 2) * rat(d) - epsilon(d, n);
}

} // namespace castelbound::bounds
