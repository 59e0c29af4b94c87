// SPDX-License-Identifier: Apache-2.0

#include "castelbound/constants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "castelbound/errors.hpp"

namespace castelbound::constants {

using bounds::epsilon;

const inequality_status* constant_report::find(const std::string& id) const {
    for (const auto& s : inequalities)
        if (s.id == id) return &s;
    return nullptr;
}

namespace {

/// Least integer N >= 1 with sqrt(2*scale*N) >= rhs: N = ceil(rhs^2 / (2*scale)).
big_int least_sqrt_bound(const rat& rhs, long long scale) {
    if (rhs.is_negative()) return big_int(1);
    big_int c = (rhs * rhs / rat(2 * scale)).ceil();
    return c < big_int(1) ? big_int(1) : c;
}

struct scan_outcome {
    long long first_good;       // all d >= first_good satisfy the family
    long long horizon;          // explicit checks ran up to here
    std::string witness_detail; // failing instance just below first_good
};

/// Decides "phi_s(d) >= 0 for all d >= N and all s in the family", where
/// phi_s(d) = alpha_s d^2 + beta_s d + (periodic part bounded below by
/// -band). Exact scan up to each member's dominance horizon, beyond which
/// alpha d^2 + beta d - band >= 0 and increasing.
scan_outcome least_dominated(const std::vector<long long>& family,
                             const std::function<rat(long long, long long)>& phi,
                             const std::function<rat(long long)>& alpha,
                             const std::function<rat(long long)>& beta, const rat& band) {
    long long horizon = 1;
    for (long long s : family) {
        rat a = alpha(s), b = beta(s);
        if (a.is_zero()) continue; // identity member, phi == 0
        long long t = std::max(1LL, (-b / (rat(2) * a)).ceil().to_i64());
        while (rat(t) * rat(t) * a + rat(t) * b - band < rat(0)) ++t;
        horizon = std::max(horizon, t);
    }
    long long fail_max = 0;
    std::string witness;
    for (long long d = 1; d <= horizon; ++d) {
        for (long long s : family) {
            if (phi(d, s) < rat(0)) {
                fail_max = d;
                std::ostringstream os;
                os << "fails at d=" << d << ", s=" << s;
                witness = os.str();
            }
        }
    }
    return {fail_max + 1, horizon, witness};
}

std::vector<long long> range_incl(long long lo, long long hi) {
    std::vector<long long> v;
    for (long long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

long long four_thirds(long long n) { return (4 * n) / 3; }

void finalize(constant_report& r) {
    big_int v(1);
    for (const auto& s : r.inequalities)
        if (s.min_value > v) v = s.min_value;
    r.value = v;
    for (auto& s : r.inequalities) {
        s.binding = s.min_value == r.value;
        if (s.binding && r.minimality_witness.empty() && s.min_value > big_int(1))
            r.minimality_witness = s.id;
    }
}

} // namespace

constant_report solve_N0(long long n) {
    if (n < 1) throw std::domain_error("solve_N0: n must be >= 1");
    auto phi = [n](long long d, long long s) {
        return rat(d * d) / rat(2 * n) + rat(n * d, 2) - epsilon(d, n) -
               (rat(d * d) / rat(2 * s) + rat(s * d, 2) - epsilon(d, s));
    };
    auto alpha = [n](long long s) { return rat(1, 2 * n) - rat(1, 2 * s); };
    auto beta = [n](long long s) { return rat(n - s, 2); };
    scan_outcome sc =
        least_dominated(range_incl(n, four_thirds(n)), phi, alpha, beta, rat(n * n - n, 8));
    constant_report r;
    r.name = "N0(n=" + std::to_string(n) + ")";
    std::ostringstream os;
    os << "domination over s in [" << n << ", " << four_thirds(n) << "], horizon "
       << sc.horizon;
    r.inequalities.push_back({"eps-domination", os.str(), big_int(sc.first_good), false});
    finalize(r);
    if (r.value > big_int(1)) r.minimality_witness = "eps-domination: " + sc.witness_detail;
    return r;
}

constant_report solve_N1(long long n, long long l) {
    if (n < 1 || l < 1) throw std::domain_error("solve_N1: n, l must be >= 1");
    constant_report n0 = solve_N0(n);
    constant_report r;
    r.name = "N1(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")";

    r.inequalities.push_back({"n0", "N1 >= N0", n0.value, false});
    big_int floor_bd = rat(16 * n * n, 9).ceil();
    if (floor_bd < big_int((n - 1) * l + 1)) floor_bd = big_int((n - 1) * l + 1);
    r.inequalities.push_back({"b-d", "N1 >= max{16n^2/9, (n-1)l+1}", floor_bd, false});

    rat eps_max(0);
    for (long long d = 1; d <= n; ++d) eps_max = std::max(eps_max, epsilon(d, n));
    big_int eps_floor = (rat(18, n) * eps_max).ceil();
    if (eps_floor < big_int(1)) eps_floor = big_int(1);
    r.inequalities.push_back(
        {"18-epsilon", "N1 >= (18/n) max eps(d,n) over 0<d<=n", eps_floor, false});

    big_int no_wall(1);
    for (long long k = 1; k <= n - 1; ++k)
        no_wall = std::max(no_wall, least_sqrt_bound(rat(l) + rat(k, 2), 1));
    r.inequalities.push_back(
        {"no-wall", "k sqrt(2N) - k^2/2 >= kl for 1 <= k <= n-1", no_wall, false});

    big_int high_deg(1);
    for (long long k = n; k <= four_thirds(n); ++k)
        high_deg = std::max(high_deg,
                            least_sqrt_bound((rat(n0.value) - rat(1)) / rat(k) + rat(k, 2), 1));
    r.inequalities.push_back(
        {"high-deg", "k sqrt(2N) - k^2/2 >= N0 - 1 for n <= k <= 4n/3", high_deg, false});

    big_int jiaocha(1);
    for (long long k = n; k <= four_thirds(n); ++k)
        jiaocha = std::max(
            jiaocha, least_sqrt_bound((rat(4 * n * n, 3) - rat(1)) / rat(k) + rat(k, 2), 1));
    r.inequalities.push_back(
        {"jiaocha", "k sqrt(2N) - k^2/2 >= 4n^2/3 - 1 for n <= k <= 4n/3", jiaocha, false});

    finalize(r);
    return r;
}

constant_report solve_N_nl(long long n, long long l) {
    constant_report n1 = solve_N1(n, l);
    constant_report r;
    r.name = "N_nl(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")";
    r.inequalities.push_back({"n1", "N >= N1", n1.value, false});
    big_int first_sum(1);
    for (long long k = n; k <= four_thirds(n); ++k) {
        rat rhs = (rat(k) + rat(k * k) / rat(2 * n) + rat(n * n - n, 8) +
                   rat(n1.value) * rat(n1.value) / rat(2)) *
                  rat(n) / rat(k);
        first_sum = std::max(first_sum, least_sqrt_bound(rhs, 1));
    }
    r.inequalities.push_back(
        {"first-sum", "k + k^2/(2n) - (k/n) sqrt(2N) + (n^2-n)/8 <= -N1^2/2", first_sum,
         false});
    finalize(r);
    return r;
}

constant_report cor_in_divisor_threshold(long long n_target, long long n_D, long long m_H,
                                         long long l) {
    if (n_target > n_D)
        throw std::domain_error("cor_in_divisor_threshold: requires n_target <= n_D");
    if (m_H < 1) throw std::domain_error("cor_in_divisor_threshold: m_H must be >= 1");
    constant_report inner = solve_N_nl(n_D, l);
    big_int base = (rat(inner.value) / rat(m_H)).ceil();

    constant_report r;
    r.name = "N_divisor(n_target=" + std::to_string(n_target) +
             ", n_D=" + std::to_string(n_D) + ")";
    r.inequalities.push_back({"surface-threshold", "N >= ceil(N_{nD,l} / m_H)", base, false});

    auto phi = [&](long long d, long long) {
        long long md = m_H * d;
        return bounds::surface_bound(md, n_target) - bounds::surface_bound(md, n_D);
    };
    auto alpha = [&](long long) {
        return rat(m_H * m_H) * (rat(1, 2 * n_target) - rat(1, 2 * n_D));
    };
    auto beta = [&](long long) { return rat(m_H) * rat(n_target - n_D, 2); };
    scan_outcome sc =
        least_dominated({n_D}, phi, alpha, beta, rat(n_target * n_target - n_target, 8));
    r.inequalities.push_back({"bound-domination",
                              "n_D surface bound <= n_target surface bound for d >= N",
                              big_int(n_target == n_D ? 1 : sc.first_good), false});
    finalize(r);
    if (r.value == big_int(sc.first_good) && sc.first_good > 1)
        r.minimality_witness = "bound-domination: " + sc.witness_detail;
    return r;
}

theorem_chain solve_theorem_chain(const polarization& pol,
                                  std::map<long long, long long> nH_by_k) {
    pol.validate();
    if (nH_by_k.empty()) {
        long long def = pol.n_h();
        for (long long k = 1; k <= four_thirds(def); ++k) nH_by_k[k] = def;
    }
    long long n = 0;
    for (const auto& [k, v] : nH_by_k) {
        (void)k;
        if (v < 1) throw config_error("solve_theorem_chain: nH values must be >= 1");
        n = n == 0 ? v : std::min(n, v);
    }
    for (long long k = 1; k <= four_thirds(n); ++k)
        if (!nH_by_k.count(k))
            throw incomplete_map_error("solve_theorem_chain: nH_by_k misses k=" +
                                       std::to_string(k));
    long long s_max = n;
    for (long long k = 1; k <= four_thirds(n); ++k) s_max = std::max(s_max, nH_by_k[k]);

    theorem_chain chain;
    chain.n_H = n;

    // N2 = max over k of the per-linear-system divisor threshold; the
    // projected surface in |k m_H H| has P^3 degree k m_H^3 H^3.
    chain.N2.name = "N2";
    for (long long k = 1; k <= four_thirds(n); ++k) {
        constant_report per = cor_in_divisor_threshold(
            n, nH_by_k[k], pol.m_h, k * pol.m_h * pol.m_h * pol.m_h * pol.n);
        std::ostringstream os;
        os << "k=" << k << " (n_D=" << nH_by_k[k] << ")";
        chain.N2.inequalities.push_back({"in-divisor", os.str(), per.value, false});
    }
    finalize(chain.N2);

    {
        long long m = pol.m_h;
        auto phi = [&](long long d, long long s) {
            long long md = m * d;
            return rat(md) * rat(md) / rat(2 * n) + rat(n, 2) * rat(md) - epsilon(md, n) -
                   (rat(md) * rat(md) / rat(2 * s) + rat(s, 2) * rat(md) - epsilon(md, s));
        };
        auto alpha = [&](long long s) { return rat(m * m) * (rat(1, 2 * n) - rat(1, 2 * s)); };
        auto beta = [&](long long s) { return rat(m) * rat(n - s, 2); };
        scan_outcome sc =
            least_dominated(range_incl(n, s_max), phi, alpha, beta, rat(n * n - n, 8));
        chain.N3.name = "N3";
        chain.N3.inequalities.push_back({"n2", "N3 >= N2", chain.N2.value, false});
        chain.N3.inequalities.push_back({"eps-domination-thm",
                                         "domination over s in [n, max nH]",
                                         big_int(sc.first_good), false});
        finalize(chain.N3);
    }

    {
        long long m = pol.m_h;
        chain.N4.name = "N4";
        chain.N4.inequalities.push_back({"n3", "N4 >= N3", chain.N3.value, false});
        chain.N4.inequalities.push_back(
            {"b-d-thm", "N4 >= 16n^2/9", rat(16 * n * n, 9).ceil(), false});
        rat eps_max(0);
        for (long long d = 1; d <= n; ++d) eps_max = std::max(eps_max, epsilon(m * d, n));
        big_int eps_floor = (rat(18, n) * eps_max).ceil();
        if (eps_floor < big_int(1)) eps_floor = big_int(1);
        chain.N4.inequalities.push_back(
            {"18-epsilon-thm", "N4 >= (18/n) max eps(m_H d, n) over 0<d<=n", eps_floor,
             false});
        big_int high_deg(1), jiaocha(1);
        for (long long k = 1; k <= four_thirds(n); ++k) {
            rat n3_rhs = rat(m) * (rat(chain.N3.value) - rat(1)) / rat(k) + rat(k, 2);
            high_deg = std::max(high_deg, least_sqrt_bound(n3_rhs, m));
            jiaocha =
                std::max(jiaocha, least_sqrt_bound(rat(n) + rat(k, 2) - rat(1, k), m));
        }
        chain.N4.inequalities.push_back(
            {"high-deg-thm", "k sqrt(2 m_H N4) - k^2/2 >= m_H (N3 - 1)", high_deg, false});
        chain.N4.inequalities.push_back(
            {"jiaocha-thm", "k sqrt(2 m_H N4) - k^2/2 >= kn - 1", jiaocha, false});
        finalize(chain.N4);
    }

    {
        long long m = pol.m_h;
        chain.N_H.name = "N_H";
        chain.N_H.inequalities.push_back({"n4", "N_H >= N4", chain.N4.value, false});
        big_int sum_thm(1);
        for (long long k = 1; k <= four_thirds(n); ++k) {
            rat rhs = (rat(k) + rat(k * k) / rat(2 * n) + rat(n * n - n) / rat(8 * m) +
                       rat(m) * rat(chain.N4.value) * rat(chain.N4.value) / rat(2)) *
                      rat(n) / rat(k);
            sum_thm = std::max(sum_thm, least_sqrt_bound(rhs, m));
        }
        chain.N_H.inequalities.push_back(
            {"sum-thm",
             "k + k^2/(2n) - (k/n) sqrt(2 m_H N_H) + (n^2-n)/(8 m_H) <= -m_H N4^2/2", sum_thm,
             false});
        finalize(chain.N_H);
    }
    return chain;
}

degree_threshold gv_degree_threshold(long long n, long long m, const big_int& N_H) {
    if (n < 1 || m < 1 || N_H < big_int(1))
        throw std::domain_error("gv_degree_threshold: all arguments must be >= 1");
    rat nn(n), mm(m), nh(N_H);
    rat exact = (nn.pow(3) * mm.pow(5) - nn.pow(2) * mm.pow(3)) / rat(4) +
                nn * mm * (mm * mm * nh * nh - nn + rat(1));
    degree_threshold t;
    t.exact = exact;
    t.value = exact.ceil();
    t.ceiled = !exact.is_integer();
    return t;
}

bool pt_dt_vanish(long long s, long long d, long long n, long long m, long long N_H) {
    if (d < N_H) return false;
    rat rhs = rat(d * d) / rat(2 * n) + rat(n * m * m * m - 4 * m, 2) * rat(d) -
              epsilon(m * d, n * m * m);
    return rat(s) < -rhs;
}

bool gv_vanish(long long g, long long d, long long n, long long m, long long N_H) {
    degree_threshold t = gv_degree_threshold(n, m, N_H);
    if (big_int(d) < t.value) return false;
    rat rhs = rat(d * d) / rat(2 * n) + rat(n * m * m * m - 4 * m, 2) * rat(d) + rat(1) -
              epsilon(m * d, n * m * m);
    return rat(g) > rhs;
}

std::string gv_vanish_inequality(long long n, long long m) {
    rat c2(1, 2 * n);
    rat c1(n * m * m * m - 4 * m, 2);
    std::ostringstream os;
    os << "g > " << c2.to_string() << "*d^2 ";
    os << (c1.is_negative() ? "- " : "+ ");
    os << c1.abs().to_string() << "*d + 1 - eps(";
    if (m == 1)
        os << "d";
    else
        os << m << "*d";
    os << ", " << n * m * m << ")";
    return os.str();
}

bool cy4_empty(long long d, const rat& beta_h, long long n, long long N_H) {
    if (d < N_H) return false;
    return beta_h < -bounds::cy4_ch3_bound(d, n);
}

} // namespace castelbound::constants
