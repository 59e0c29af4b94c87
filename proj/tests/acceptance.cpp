// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails. Every check is exact; tolerances appear only where a
// criterion states one.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "castelbound/bounds.hpp"
#include "castelbound/certifier.hpp"
#include "castelbound/constants.hpp"
#include "castelbound/gvseries.hpp"
#include "castelbound/tiltwalls.hpp"

using namespace castelbound;
using numerics::big_int;
using numerics::rat;
using numerics::surd;
using numerics::surd_cmp;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name << " ("
              << seconds << " s)";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

template <typename F>
void timed(int idx, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(idx, name, ok, seconds, detail);
}

bool criterion_epsilon(std::string& detail) {
    using bounds::epsilon;
    if (!(epsilon(1, 5) == rat(8, 5)) || !(epsilon(2, 5) == rat(12, 5))) {
        detail = "quintic table values";
        return false;
    }
    const auto& x5 = certifier::builtin_target("x5");
    if (!(x5.eps->at_degree(1) == epsilon(1, 5)) || !(x5.eps->at_degree(2) == epsilon(2, 5))) {
        detail = "shipped table disagrees with the closed form";
        return false;
    }
    for (long long n = 1; n <= 40; ++n)
        for (long long d = 1; d <= 200; ++d) {
            rat e = epsilon(d, n);
            long long f = d % n;
            if (e < rat(0) || e > rat(n * n - n, 8)) {
                detail = "band violated";
                return false;
            }
            if (!(e == epsilon(f == 0 ? n : f, n)) ||
                (f != 0 && !(e == epsilon(n - f, n)))) {
                detail = "periodicity or symmetry violated";
                return false;
            }
        }
    return true;
}

bool criterion_wall_geometry(std::string& detail) {
    using namespace tiltwalls;
    chern_h v(rat(1), rat(0), rat(-4));
    auto wall = numerical_wall(v, line_bundle_class(rat(2)));
    if (!wall || !wall->is_semicircle() || !(wall->circle().center == rat(-3)) ||
        !(wall->circle().radius_sq == rat(1))) {
        detail = "quartic wall geometry wrong";
        return false;
    }
    if (surd_cmp(wall_rightmost(*wall), rat(-2)) != std::strong_ordering::equal) {
        detail = "rightmost point wrong";
        return false;
    }
    // 50-point exact membership sampling.
    chern_h w = line_bundle_class(rat(2));
    int checked = 0;
    for (int j = -25; j <= 25; ++j) {
        if (j == 0) continue;
        rat u = rat(j, 26);
        rat a_sq = rat(1) - u * u;
        tilt_point pt(rat(-3) + u, a_sq);
        auto sv = slope(v, pt), sw = slope(w, pt);
        if (!sv || !sw) continue;
        if (!(*sv == *sw)) {
            detail = "slope equality fails on the wall";
            return false;
        }
        ++checked;
    }
    if (checked < 50) {
        detail = "fewer than 50 sample points";
        return false;
    }

    // Non-crossing across the full grid: all semicircle walls of
    // v = (1,0,-d) satisfy r^2 = c^2 - 2d, so distinct walls are nested
    // (same side) or separated (opposite sides); decided in rat arithmetic
    // on consecutive centers, which bounds all pairs in this family.
    for (long long d = 1; d <= 20; ++d) {
        chern_h vd(rat(1), rat(0), rat(-d));
        std::set<rat> centers;
        for (long long r = -8; r <= 8; ++r)
            for (long long c = -8; c <= 8; ++c)
                for (long long e = -8; e <= 8; ++e) {
                    auto wd = numerical_wall(vd, chern_h(rat(r), rat(c), rat(e)));
                    if (!wd || !wd->is_semicircle()) continue;
                    const auto& s = wd->circle();
                    if (!(s.radius_sq == s.center * s.center - rat(2 * d))) {
                        detail = "axis power broken";
                        return false;
                    }
                    centers.insert(s.center);
                }
        std::vector<rat> sorted(centers.begin(), centers.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            const rat& c1 = sorted[i];
            const rat& c2 = sorted[i + 1];
            rat r1s = c1 * c1 - rat(2 * d), r2s = c2 * c2 - rat(2 * d);
            rat lhs = (c2 - c1) * (c2 - c1) - r1s - r2s;
            bool same_side = c1.is_negative() == c2.is_negative();
            if (lhs.is_negative() != same_side || !(lhs * lhs > rat(4) * r1s * r2s)) {
                std::ostringstream os;
                os << "walls cross at d=" << d;
                detail = os.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_cor_wall_caps(std::string& detail) {
    bool ok = tiltwalls::max_admissible_d1(6, 1, 1) == 3 &&
              tiltwalls::max_admissible_d1(7, 1, 1) == 3 &&
              tiltwalls::max_admissible_d1(8, 1, 1) == 4;
    if (!ok) detail = "degree caps disagree";
    return ok;
}

bool criterion_bmt_equivalence(std::string& detail) {
    for (long long d = 1; d <= 30; ++d)
        for (const rat& b0 : {rat(-1), rat(-3, 2), rat(-2), rat(-3)}) {
            if (!(tiltwalls::bmt_genus_threshold(d, b0) == bounds::bmt_bound(d, b0))) {
                std::ostringstream os;
                os << "threshold mismatch at d=" << d << ", b0=" << b0.to_string();
                detail = os.str();
                return false;
            }
            // Largest integer g with Q >= 0 is the floor of the bound.
            long long cap = bounds::bmt_bound(d, b0).floor().to_i64();
            tiltwalls::tilt_point boundary(b0, rat(0));
            if (tiltwalls::bmt_q(tiltwalls::ideal_class_p3(d, cap), boundary).is_negative() ||
                !tiltwalls::bmt_q(tiltwalls::ideal_class_p3(d, cap + 1), boundary)
                     .is_negative()) {
                detail = "floor cap misplaced";
                return false;
            }
        }
    return true;
}

bool criterion_certified_tables(std::string& detail) {
    auto check_target = [&](const std::string& name,
                            const std::vector<long long>& expect) -> bool {
        certifier::engine eng(certifier::builtin_target(name));
        auto table = eng.certify_table();
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (table[i]->bound != expect[i]) {
                std::ostringstream os;
                os << name << " d=" << (i + 1) << ": got " << table[i]->bound << ", want "
                   << expect[i];
                detail = os.str();
                return false;
            }
        return true;
    };
    for (const char* name : {"x5", "x24", "x33", "x223", "x2222"}) {
        const auto& t = certifier::builtin_target(name);
        std::vector<long long> floors;
        for (long long d = 1; d <= t.d1_max; ++d)
            floors.push_back(t.optimal_bound_at(d).floor().to_i64());
        if (!check_target(name, floors)) return false;
    }
    if (!check_target("pfaff-gr27-x", {0, 0, 0, 1, 1})) return false;
    if (!check_target("pfaff-gr27-y", {0, 0, 1, 1, 2})) return false;
    certifier::engine x5(certifier::builtin_target("x5"));
    if (x5.certify(9)->bound != 12 || x5.certify(10)->bound != 16 ||
        x5.certify(14)->bound != 26) {
        detail = "quintic spot values";
        return false;
    }
    return true;
}

bool criterion_constants(std::string& detail) {
    // Independent brute-force minimality on the small grid.
    auto sqrt_holds = [](long long k, long long N, const rat& rhs) {
        surd lhs = surd::sqrt_int(big_int(2 * N)) * rat(k) + rat(-k * k, 2);
        return surd_cmp(lhs, rhs) != std::strong_ordering::less;
    };
    for (long long n = 1; n <= 4; ++n) {
        constants::constant_report n0 = constants::solve_N0(n);
        long long n0_v = n0.value.to_i64();
        auto n0_holds = [&](long long N) {
            for (long long d = N; d <= N + 4 * n * n + 60; ++d)
                for (long long s = n; s <= 4 * n / 3; ++s) {
                    rat lhs = rat(d * d) / rat(2 * s) + rat(s * d, 2) - bounds::epsilon(d, s);
                    rat rhs = rat(d * d) / rat(2 * n) + rat(n * d, 2) - bounds::epsilon(d, n);
                    if (lhs > rhs) return false;
                }
            return true;
        };
        if (!n0_holds(n0_v) || (n0_v > 1 && n0_holds(n0_v - 1))) {
            detail = "N0 minimality fails at n=" + std::to_string(n);
            return false;
        }
        for (long long l = 1; l <= 6; ++l) {
            constants::constant_report n1 = constants::solve_N1(n, l);
            long long n1_v = n1.value.to_i64();
            auto n1_sqrt_all = [&](long long N) {
                for (long long k = 1; k <= n - 1; ++k)
                    if (!sqrt_holds(k, N, rat(k * l))) return false;
                for (long long k = n; k <= 4 * n / 3; ++k) {
                    if (!sqrt_holds(k, N, rat(n0_v - 1))) return false;
                    if (!sqrt_holds(k, N, rat(4 * n * n, 3) - rat(1))) return false;
                }
                return true;
            };
            if (!n1_sqrt_all(n1_v)) {
                detail = "N1 fails its own inequalities";
                return false;
            }
            constants::constant_report nnl = constants::solve_N_nl(n, l);
            long long nnl_v = nnl.value.to_i64();
            auto first_sum_holds = [&](long long N) {
                for (long long k = n; k <= 4 * n / 3; ++k) {
                    surd lhs = surd::sqrt_int(big_int(2 * N)) * rat(k, n);
                    rat rhs = rat(k) + rat(k * k) / rat(2 * n) + rat(n * n - n, 8) +
                              rat(n1_v) * rat(n1_v) / rat(2);
                    if (surd_cmp(lhs, rhs) == std::strong_ordering::less) return false;
                }
                return true;
            };
            if (!first_sum_holds(nnl_v)) {
                detail = "N_nl fails the summation inequality";
                return false;
            }
            if (nnl_v > n1_v && first_sum_holds(nnl_v - 1)) {
                detail = "N_nl not minimal";
                return false;
            }
            if (nnl_v < n1_v || n1_v < n0_v) {
                detail = "dependency order broken";
                return false;
            }
            for (long long m = 1; m <= 2; ++m) {
                constants::constant_report cid =
                    constants::cor_in_divisor_threshold(n, n, m, l);
                big_int base = (rat(nnl.value) / rat(m)).ceil();
                if (!(cid.value == base)) {
                    detail = "equal-degree divisor threshold is not the ceil term";
                    return false;
                }
            }
        }
        tiltwalls::polarization pol{n, 1, 1, "grid"};
        constants::theorem_chain chain = constants::solve_theorem_chain(pol);
        if (chain.N3.value < chain.N2.value || chain.N4.value < chain.N3.value ||
            chain.N_H.value < chain.N4.value) {
            detail = "theorem chain order broken";
            return false;
        }
    }
    if (!(constants::solve_N1(2, 4).find("no-wall")->min_value == big_int(11))) {
        detail = "no-wall sub-case at (2,4) is not 11";
        return false;
    }
    return true;
}

bool criterion_gv_pt(std::string& detail) {
    using namespace gvseries;
    laurent_q one = g_block(1, 3, 10);
    if (!(one.coeffs() == std::map<long long, rat>{{0, rat(1)}})) {
        detail = "g=1 block is not 1";
        return false;
    }
    laurent_q g2 = g_block(2, 1, 10);
    if (!(g2.coeff(1) == rat(-1) && g2.coeff(0) == rat(-2) && g2.coeff(-1) == rat(-1))) {
        detail = "g=2 block wrong";
        return false;
    }
    std::mt19937_64 rng(424242);
    auto rnd = [&](long long lo, long long hi) {
        return (long long)(lo + (long long)(rng() % (unsigned long long)(hi - lo + 1)));
    };
    for (int trial = 0; trial < 50; ++trial) {
        gv_table t;
        int entries = (int)rnd(1, 10);
        for (int i = 0; i < entries; ++i) t.set(rnd(0, 4), rnd(1, 6), big_int(rnd(-1000, 1000)));
        if (t.entries.empty()) t.set(2, 3, big_int(17));
        t.d_max = 6;
        series_window w{-26, 26};
        pt_table p = pt_from_gv(t, w);
        gv_table back = gv_from_pt(p, w);
        if (!(back == t)) {
            detail = "round trip failed on trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool criterion_partition(std::string& detail) {
    long long below_threshold_failures = 0;
    for (long long n = 1; n <= 3; ++n)
        for (long long N = 1; N <= 3; ++N) {
            if (N * N < n - 1) continue;
            long long threshold =
                (rat(n * n * n - n * n, 4) + rat(n) * rat(N * N - n + 1)).ceil().to_i64();
            for (long long x = 1; x <= 40; ++x) {
                gvseries::partition_report r = gvseries::partition_check(n, N, x);
                if (x >= threshold && !r.holds) {
                    std::ostringstream os;
                    os << "fails above threshold at n=" << n << ", N=" << N << ", x=" << x;
                    detail = os.str();
                    return false;
                }
                if (x < threshold && !r.holds) ++below_threshold_failures;
            }
        }
    std::cout << "         (below-threshold partition violations observed: "
              << below_threshold_failures << ", reported but not asserted)\n";
    return true;
}

bool criterion_vanishing_shape(std::string& detail) {
    std::string got = constants::gv_vanish_inequality(5, 1);
    if (got != "g > 1/10*d^2 + 1/2*d + 1 - eps(d, 5)") {
        detail = "emitted: " + got;
        return false;
    }
    return true;
}

bool criterion_asymptotics(std::string& detail) {
    const long long d = 10000000;
    for (auto [n, m, s] : {std::tuple<long long, long long, long long>{5, 1, 1},
                           {8, 1, 1},
                           {2, 2, 1}}) {
        rat ratio = bounds::asymptotic_main_bound(d, n, m, s) / (rat(d) * rat(d));
        rat diff = (ratio - rat(1, 2 * s * n)).abs();
        if (!(diff < rat(1, 1000))) {
            std::ostringstream os;
            os << "slow convergence at (n,m,s)=(" << n << "," << m << "," << s << ")";
            detail = os.str();
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    timed(1, "epsilon table cross-check, symmetry, periodicity, band", criterion_epsilon);
    timed(2, "wall geometry and grid non-crossing", criterion_wall_geometry);
    timed(3, "residual degree caps", criterion_cor_wall_caps);
    timed(4, "boundary BMT genus threshold identity", criterion_bmt_equivalence);
    timed(5, "certified low-degree tables", criterion_certified_tables);
    timed(6, "constants minimality on the small grid", criterion_constants);
    timed(7, "GV/PT round trip and block identities", criterion_gv_pt);
    timed(8, "partition inequality from the threshold on", criterion_partition);
    timed(9, "quintic vanishing inequality shape", criterion_vanishing_shape);
    timed(10, "asymptotic ratio at d = 10^7", criterion_asymptotics);

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
