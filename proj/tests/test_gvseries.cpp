#include <doctest.h>

#include <random>

#include "castelbound/errors.hpp"
#include "castelbound/constants.hpp"
#include "castelbound/gvseries.hpp"

using namespace castelbound;
using namespace castelbound::gvseries;
using numerics::big_int;
using numerics::rat;

namespace {

std::mt19937_64 rng(90210);

long long rnd(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng);
}

gv_table random_table(long long g_max, long long d_max, long long mag) {
    gv_table t;
    int entries = (int)rnd(1, 8);
    for (int i = 0; i < entries; ++i)
        t.set(rnd(0, g_max), rnd(1, d_max), big_int(rnd(-mag, mag)));
    if (t.entries.empty()) t.set(1, 1, big_int(1));
    t.d_max = d_max;
    return t;
}

series_window window_for(long long g_max, long long d_max) {
    long long hi = d_max * std::max(1LL, g_max - 1) + d_max + 2;
    return {-hi, hi};
}

} // namespace

TEST_CASE("g_block identities") {
    CHECK(g_block(1, 1, 10) == laurent_q(rat(1)));
    CHECK(g_block(1, 7, 10) == laurent_q(rat(1)));

    laurent_q g2 = g_block(2, 1, 10);
    CHECK(g2.coeff(1) == rat(-1));
    CHECK(g2.coeff(0) == rat(-2));
    CHECK(g2.coeff(-1) == rat(-1));
    CHECK(g2.coeffs().size() == 3);

    laurent_q g0 = g_block(0, 1, 3);
    CHECK(g0.coeff(1) == rat(-1));
    CHECK(g0.coeff(2) == rat(2));
    CHECK(g0.coeff(3) == rat(-3));
    CHECK(g0.clipped());

    // Multiplying the g=0 branch by the g=2 polynomial recovers 1 within
    // the window: the inverse-square oracle.
    laurent_q prod = g0 * g2;
    CHECK(prod.coeff(0) == rat(1));
    for (long long e = prod.min_exponent(); e <= prod.trunc_above(); ++e)
        if (e != 0) CHECK(prod.coeff(e) == rat(0));
}

TEST_CASE("g_block top exponent and integrality") {
    for (long long g = 1; g <= 6; ++g)
        for (long long r = 1; r <= 4; ++r) {
            laurent_q b = g_block(g, r, 100);
            if (g == 1) {
                CHECK(b.coeff(0) == rat(1));
                continue;
            }
            CHECK(b.max_exponent() == r * (g - 1));
            CHECK(b.min_exponent() == -r * (g - 1));
            for (const auto& [e, c] : b.coeffs()) {
                (void)e;
                CHECK(c.is_integer());
            }
            // q <-> 1/q symmetry.
            for (const auto& [e, c] : b.coeffs()) CHECK(b.coeff(-e) == c);
        }
}

TEST_CASE("gv_to_logpt examples") {
    gv_table t;
    t.set(1, 1, big_int(1));
    t.d_max = 4;
    auto f = gv_to_logpt(t, {-6, 6});
    // t^1 carries the invariant itself; t^r only the r-fold cover 1/r.
    CHECK(f[0].coeffs() == std::map<long long, rat>{{0, rat(1)}});
    CHECK(f[1].coeffs() == std::map<long long, rat>{{0, rat(1, 2)}});
    CHECK(f[2].coeffs() == std::map<long long, rat>{{0, rat(1, 3)}});
    gv_table zero;
    zero.d_max = 3;
    for (const auto& s : gv_to_logpt(zero, {-4, 4})) CHECK(s.is_zero());

    gv_table g0;
    g0.set(0, 1, big_int(3));
    g0.d_max = 1;
    auto f0 = gv_to_logpt(g0, {-4, 4});
    // -3 * sum (-1)^k k q^k = 3q - 6q^2 + ...
    CHECK(f0[0].coeff(1) == rat(3));
    CHECK(f0[0].coeff(2) == rat(-6));
    CHECK(f0[0].coeff(4) == rat(-12));
}

TEST_CASE("pt_from_gv examples") {
    gv_table empty;
    empty.d_max = 3;
    pt_table pt = pt_from_gv(empty, {-5, 5});
    CHECK(pt.entries.empty());

    gv_table t;
    t.set(1, 1, big_int(1));
    t.d_max = 2;
    pt_table p = pt_from_gv(t, {-5, 5});
    CHECK(p.entries.at({0, 1}) == rat(1));
    // t^2 coefficient: 1/2 (F_1)^2 + F_2 = 1/2 + 1/2 = 1 at q^0.
    CHECK(p.entries.at({0, 2}) == rat(1));
}

TEST_CASE("gv_from_pt inverts pt_from_gv on simple and random tables") {
    {
        gv_table t;
        t.set(1, 1, big_int(1));
        t.d_max = 2;
        pt_table p = pt_from_gv(t, {-6, 6});
        CHECK(gv_from_pt(p, {-6, 6}) == t);
    }
    {
        pt_table identity;
        identity.d_max = 2;
        identity.window_lo = -4;
        identity.window_hi = 4;
        identity.valid_to[1] = 4;
        identity.valid_to[2] = 4;
        gv_table back = gv_from_pt(identity, {-4, 4});
        CHECK(back.entries.empty());
    }
    for (int trial = 0; trial < 50; ++trial) {
        gv_table t = random_table(4, 6, 1000);
        series_window w = window_for(4, 6);
        pt_table p = pt_from_gv(t, w);
        gv_table back = gv_from_pt(p, w);
        CAPTURE(trial);
        CHECK(back == t);
    }
}

TEST_CASE("log of the exponentiated series reproduces the log coefficients") {
    for (int trial = 0; trial < 10; ++trial) {
        gv_table t = random_table(3, 5, 50);
        series_window w = window_for(3, 5);
        auto f = gv_to_logpt(t, w);
        pt_table p = pt_from_gv(t, w);
        // Rebuild the log from the pt table.
        std::vector<laurent_q> ps(static_cast<std::size_t>(t.d_max) + 1);
        ps[0] = laurent_q(rat(1));
        for (long long d = 1; d <= t.d_max; ++d) ps[(std::size_t)d] = p.degree_series(d);
        std::vector<laurent_q> fs(static_cast<std::size_t>(t.d_max) + 1);
        for (long long m = 1; m <= t.d_max; ++m) {
            laurent_q acc;
            for (long long j = 1; j < m; ++j)
                acc += (fs[(std::size_t)j] * ps[(std::size_t)(m - j)]).scaled(rat(j, m));
            fs[(std::size_t)m] = ps[(std::size_t)m] - acc;
        }
        for (long long d = 1; d <= t.d_max; ++d) {
            long long check_to = std::min(fs[(std::size_t)d].trunc_above(), w.hi);
            for (long long e = w.lo; e <= check_to; ++e)
                CHECK(fs[(std::size_t)d].coeff(e) == f[(std::size_t)(d - 1)].coeff(e));
        }
    }
}

TEST_CASE("per-degree log coefficients are symmetric for positive-genus tables") {
    gv_table t;
    t.set(1, 1, big_int(4));
    t.set(2, 1, big_int(-3));
    t.set(3, 2, big_int(7));
    t.d_max = 4;
    auto f = gv_to_logpt(t, {-20, 20});
    for (const auto& series : f)
        for (const auto& [e, c] : series.coeffs()) CHECK(series.coeff(-e) == c);
}

TEST_CASE("inconsistent pt tables are rejected") {
    pt_table bad;
    bad.d_max = 1;
    bad.window_lo = -4;
    bad.window_hi = 4;
    bad.valid_to[1] = 4;
    bad.entries[{-2, 1}] = rat(1, 2); // non-integer genus-3 invariant
    CHECK_THROWS_AS(gv_from_pt(bad, {-4, 4}), inconsistent_series_error);

    pt_table orphan;
    orphan.d_max = 1;
    orphan.window_lo = -4;
    orphan.window_hi = 4;
    orphan.valid_to[1] = 4;
    orphan.entries[{2, 1}] = rat(1); // no block combination matches
    CHECK_THROWS_AS(gv_from_pt(orphan, {-4, 4}), inconsistent_series_error);
}

TEST_CASE("lemgv_f piecewise values") {
    CHECK_THROWS_AS(lemgv_f(1, 1, 3), precondition_error);
    CHECK(lemgv_f(1, 2, 2) == rat(0));
    CHECK(lemgv_f(2, 2, 2) == rat(0)); // 1 - 2 + 1 - eps(2,2)
    for (long long x = 1; x <= 5; ++x) CHECK(lemgv_f(x, 6, 2) == rat((x - 1) * (x - 2) / 2));
}

TEST_CASE("partition check examples") {
    partition_report r = partition_check(1, 1, 2);
    CHECK(r.holds); // f(2)-1 = -1 >= -2
    CHECK_THROWS_AS(partition_check(1, 1, 100), too_large_error);

    // The trivial partition {x} forces equality, so the maximum is at
    // least f(x) - 1 and holds can only be equality-tight or a failure.
    for (long long x = 1; x <= 12; ++x) {
        partition_report rr = partition_check(2, 2, x);
        if (!rr.holds) {
            long long sum = 0;
            for (long long part : rr.witness) sum += part;
            CHECK(sum == x);
            rat lhs = lemgv_f(x, 2, 2) - rat(1);
            rat rhs(0);
            for (long long part : rr.witness) rhs += lemgv_f(part, 2, 2) - rat(1);
            CHECK(lhs < rhs);
        }
    }
}

TEST_CASE("partition inequality holds from the threshold on") {
    for (long long n = 1; n <= 3; ++n)
        for (long long N = 1; N <= 3; ++N) {
            if (N * N < n - 1) continue;
            long long threshold =
                ((rat(n * n * n - n * n, 4) + rat(n) * rat(N * N - n + 1)).ceil()).to_i64();
            for (long long x = std::max(1LL, threshold); x <= 40; ++x) {
                CAPTURE(n);
                CAPTURE(N);
                CAPTURE(x);
                CHECK(partition_check(n, N, x).holds);
            }
        }
}

TEST_CASE("vanishing consistency report") {
    gv_table clean;
    clean.d_max = 3;
    CHECK(vanishing_consistency(clean, 5, 1, 3).empty());

    long long thr = constants::gv_degree_threshold(5, 1, 3).value.to_i64();
    gv_table dirty;
    dirty.set(0, 2, big_int(11));
    // Plant an entry far above the proved bound.
    dirty.set(1000, thr, big_int(-1));
    dirty.d_max = thr;
    auto violations = vanishing_consistency(dirty, 5, 1, 3);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].g == 1000);
    CHECK(violations[0].d == thr);
    CHECK(violations[0].value == big_int(-1));
}

TEST_CASE("genus-0 tails set the clipping flags") {
    gv_table with_g0;
    with_g0.set(0, 1, big_int(2));
    with_g0.d_max = 2;
    auto f = gv_to_logpt(with_g0, {-4, 4});
    CHECK(f[0].clipped());
    CHECK(pt_from_gv(with_g0, {-4, 4}).clipped);

    gv_table only_g1;
    only_g1.set(1, 1, big_int(2));
    only_g1.d_max = 2;
    CHECK(!pt_from_gv(only_g1, {-4, 4}).clipped);
}
