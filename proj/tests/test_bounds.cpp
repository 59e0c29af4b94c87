#include <doctest.h>

#include "castelbound/bounds.hpp"
#include "castelbound/errors.hpp"

using namespace castelbound;
using namespace castelbound::bounds;
using numerics::rat;
using numerics::surd;
using numerics::surd_cmp;

TEST_CASE("epsilon values and band") {
    CHECK(epsilon(5, 5) == rat(0));
    CHECK(epsilon(1, 5) == rat(8, 5));
    CHECK(epsilon(2, 5) == rat(12, 5));
    CHECK(epsilon(7, 2) == rat(1, 4));
    CHECK(epsilon(1, 6) == rat(25, 12));
    for (long long n = 1; n <= 40; ++n) {
        for (long long d = 1; d <= 200; ++d) {
            rat e = epsilon(d, n);
            CHECK(!(e < rat(0)));
            CHECK(!(e > rat(n * n - n, 8)));
            CHECK(e == epsilon(d % n == 0 ? n : d % n, n));
            long long f = d % n;
            if (f != 0) CHECK(e == epsilon(n - f, n));
        }
    }
}

TEST_CASE("planar bound") {
    CHECK(planar_bound(1) == 0);
    CHECK(planar_bound(2) == 0);
    CHECK(planar_bound(3) == 1);
    CHECK(planar_bound(5) == 6);
}

TEST_CASE("surface bound") {
    CHECK(surface_bound(10, 5) == rat(16));
    CHECK(surface_bound(7, 2) == rat(6));
    for (long long n = 1; n <= 8; ++n)
        CHECK(surface_bound(n, n) ==
              rat(n * n) / rat(2 * n) + rat((n - 4) * n, 2) + rat(1));
    // On a plane the surface bound is the planar bound.
    for (long long d = 1; d <= 20; ++d)
        CHECK(surface_bound(d, 1) == rat(planar_bound(d)));
}

TEST_CASE("bmt bound") {
    // b0 = -4n/3 specializes to d^2/(2n) + (4n/9 - 2) d + 1.
    for (long long n = 1; n <= 6; ++n) {
        rat b0 = rat(-4 * n, 3);
        for (long long d = 1; d <= 12; ++d)
            CHECK(bmt_bound(d, b0) ==
                  rat(d * d) / rat(2 * n) + (rat(4 * n, 9) - rat(2)) * rat(d) + rat(1));
    }
    CHECK(bmt_bound(7, rat(-2)) == rat(8));

    // The surd specialization at b0 = -sqrt(d) agrees with the rational
    // formula whenever d is a perfect square.
    for (long long r = 1; r <= 6; ++r) {
        long long d = r * r;
        surd v = bmt_bound_at_bd(d);
        CHECK(v.is_rational());
        CHECK(v.as_rat() == bmt_bound(d, rat(-r)));
    }
    CHECK(numerics::floor_of_surd(bmt_bound_at_bd(6)).to_i64() == 3);
}

TEST_CASE("asymptotic main bound") {
    for (long long d = 1; d <= 30; ++d)
        CHECK(asymptotic_main_bound(d, 5, 1, 1) ==
              rat(d * d, 10) + rat(d, 2) + rat(1) - epsilon(d, 5));
    CHECK(asymptotic_main_bound(8, 8, 1, 1) == rat(4 + 16 + 1));
    // m = s = 1 reduces to the surface bound.
    for (long long n = 1; n <= 9; ++n)
        for (long long d = 1; d <= 20; ++d)
            CHECK(asymptotic_main_bound(d, n, 1, 1) == surface_bound(d, n));
}

TEST_CASE("castelnuovo conjecture bound") {
    CHECK(castelnuovo_conjecture_bound(5, 5) == rat(6));
    CHECK(castelnuovo_conjecture_bound(10, 5) == rat(16));
    CHECK_THROWS(castelnuovo_conjecture_bound(0, 5));
}

TEST_CASE("surface vs castelnuovo difference identity") {
    for (long long n = 1; n <= 10; ++n)
        for (long long d = 1; d <= 3 * n + 5; ++d)
            CHECK(surface_bound(d, n) - castelnuovo_conjecture_bound(d, n) ==
                  rat(n - 5, 2) * rat(d) - epsilon(d, n));
}

TEST_CASE("epsilon_table lookup and validation") {
    epsilon_table x5;
    x5.n = 5;
    x5.values = {rat(8, 5), rat(12, 5), rat(12, 5), rat(8, 5), rat(0)};
    x5.validate();
    CHECK(x5.at_degree(1) == rat(8, 5));
    CHECK(x5.at_degree(7) == rat(12, 5));
    CHECK(x5.at_degree(10) == rat(0));
    CHECK(x5.at_degree(14) == rat(8, 5));

    epsilon_table bad = x5;
    bad.values[4] = rat(1);
    CHECK_THROWS_AS(bad.validate(), config_error);
    epsilon_table asym = x5;
    asym.values[0] = rat(1);
    CHECK_THROWS_AS(asym.validate(), config_error);
}

TEST_CASE("optimal bound") {
    epsilon_table x5;
    x5.n = 5;
    x5.values = {rat(8, 5), rat(12, 5), rat(12, 5), rat(8, 5), rat(0)};
    CHECK(optimal_bound(1, 5, &x5) == rat(0));
    CHECK(optimal_bound(5, 5, &x5) == rat(6));
    CHECK(optimal_bound(5, 5, &x5) == rat(planar_bound(5)));

    epsilon_table x24;
    x24.n = 8;
    x24.values = {rat(25, 16), rat(9, 4),  rat(33, 16), rat(1),
                  rat(33, 16), rat(9, 4),  rat(25, 16), rat(0)};
    x24.validate();
    CHECK(optimal_bound(4, 8, &x24) == rat(3));

    // Fallback without a table uses epsilon(d, n).
    CHECK(optimal_bound(7, 5, nullptr) ==
          castelnuovo_conjecture_bound(7, 5) - epsilon(7, 5));
}

TEST_CASE("cy4 ch3 bound") {
    for (long long n = 1; n <= 8; ++n)
        CHECK(cy4_ch3_bound(n, n) == rat(n, 2) + rat((n - 5) * n, 2));
    CHECK(cy4_ch3_bound(6, 6) == rat(6));
    CHECK(cy4_ch3_bound(1, 6) == rat(1, 12) + rat(1, 2) - rat(25, 12));
    CHECK(cy4_ch3_bound(1, 6) == rat(-3, 2));
}
