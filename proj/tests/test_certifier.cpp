#include <doctest.h>

#include <map>

#include "castelbound/certifier.hpp"
#include "castelbound/errors.hpp"
#include "castelbound/json_io.hpp"

using namespace castelbound;
using namespace castelbound::certifier;
using numerics::rat;

namespace {

std::vector<long long> certified_bounds(const std::string& name, script_kind kind) {
    engine eng(builtin_target(name), kind);
    std::vector<long long> out;
    for (const auto& cert : eng.certify_table()) out.push_back(cert->bound);
    return out;
}

std::vector<long long> optimal_floors(const target_threefold& t) {
    std::vector<long long> out;
    for (long long d = 1; d <= t.d1_max; ++d)
        out.push_back(t.optimal_bound_at(d).floor().to_i64());
    return out;
}

} // namespace

TEST_CASE("complete intersection tables match the optimal-bound floors exactly") {
    for (const char* name : {"x5", "x24", "x33", "x223", "x2222"}) {
        const auto& t = builtin_target(name);
        CAPTURE(name);
        CHECK(certified_bounds(name, script_kind::paper) == optimal_floors(t));
    }
}

TEST_CASE("x5 spot values from the degree-by-degree analysis") {
    engine eng(builtin_target("x5"));
    CHECK(eng.certify(9)->bound == 12);
    CHECK(eng.certify(10)->bound == 16);
    CHECK(eng.certify(14)->bound == 26);
    CHECK(eng.certify(15)->bound == 31);
}

TEST_CASE("Grassmannian and Pfaffian section tables") {
    CHECK(certified_bounds("pfaff-gr27-x", script_kind::paper) ==
          std::vector<long long>{0, 0, 0, 1, 1});
    CHECK(certified_bounds("pfaff-gr27-y", script_kind::paper) ==
          std::vector<long long>{0, 0, 1, 1, 2});
    for (const char* name : {"pfaff-gr27-x", "pfaff-gr27-y"}) {
        const auto& t = builtin_target(name);
        CHECK(certified_bounds(name, script_kind::paper) ==
              std::vector<long long>(t.expected_table.begin(), t.expected_table.end()));
    }
}

TEST_CASE("tables are non-decreasing in d") {
    for (const auto& t : builtin_targets()) {
        auto bounds = certified_bounds(t.name, script_kind::paper);
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
            CAPTURE(t.name);
            CHECK(bounds[i] <= bounds[i + 1]);
        }
    }
}

TEST_CASE("conservative script is sound but never sharper") {
    for (const auto& t : builtin_targets()) {
        auto paper = certified_bounds(t.name, script_kind::paper);
        auto cons = certified_bounds(t.name, script_kind::conservative);
        for (std::size_t i = 0; i < paper.size(); ++i) {
            CAPTURE(t.name);
            CAPTURE(i);
            CHECK(cons[i] >= paper[i]);
        }
    }
}

TEST_CASE("memoization returns the identical certificate object") {
    engine eng(builtin_target("x5"));
    auto a = eng.certify(12);
    auto b = eng.certify(12);
    CHECK(a.get() == b.get());
    CHECK(a->bound == 19);
}

TEST_CASE("range and axiom errors") {
    engine eng(builtin_target("x223"));
    CHECK_THROWS_AS(eng.certify(7), out_of_certified_range_error);
    CHECK_THROWS_AS(eng.certify(0), out_of_certified_range_error);

    target_threefold broken = builtin_target("x2222");
    broken.axioms.p3_section_cap.reset();
    CHECK_THROWS_AS(engine{broken}, missing_axiom_error);
}

TEST_CASE("curve wall branches re-validate admissibility and are well-founded") {
    engine eng(builtin_target("x5"));
    for (long long d = 2; d <= 15; ++d) {
        auto cert = eng.certify(d);
        for (const auto& node : cert->cases) {
            if (node.rule != case_rule::curve_wall) continue;
            CHECK(tiltwalls::admissible_d1(d, 1, node.k, node.d1));
            CHECK(node.d1 >= 1);
            CHECK(node.d1 < d);
            long long sub = 0;
            for (const auto& ch : node.children)
                if (ch.rule == case_rule::sub_certificate) {
                    CHECK(ch.d < d);
                    CHECK(ch.value == eng.certify(ch.d)->bound);
                    sub += 1;
                }
            CHECK(sub == 2);
        }
    }
}

TEST_CASE("x5 d=6 trace shows the expected branch structure") {
    engine eng(builtin_target("x5"));
    auto cert = eng.certify(6);
    bool has_neutral = false, has_lb2 = false, has_cw1 = false;
    for (const auto& c : cert->cases) {
        if (c.rule == case_rule::neutral_bd) has_neutral = true;
        if (c.rule == case_rule::line_bundle_wall && c.k == 2) has_lb2 = true;
        if (c.rule == case_rule::curve_wall && c.k == 1) {
            has_cw1 = true;
            CHECK(c.d1 <= 3);
        }
    }
    CHECK(has_neutral);
    CHECK(has_lb2);
    CHECK(has_cw1);
    std::string text = explain(*cert);
    CHECK(text.find("NeutralBd") != std::string::npos);
    CHECK(text.find("LineBundleWall(2)") != std::string::npos);
    CHECK(text.find("CurveWall(1, 1)") != std::string::npos);

    // The three-projection exclusion fires at d = 11..15 only.
    auto c11 = eng.certify(11);
    bool excluded_lb2 = false;
    for (const auto& e : c11->excluded)
        if (e.label == "LineBundleWall(2)") excluded_lb2 = true;
    CHECK(excluded_lb2);
    for (const auto& c : c11->cases)
        CHECK(!(c.rule == case_rule::line_bundle_wall && c.k == 2));
}

TEST_CASE("certificates round-trip through JSON") {
    engine eng(builtin_target("x33"));
    auto cert = eng.certify(8);
    auto j = json_io::to_json(*cert);
    certificate back = json_io::certificate_from_json(j);
    CHECK(json_io::to_json(back) == j);
    CHECK(back.bound == cert->bound);
    CHECK(back.enabled_case_count() == cert->enabled_case_count());
}

TEST_CASE("target JSON round trip preserves the certified table") {
    for (const auto& t : builtin_targets()) {
        auto j = json_io::to_json(t);
        target_threefold back = json_io::target_from_json(j);
        engine a(t), b(back);
        for (long long d = 1; d <= t.d1_max; ++d)
            CHECK(a.certify(d)->bound == b.certify(d)->bound);
    }
    CHECK_THROWS_AS(json_io::target_from_json(json_io::json{{"name", "z"}, {"bogus", 1}}),
                    config_error);
}

TEST_CASE("certified bounds never exceed the optimal floors on table targets") {
    for (const char* name : {"x5", "x24", "x33", "x223", "x2222"}) {
        const auto& t = builtin_target(name);
        engine eng(t);
        for (long long d = 1; d <= t.d1_max; ++d) {
            CAPTURE(name);
            CHECK(rat(eng.certify(d)->bound) <= t.optimal_bound_at(d));
        }
    }
}

TEST_CASE("certified tables frozen as literal values") {
    // Pinned independently of the epsilon tables so a typo in either the
    // data or the bound formula cannot slip through unnoticed.
    std::map<std::string, std::vector<long long>> expect = {
        {"x5", {0, 0, 1, 3, 6, 6, 7, 9, 12, 16, 17, 19, 22, 26, 31}},
        {"x24", {0, 0, 1, 3, 3, 4, 6, 9}},
        {"x33", {0, 0, 1, 1, 2, 4, 5, 7, 10}},
        {"x223", {0, 0, 1, 1, 2, 4}},
        {"x2222", {0, 0, 0, 1, 1, 2}},
        {"pfaff-gr27-x", {0, 0, 0, 1, 1}},
        {"pfaff-gr27-y", {0, 0, 1, 1, 2}},
    };
    for (const auto& [name, table] : expect) {
        CAPTURE(name);
        CHECK(certified_bounds(name, script_kind::paper) == table);
    }
}

TEST_CASE("trace leaves match the enabled cases") {
    engine eng(builtin_target("x5"));
    for (long long d = 1; d <= 15; ++d) {
        auto cert = eng.certify(d);
        std::string text = explain(*cert);
        std::size_t binding = text.find("[binding]");
        CHECK(binding != std::string::npos);
        CHECK(cert->enabled_case_count() == cert->cases.size());
        bool bound_attained = false;
        for (const auto& c : cert->cases)
            if (c.value == cert->bound) bound_attained = true;
        CHECK(bound_attained);
    }
}
