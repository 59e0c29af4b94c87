// SPDX-License-Identifier: Apache-2.0

#include "castelbound/targets.hpp"

#include <algorithm>

#include "castelbound/errors.hpp"

namespace castelbound::certifier {

void target_threefold::validate() const {
    if (name.empty()) throw config_error("target: missing name");
    if (n < 1 || s < 1 || m_h < 1 || d1_max < 1)
        throw config_error("target " + name + ": n, s, m_H, D1 must be >= 1");
    if (eps) {
        if (eps->n != n) throw config_error("target " + name + ": eps table period != n");
        eps->validate();
    }
    if (axioms.no_planes && axioms.plane_section_cap < 1)
        throw config_error("target " + name + ": no_planes needs plane_section_cap");
    for (const auto& drop : paper_script.drops) {
        bool have = (drop.requires_axiom == "p3_section_cap" && axioms.p3_section_cap) ||
                    (drop.requires_axiom == "quadric_intersection_degree" &&
                     axioms.quadric_intersection_degree) ||
                    (drop.requires_axiom == "p4_ci222" && axioms.p4_ci222_available);
        if (!have)
            throw missing_axiom_error("target " + name + ": drop at d=" +
                                      std::to_string(drop.d) + " needs axiom " +
                                      drop.requires_axiom);
    }
    for (const auto& ex : paper_script.lb_exclusions)
        if (!axioms.no_quadric_surfaces || !axioms.p4_ci222_available)
            throw missing_axiom_error("target " + name + ": wall exclusion at k=" +
                                      std::to_string(ex.k) +
                                      " needs quadric and (2,2,2)-curve axioms");
    if (!expected_table.empty() &&
        expected_table.size() != static_cast<std::size_t>(d1_max))
        throw config_error("target " + name + ": expected_table length != D1");
}

namespace {

bounds::epsilon_table make_eps(long long n, std::vector<rat> values) {
    bounds::epsilon_table t;
    t.n = n;
    t.values = std::move(values);
    t.validate();
    return t;
}

target_threefold make_x5() {
    target_threefold t;
    t.name = "x5";
    t.n = 5;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 4;
    t.d1_max = 15;
    t.eps = make_eps(5, {rat(8, 5), rat(12, 5), rat(12, 5), rat(8, 5), rat(0)});
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 5;
    t.axioms.no_planes_note =
        "a quintic 3-fold contains no planes; a plane section is a plane quintic curve";
    t.axioms.no_quadric_surfaces = true;
    t.axioms.quadric_intersection_degree = 10;
    t.axioms.quadric_note = "a quadric surface meets the quintic in a curve of degree 10";
    t.axioms.p4_ci222_available = true;
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 5;
    t.paper_script.planar_decrement = false;
    t.paper_script.planar_piece_refinement = true;
    t.paper_script.lb_exclusions.push_back(
        {2, 11, 15,
         "a persistent quadric wall would put the curve in a (2,2)-surface section of "
         "degree 10 or a (2,2,2)-curve of degree 8, both below d"});
    return t;
}

target_threefold make_x24() {
    target_threefold t;
    t.name = "x24";
    t.n = 8;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 5;
    t.d1_max = 8;
    t.eps = make_eps(8, {rat(25, 16), rat(9, 4), rat(33, 16), rat(1), rat(33, 16),
                         rat(9, 4), rat(25, 16), rat(0)});
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 4;
    t.axioms.no_planes_note =
        "a (2,4) complete intersection contains no planes; a plane section lies in a "
        "plane quartic curve";
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 4;
    t.paper_script.planar_piece_refinement = true;
    return t;
}

target_threefold make_x33() {
    target_threefold t;
    t.name = "x33";
    t.n = 9;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 5;
    t.d1_max = 9;
    t.eps = make_eps(9, {rat(14, 9), rat(20, 9), rat(2), rat(26, 9), rat(26, 9), rat(2),
                         rat(20, 9), rat(14, 9), rat(0)});
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 3;
    t.axioms.no_planes_note =
        "a (3,3) complete intersection contains no planes; a plane section lies in a "
        "plane cubic curve";
    t.axioms.no_quadric_surfaces = true;
    t.axioms.quadric_intersection_degree = 6;
    t.axioms.quadric_note = "a quadric surface meets the (3,3) in a curve of degree 6";
    t.axioms.p4_ci222_available = true;
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 3;
    t.paper_script.planar_piece_refinement = true;
    t.paper_script.drops.push_back(
        {7, "lb:2", 1, "quadric_intersection_degree",
         "a genus-preserving projection would put the curve in a quadric section of "
         "degree 6 < 7, so the projection drops the genus by at least 1"});
    t.paper_script.drops.push_back(
        {8, "lb:2", 2, "p4_ci222",
         "one genus drop as at d=7; a second since a hyperplane-section curve would lie "
         "in a degree-2 surface (excluded) or equal the (2,2,2)-curve of genus 5 <= 7"});
    t.paper_script.drops.push_back(
        {9, "lb:2", 2, "p4_ci222",
         "two genus drops: quadric sections have degree 6 < 9 and the (2,2,2)-curve has "
         "degree 8 < 9"});
    return t;
}

target_threefold make_x223() {
    target_threefold t;
    t.name = "x223";
    t.n = 12;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 6;
    t.d1_max = 6;
    t.eps = make_eps(12, {rat(37, 24), rat(13, 6), rat(15, 8), rat(8, 3), rat(61, 24),
                          rat(3, 2), rat(61, 24), rat(8, 3), rat(15, 8), rat(13, 6),
                          rat(37, 24), rat(0)});
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 3;
    t.axioms.no_planes_note =
        "a (2,2,3) complete intersection contains no planes; a plane section lies in a "
        "plane cubic curve";
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 3;
    t.paper_script.planar_piece_refinement = true;
    return t;
}

target_threefold make_x2222() {
    target_threefold t;
    t.name = "x2222";
    t.n = 16;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 7;
    t.d1_max = 6;
    t.eps = make_eps(16, {rat(49, 32), rat(17, 8), rat(89, 32), rat(5, 2), rat(105, 32),
                          rat(25, 8), rat(97, 32), rat(2), rat(97, 32), rat(25, 8),
                          rat(105, 32), rat(5, 2), rat(89, 32), rat(17, 8), rat(49, 32),
                          rat(0)});
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 2;
    t.axioms.no_planes_note =
        "a (2,2,2,2) complete intersection contains no planes; a plane section is a conic";
    t.axioms.no_quadric_surfaces = true;
    t.axioms.p3_section_cap = 4;
    t.axioms.p3_section_note =
        "a P^3 section of the (2,2,2,2) lies in a (2,2) complete intersection curve of "
        "degree 4";
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 3;
    t.paper_script.planar_decrement = true;
    t.paper_script.planar_piece_refinement = true;
    t.paper_script.drops.push_back(
        {5, "neutral", 1, "p3_section_cap",
         "a genus-preserving projection would confine the degree-5 curve to a degree-4 "
         "section curve"});
    t.paper_script.drops.push_back({5, "lb:2", 1, "p3_section_cap",
                                    "same degree-4 section argument at the quadric wall"});
    t.paper_script.drops.push_back(
        {6, "neutral", 1, "p3_section_cap",
         "a genus-preserving projection would confine the degree-6 curve to a degree-4 "
         "section curve"});
    t.paper_script.drops.push_back(
        {6, "lb:2", 2, "p3_section_cap",
         "one drop from the degree-4 section; a second since a hyperplane-section curve "
         "would lie in a quadric surface section of degree 4 < 6"});
    return t;
}

target_threefold make_pfaff_x() {
    target_threefold t;
    t.name = "pfaff-gr27-x";
    t.n = 42;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 13;
    t.d1_max = 5;
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 2;
    t.axioms.no_planes_note =
        "the Grassmannian section contains no planes; Gr(2,7) is cut out by quadrics, so "
        "planar curves lie in conics";
    t.axioms.p3_section_cap = 4;
    t.axioms.p3_section_note =
        "a P^3 section lies in a (2,2) complete intersection curve of degree 4";
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 3;
    t.paper_script.planar_decrement = true;
    t.paper_script.planar_piece_refinement = true;
    t.paper_script.drops.push_back(
        {5, "neutral", 1, "p3_section_cap",
         "a genus-preserving projection would confine the degree-5 curve to a degree-4 "
         "section curve"});
    t.paper_script.drops.push_back({5, "lb:2", 1, "p3_section_cap",
                                    "same degree-4 section argument at the quadric wall"});
    t.expected_table = {0, 0, 0, 1, 1};
    return t;
}

target_threefold make_pfaff_y() {
    target_threefold t;
    t.name = "pfaff-gr27-y";
    t.n = 14;
    t.s = 1;
    t.m_h = 1;
    t.ambient_dim = 6;
    t.d1_max = 5;
    t.axioms.no_planes = true;
    t.axioms.plane_section_cap = 3;
    t.axioms.no_planes_note =
        "the Pfaffian section contains no planes; it is cut out by cubics, so planar "
        "curves lie in plane cubics";
    t.paper_script.name = "paper";
    t.paper_script.base_small_max_d = 3;
    t.paper_script.planar_piece_refinement = true;
    t.expected_table = {0, 0, 1, 1, 2};
    return t;
}

} // namespace

const std::vector<target_threefold>& builtin_targets() {
    static const std::vector<target_threefold> all = [] {
        std::vector<target_threefold> v{make_x5(),   make_x24(),     make_x33(),
                                        make_x223(), make_x2222(),   make_pfaff_x(),
                                        make_pfaff_y()};
        for (const auto& t : v) t.validate();
        return v;
    }();
    return all;
}

const target_threefold& builtin_target(const std::string& name) {
    for (const auto& t : builtin_targets())
        if (t.name == name) return t;
    throw config_error("unknown built-in target: " + name);
}

bool has_builtin_target(const std::string& name) {
    for (const auto& t : builtin_targets())
        if (t.name == name) return true;
    return false;
}

} // namespace castelbound::certifier
