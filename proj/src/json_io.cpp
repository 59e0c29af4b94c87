// SPDX-License-Identifier: Apache-2.0

#include "castelbound/json_io.hpp"

#include <set>

#include "castelbound/errors.hpp"

namespace castelbound::json_io {

using numerics::rat;

json to_json(const rat& x) { return x.to_string(); }

rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return rat(j.get<long long>());
    if (j.is_string()) return rat::from_string(j.get<std::string>());
    throw config_error("expected a rational as \"num/den\" or integer");
}

json to_json(const numerics::surd& x) { return x.to_string(); }

json to_json(const tiltwalls::chern_h& ch) {
    json j;
    j["c0"] = to_json(ch.c0);
    j["c1"] = to_json(ch.c1);
    j["c2"] = to_json(ch.c2);
    if (ch.c3_known) j["c3"] = to_json(ch.c3);
    j["c3_known"] = ch.c3_known;
    return j;
}

tiltwalls::chern_h chern_from_json(const json& j) {
    tiltwalls::chern_h ch(rat_from_json(j.at("c0")), rat_from_json(j.at("c1")),
                          rat_from_json(j.at("c2")));
    if (j.contains("c3")) {
        ch.c3 = rat_from_json(j.at("c3"));
        ch.c3_known = true;
    }
    return ch;
}

json to_json(const tiltwalls::wall_geometry& w) {
    json j;
    if (w.is_vertical()) {
        j["kind"] = "vertical";
        j["b"] = to_json(w.line().b);
    } else {
        j["kind"] = "semicircle";
        j["center"] = to_json(w.circle().center);
        j["radius_sq"] = to_json(w.circle().radius_sq);
        j["rightmost"] = to_json(w.circle().rightmost());
    }
    return j;
}

json to_json(const tiltwalls::tilt_point& pt) {
    json j;
    j["b"] = to_json(pt.b);
    j["a_sq"] = to_json(pt.a_sq);
    j["boundary"] = pt.is_boundary();
    return j;
}

json to_json(const constants::constant_report& r) {
    json j;
    j["name"] = r.name;
    j["value"] = r.value.to_string();
    json ineqs = json::array();
    for (const auto& s : r.inequalities) {
        json e;
        e["id"] = s.id;
        e["detail"] = s.detail;
        e["min_value"] = s.min_value.to_string();
        e["binding"] = s.binding;
        ineqs.push_back(e);
    }
    j["inequalities"] = ineqs;
    if (!r.minimality_witness.empty()) j["minimality_witness"] = r.minimality_witness;
    return j;
}

json to_json(const constants::theorem_chain& c) {
    json j;
    j["n_H"] = c.n_H;
    j["N2"] = to_json(c.N2);
    j["N3"] = to_json(c.N3);
    j["N4"] = to_json(c.N4);
    j["N_H"] = to_json(c.N_H);
    return j;
}

json to_json(const certifier::case_node& node) {
    json j;
    j["rule"] = certifier::rule_name(node.rule);
    j["label"] = node.label();
    if (node.rule == certifier::case_rule::line_bundle_wall ||
        node.rule == certifier::case_rule::curve_wall)
        j["k"] = node.k;
    if (node.rule == certifier::case_rule::curve_wall) j["d1"] = node.d1;
    if (node.rule == certifier::case_rule::sub_certificate) j["d"] = node.d;
    j["value"] = node.value;
    if (!node.note.empty()) j["note"] = node.note;
    if (!node.children.empty()) {
        json kids = json::array();
        for (const auto& ch : node.children) kids.push_back(to_json(ch));
        j["children"] = kids;
    }
    return j;
}

json to_json(const certifier::certificate& cert) {
    json j;
    j["target"] = cert.target;
    j["d"] = cert.d;
    j["bound"] = cert.bound;
    json cases = json::array();
    for (const auto& c : cert.cases) cases.push_back(to_json(c));
    j["cases"] = cases;
    json ex = json::array();
    for (const auto& e : cert.excluded) {
        json x;
        x["label"] = e.label;
        x["reason"] = e.reason;
        ex.push_back(x);
    }
    j["excluded"] = ex;
    return j;
}

namespace {

certifier::case_node node_from_json(const json& j) {
    certifier::case_node n;
    std::string rule = j.at("rule").get<std::string>();
    using cr = certifier::case_rule;
    if (rule == "BaseSmall") n.rule = cr::base_small;
    else if (rule == "NeutralBd") n.rule = cr::neutral_bd;
    else if (rule == "LineBundleWall") n.rule = cr::line_bundle_wall;
    else if (rule == "CurveWall") n.rule = cr::curve_wall;
    else if (rule == "SubCertificate") n.rule = cr::sub_certificate;
    else if (rule == "PlanarExclusion") n.rule = cr::planar_exclusion;
    else if (rule == "P3SectionExclusion") n.rule = cr::p3_section_exclusion;
    else if (rule == "ThreeProjectionExclusion") n.rule = cr::three_projection_exclusion;
    else if (rule == "GenusDropRefinement") n.rule = cr::genus_drop_refinement;
    else throw config_error("unknown case rule: " + rule);
    if (j.contains("k")) n.k = j.at("k").get<long long>();
    if (j.contains("d1")) n.d1 = j.at("d1").get<long long>();
    if (j.contains("d")) n.d = j.at("d").get<long long>();
    n.value = j.at("value").get<long long>();
    if (j.contains("note")) n.note = j.at("note").get<std::string>();
    if (j.contains("children"))
        for (const auto& ch : j.at("children")) n.children.push_back(node_from_json(ch));
    return n;
}

} // namespace

certifier::certificate certificate_from_json(const json& j) {
    certifier::certificate c;
    c.target = j.at("target").get<std::string>();
    c.d = j.at("d").get<long long>();
    c.bound = j.at("bound").get<long long>();
    for (const auto& n : j.at("cases")) c.cases.push_back(node_from_json(n));
    for (const auto& e : j.at("excluded"))
        c.excluded.push_back({e.at("label").get<std::string>(),
                              e.at("reason").get<std::string>()});
    return c;
}

json to_json(const certifier::target_threefold& t) {
    json j;
    j["name"] = t.name;
    j["n"] = t.n;
    j["s"] = t.s;
    j["m_H"] = t.m_h;
    j["ambient_dim"] = t.ambient_dim;
    j["D1"] = t.d1_max;
    if (t.eps) {
        json vals = json::array();
        for (const auto& v : t.eps->values) vals.push_back(to_json(v));
        j["epsilon_table"] = vals;
    }
    json ax;
    ax["no_planes"] = t.axioms.no_planes;
    if (t.axioms.no_planes) {
        ax["plane_section_cap"] = t.axioms.plane_section_cap;
        ax["no_planes_note"] = t.axioms.no_planes_note;
    }
    ax["no_quadric_surfaces"] = t.axioms.no_quadric_surfaces;
    if (t.axioms.quadric_intersection_degree) {
        ax["quadric_intersection_degree"] = *t.axioms.quadric_intersection_degree;
        ax["quadric_note"] = t.axioms.quadric_note;
    }
    if (t.axioms.p3_section_cap) {
        ax["p3_section_cap"] = *t.axioms.p3_section_cap;
        ax["p3_section_note"] = t.axioms.p3_section_note;
    }
    ax["p4_ci222_available"] = t.axioms.p4_ci222_available;
    j["axioms"] = ax;
    json script;
    script["base_small_max_d"] = t.paper_script.base_small_max_d;
    script["planar_decrement"] = t.paper_script.planar_decrement;
    script["planar_piece_refinement"] = t.paper_script.planar_piece_refinement;
    json excl = json::array();
    for (const auto& e : t.paper_script.lb_exclusions) {
        json x;
        x["k"] = e.k;
        x["d_lo"] = e.d_lo;
        x["d_hi"] = e.d_hi;
        x["note"] = e.note;
        excl.push_back(x);
    }
    script["lb_exclusions"] = excl;
    json drops = json::array();
    for (const auto& dr : t.paper_script.drops) {
        json x;
        x["d"] = dr.d;
        x["case"] = dr.case_id;
        x["amount"] = dr.amount;
        x["requires_axiom"] = dr.requires_axiom;
        x["note"] = dr.note;
        drops.push_back(x);
    }
    script["drops"] = drops;
    j["script"] = script;
    if (!t.expected_table.empty()) j["expected_table"] = t.expected_table;
    return j;
}

certifier::target_threefold target_from_json(const json& j) {
    static const std::set<std::string> known_top = {
        "name", "n", "s", "m_H", "ambient_dim", "D1", "epsilon_table", "axioms",
        "script", "expected_table"};
    for (const auto& [key, v] : j.items()) {
        (void)v;
        if (!known_top.count(key)) throw config_error("target config: unknown field " + key);
    }
    certifier::target_threefold t;
    t.name = j.at("name").get<std::string>();
    t.n = j.at("n").get<long long>();
    t.s = j.value("s", 1LL);
    t.m_h = j.value("m_H", 1LL);
    t.ambient_dim = j.value("ambient_dim", 0LL);
    t.d1_max = j.at("D1").get<long long>();
    if (j.contains("epsilon_table")) {
        bounds::epsilon_table e;
        e.n = t.n;
        for (const auto& v : j.at("epsilon_table")) e.values.push_back(rat_from_json(v));
        e.validate();
        t.eps = std::move(e);
    }
    if (j.contains("axioms")) {
        const auto& ax = j.at("axioms");
        t.axioms.no_planes = ax.value("no_planes", false);
        t.axioms.plane_section_cap = ax.value("plane_section_cap", 0LL);
        t.axioms.no_planes_note = ax.value("no_planes_note", std::string());
        t.axioms.no_quadric_surfaces = ax.value("no_quadric_surfaces", false);
        if (ax.contains("quadric_intersection_degree"))
            t.axioms.quadric_intersection_degree =
                ax.at("quadric_intersection_degree").get<long long>();
        t.axioms.quadric_note = ax.value("quadric_note", std::string());
        if (ax.contains("p3_section_cap"))
            t.axioms.p3_section_cap = ax.at("p3_section_cap").get<long long>();
        t.axioms.p3_section_note = ax.value("p3_section_note", std::string());
        t.axioms.p4_ci222_available = ax.value("p4_ci222_available", false);
    }
    if (j.contains("script")) {
        const auto& sc = j.at("script");
        t.paper_script.name = "paper";
        t.paper_script.base_small_max_d = sc.value("base_small_max_d", 0LL);
        t.paper_script.planar_decrement = sc.value("planar_decrement", false);
        t.paper_script.planar_piece_refinement = sc.value("planar_piece_refinement", false);
        if (sc.contains("lb_exclusions"))
            for (const auto& e : sc.at("lb_exclusions"))
                t.paper_script.lb_exclusions.push_back(
                    {e.at("k").get<long long>(), e.at("d_lo").get<long long>(),
                     e.at("d_hi").get<long long>(), e.value("note", std::string())});
        if (sc.contains("drops"))
            for (const auto& dr : sc.at("drops"))
                t.paper_script.drops.push_back(
                    {dr.at("d").get<long long>(), dr.at("case").get<std::string>(),
                     dr.at("amount").get<long long>(),
                     dr.at("requires_axiom").get<std::string>(),
                     dr.value("note", std::string())});
    }
    if (j.contains("expected_table"))
        for (const auto& v : j.at("expected_table"))
            t.expected_table.push_back(v.get<long long>());
    t.validate();
    return t;
}

json to_json(const gvseries::gv_table& t) {
    json rows = json::array();
    for (const auto& [key, v] : t.entries) {
        json e;
        e["g"] = key.first;
        e["d"] = key.second;
        e["value"] = v.to_string();
        rows.push_back(e);
    }
    json j;
    j["entries"] = rows;
    j["d_max"] = t.d_max;
    return j;
}

json to_json(const gvseries::pt_table& t) {
    json rows = json::array();
    for (const auto& [key, v] : t.entries) {
        json e;
        e["s"] = key.first;
        e["d"] = key.second;
        e["value"] = to_json(v);
        rows.push_back(e);
    }
    json j;
    j["entries"] = rows;
    j["d_max"] = t.d_max;
    j["window"] = {t.window_lo, t.window_hi};
    j["clipped"] = t.clipped;
    return j;
}

} // namespace castelbound::json_io
