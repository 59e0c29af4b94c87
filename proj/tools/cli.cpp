// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "castelbound/bounds.hpp"
#include "castelbound/certifier.hpp"
#include "castelbound/constants.hpp"
#include "castelbound/errors.hpp"
#include "castelbound/gvseries.hpp"
#include "castelbound/json_io.hpp"
#include "castelbound/svg.hpp"
#include "castelbound/targets.hpp"
#include "castelbound/tiltwalls.hpp"

namespace castelbound::cli {

namespace fs = std::filesystem;
using json_io::json;
using numerics::rat;

namespace {

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void emit_error(std::ostream& err, const std::string& what) {
    json j;
    j["error"] = what;
    err << j.dump() << "\n";
}

certifier::target_threefold load_target(const std::string& spec) {
    if (certifier::has_builtin_target(spec)) return certifier::builtin_target(spec);
    std::vector<fs::path> candidates;
    candidates.emplace_back(spec);
    if (const char* dir = std::getenv("CASTELBOUND_CONFIG_DIR")) {
        candidates.emplace_back(fs::path(dir) / spec);
        candidates.emplace_back(fs::path(dir) / (spec + ".json"));
    }
    for (const auto& p : candidates) {
        if (!fs::exists(p)) continue;
        std::ifstream in(p);
        json j = json::parse(in);
        return json_io::target_from_json(j);
    }
    throw config_error("unknown target: " + spec +
                       " (not built-in, not a readable config file)");
}

tiltwalls::chern_h parse_chern(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw config_error("--ch expects \"c0,c1,c2\" or \"c0,c1,c2,c3\" (c3 may be *)");
    tiltwalls::chern_h ch(rat::from_string(parts[0]), rat::from_string(parts[1]),
                          rat::from_string(parts[2]));
    if (parts.size() == 4 && parts[3] != "*") {
        ch.c3 = rat::from_string(parts[3]);
        ch.c3_known = true;
    }
    return ch;
}

certifier::script_kind parse_script(const std::string& s) {
    if (s == "paper") return certifier::script_kind::paper;
    if (s == "default") return certifier::script_kind::conservative;
    throw config_error("--script must be 'default' or 'paper'");
}

struct window_opt {
    long long lo = 0, hi = 0;
};

window_opt parse_window(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw config_error("--window expects lo..hi");
    window_opt w;
    w.lo = std::stoll(s.substr(0, pos));
    w.hi = std::stoll(s.substr(pos + 2));
    if (w.lo > w.hi) throw config_error("--window: lo > hi");
    return w;
}

gvseries::gv_table read_gv_csv(std::istream& in) {
    gvseries::gv_table t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("g,", 0) == 0) continue;
        std::stringstream ss(line);
        std::string g, d, v;
        if (!std::getline(ss, g, ',') || !std::getline(ss, d, ',') || !std::getline(ss, v))
            throw config_error("gv csv: bad line: " + line);
        t.set(std::stoll(g), std::stoll(d), numerics::big_int::from_string(v));
    }
    return t;
}

gvseries::pt_table read_pt_csv(std::istream& in, const window_opt& w) {
    gvseries::pt_table t;
    t.window_lo = w.lo;
    t.window_hi = w.hi;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("s,", 0) == 0) continue;
        std::stringstream ss(line);
        std::string s, d, v;
        if (!std::getline(ss, s, ',') || !std::getline(ss, d, ',') || !std::getline(ss, v))
            throw config_error("pt csv: bad line: " + line);
        long long dd = std::stoll(d);
        t.entries[{std::stoll(s), dd}] = rat::from_string(v);
        t.d_max = std::max(t.d_max, dd);
        t.valid_to[dd] = w.hi;
    }
    for (long long d = 1; d <= t.d_max; ++d)
        if (!t.valid_to.count(d)) t.valid_to[d] = w.hi;
    return t;
}

std::istream& pick_input(std::ifstream& file, const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") return fallback;
    file.open(path);
    if (!file) throw config_error("cannot open input file: " + path);
    return file;
}

int cmd_walls(long long d, long long g, long long n, const std::string& ch_spec,
              const std::string& family, long long k_max, long long d1_max,
              const std::string& svg_path, const std::string& format, std::ostream& out) {
    tiltwalls::chern_h v;
    if (!ch_spec.empty()) {
        v = parse_chern(ch_spec);
    } else {
        v = tiltwalls::chern_h(rat(1), rat(0), rat(-d, n));
        if (n == 1) v = tiltwalls::ideal_class_p3(d, g);
    }
    if (tiltwalls::discriminant(v).is_negative())
        throw std::domain_error("walls: class has negative discriminant");

    std::vector<svg::wall_entry> entries;
    json rows = json::array();
    auto add = [&](const tiltwalls::chern_h& w, const std::string& label, long long kk,
                   long long dd1) {
        auto wall = tiltwalls::numerical_wall(v, w);
        if (!wall) return;
        json row = json_io::to_json(*wall);
        row["against"] = label;
        row["k"] = kk;
        if (dd1 >= 0) row["d1"] = dd1;
        rows.push_back(row);
        entries.push_back({*wall, label});
    };
    for (long long k = 1; k <= k_max; ++k) {
        add(tiltwalls::line_bundle_class(rat(k)), "O(-" + std::to_string(k) + ")", k, -1);
        if (family == "ideal") {
            for (long long d1 = 1; d1 <= d1_max; ++d1)
                add(tiltwalls::twist(tiltwalls::chern_h(rat(1), rat(0), rat(-d1, n)), rat(k)),
                    "I(" + std::to_string(d1) + ")(-" + std::to_string(k) + ")", k, d1);
        }
    }

    json j;
    j["class"] = json_io::to_json(v);
    j["b_d"] = json_io::to_json(tiltwalls::b_d(d, n));
    j["walls"] = rows;
    if (!svg_path.empty()) {
        std::ofstream svg_out(svg_path);
        if (!svg_out) throw config_error("cannot write svg file: " + svg_path);
        svg_out << svg::wall_diagram(d, n, entries);
        j["svg"] = svg_path;
    }
    if (format == "csv") {
        out << "against,k,d1,kind,center,radius_sq\n";
        for (const auto& row : rows) {
            out << row["against"].get<std::string>() << "," << row["k"] << ","
                << (row.contains("d1") ? row["d1"].dump() : "") << ","
                << row["kind"].get<std::string>() << ","
                << (row.contains("center") ? row["center"].get<std::string>() : "") << ","
                << (row.contains("radius_sq") ? row["radius_sq"].get<std::string>() : "")
                << "\n";
        }
    } else {
        emit_json(out, j);
    }
    return 0;
}

int cmd_bound(const std::string& target_spec, long long n, long long d_min, long long d_max,
              const std::string& kind, const std::string& b0, const std::string& format,
              std::ostream& out) {
    std::optional<certifier::target_threefold> target;
    if (!target_spec.empty()) {
        target = load_target(target_spec);
        n = target->n;
    }
    if (n < 1) throw config_error("bound: need --target or --n");
    json rows = json::array();
    for (long long d = d_min; d <= d_max; ++d) {
        rat value(0);
        if (kind == "optimal")
            value = bounds::optimal_bound(d, n, target ? target->eps_table() : nullptr);
        else if (kind == "surface")
            value = bounds::surface_bound(d, n);
        else if (kind == "castelnuovo")
            value = bounds::castelnuovo_conjecture_bound(d, n);
        else if (kind == "cy4")
            value = bounds::cy4_ch3_bound(d, n);
        else if (kind == "bmt")
            value = bounds::bmt_bound(d, rat::from_string(b0));
        else if (kind == "planar")
            value = rat(bounds::planar_bound(d));
        else
            throw config_error("bound: unknown kind " + kind);
        json row;
        row["d"] = d;
        row["bound"] = json_io::to_json(value);
        row["floor"] = value.floor().to_string();
        rows.push_back(row);
    }
    if (format == "csv") {
        out << "d,bound,floor\n";
        for (const auto& row : rows)
            out << row["d"] << "," << row["bound"].get<std::string>() << ","
                << row["floor"].get<std::string>() << "\n";
    } else {
        json j;
        j["kind"] = kind;
        j["n"] = n;
        if (target) j["target"] = target->name;
        j["rows"] = rows;
        emit_json(out, j);
    }
    return 0;
}

int cmd_constants(long long n, long long l, const std::string& target_spec,
                  const std::string& nh_map_path, const std::string& only,
                  std::ostream& out) {
    if (!target_spec.empty()) {
        certifier::target_threefold t = load_target(target_spec);
        tiltwalls::polarization pol{t.n, t.s, t.m_h, t.name};
        std::map<long long, long long> nh;
        if (!nh_map_path.empty()) {
            std::ifstream in(nh_map_path);
            if (!in) throw config_error("cannot open nH map: " + nh_map_path);
            json j = json::parse(in);
            for (const auto& [key, v] : j.items()) nh[std::stoll(key)] = v.get<long long>();
        }
        emit_json(out, json_io::to_json(constants::solve_theorem_chain(pol, nh)));
        return 0;
    }
    if (n < 1 || l < 1) throw config_error("constants: need --target or both --n and --l");
    constants::constant_report n0 = constants::solve_N0(n);
    constants::constant_report n1 = constants::solve_N1(n, l);
    constants::constant_report nnl = constants::solve_N_nl(n, l);
    if (!only.empty()) {
        for (const auto* rep : {&n0, &n1, &nnl}) {
            if (const auto* s = rep->find(only)) {
                json j;
                j["id"] = s->id;
                j["value"] = s->min_value.to_string();
                j["detail"] = s->detail;
                emit_json(out, j);
                return 0;
            }
        }
        throw config_error("constants: no inequality named " + only);
    }
    json j;
    j["N0"] = json_io::to_json(n0);
    j["N1"] = json_io::to_json(n1);
    j["N_nl"] = json_io::to_json(nnl);
    emit_json(out, j);
    return 0;
}

int cmd_certify(const std::string& target_spec, long long d, long long max_d, bool explain,
                const std::string& script, const std::string& format, std::ostream& out) {
    certifier::target_threefold t = load_target(target_spec);
    certifier::engine eng(t, parse_script(script));
    long long hi = max_d > 0 ? max_d : (d > 0 ? d : t.d1_max);
    long long lo = d > 0 && max_d == 0 ? d : 1;
    json rows = json::array();
    for (long long dd = lo; dd <= hi; ++dd) {
        auto cert = eng.certify(dd);
        if (format == "csv") {
            rows.push_back(json{{"d", dd}, {"bound", cert->bound}});
        } else {
            json row = explain ? json_io::to_json(*cert)
                               : json{{"d", dd}, {"bound", cert->bound}};
            if (explain) row["trace"] = certifier::explain(*cert);
            rows.push_back(row);
        }
    }
    if (format == "csv") {
        out << "d,bound\n";
        for (const auto& row : rows) out << row["d"] << "," << row["bound"] << "\n";
    } else {
        json j;
        j["target"] = t.name;
        j["script"] = script;
        j["rows"] = rows;
        emit_json(out, j);
    }
    return 0;
}

int cmd_gvpt(const std::string& mode, const std::string& in_path,
             const std::string& window_spec, long long n, long long m, long long nh,
             const std::string& format, std::istream& in_fallback, std::ostream& out) {
    window_opt w = parse_window(window_spec);
    gvseries::series_window window{w.lo, w.hi};
    std::ifstream file;
    std::istream& in = pick_input(file, in_path, in_fallback);

    if (mode == "to-pt") {
        gvseries::gv_table gv = read_gv_csv(in);
        gvseries::pt_table pt = gvseries::pt_from_gv(gv, window);
        if (format == "csv") {
            out << "s,d,value\n";
            for (const auto& [key, v] : pt.entries)
                out << key.first << "," << key.second << "," << v.to_string() << "\n";
        } else {
            emit_json(out, json_io::to_json(pt));
        }
        return 0;
    }
    if (mode == "to-gv") {
        gvseries::pt_table pt = read_pt_csv(in, w);
        gvseries::gv_table gv = gvseries::gv_from_pt(pt, window);
        if (format == "csv") {
            out << "g,d,value\n";
            for (const auto& [key, v] : gv.entries)
                out << key.first << "," << key.second << "," << v.to_string() << "\n";
        } else {
            emit_json(out, json_io::to_json(gv));
        }
        return 0;
    }
    if (mode == "check") {
        if (n < 1 || m < 1 || nh < 1) throw config_error("gvpt check: need --n, --m, --NH");
        gvseries::gv_table gv = read_gv_csv(in);
        auto violations = gvseries::vanishing_consistency(gv, n, m, nh);
        json rows = json::array();
        for (const auto& v : violations)
            rows.push_back(json{{"g", v.g}, {"d", v.d}, {"value", v.value.to_string()}});
        json j;
        j["violations"] = rows;
        j["clean"] = violations.empty();
        emit_json(out, j);
        return violations.empty() ? 0 : 1;
    }
    throw config_error("gvpt: mode must be to-pt, to-gv, or check");
}

int cmd_vanish(const std::string& mode, long long n, long long m, long long nh, long long g,
               long long d, long long s, const std::string& beta_h, std::ostream& out) {
    json j;
    if (mode == "gv") {
        j["vanishes"] = constants::gv_vanish(g, d, n, m, nh);
        j["inequality"] = constants::gv_vanish_inequality(n, m);
        auto thr = constants::gv_degree_threshold(n, m, nh);
        j["degree_threshold"] = thr.value.to_string();
        j["degree_threshold_exact"] = json_io::to_json(thr.exact);
        j["degree_threshold_ceiled"] = thr.ceiled;
    } else if (mode == "ptdt") {
        j["vanishes"] = constants::pt_dt_vanish(s, d, n, m, nh);
        rat rhs = rat(d * d) / rat(2 * n) + rat(n * m * m * m - 4 * m, 2) * rat(d) -
                  bounds::epsilon(m * d, n * m * m);
        j["threshold_s_below"] = json_io::to_json(-rhs);
    } else if (mode == "cy4") {
        j["empty"] = constants::cy4_empty(d, rat::from_string(beta_h), n, nh);
        j["threshold_betaH_below"] = json_io::to_json(-bounds::cy4_ch3_bound(d, n));
    } else {
        throw config_error("vanish: mode must be gv, ptdt, or cy4");
    }
    emit_json(out, j);
    return 0;
}

} // namespace

int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tilt-wall geometry, genus bounds, and GV/PT series tools"};
    app.require_subcommand(1);

    // walls
    auto* walls = app.add_subcommand("walls", "numerical walls for a class");
    long long w_d = 1, w_g = 0, w_n = 1, w_kmax = 3, w_d1max = 0;
    std::string w_ch, w_family = "line-bundles", w_svg, w_format = "json";
    walls->add_option("--d", w_d, "curve degree");
    walls->add_option("--g", w_g, "curve genus (sets ch_3 on P^3)");
    walls->add_option("--n", w_n, "polarization degree H^3");
    walls->add_option("--ch", w_ch, "raw class c0,c1,c2[,c3|*]");
    walls->add_option("--family", w_family, "line-bundles or ideal");
    walls->add_option("--k-max", w_kmax, "maximal twist");
    walls->add_option("--d1-max", w_d1max, "maximal residual degree for the ideal family");
    walls->add_option("--svg", w_svg, "write an SVG diagram here");
    walls->add_option("--format", w_format, "json or csv");

    // bound
    auto* bound = app.add_subcommand("bound", "closed-form genus bounds");
    std::string b_target, b_kind = "optimal", b_b0 = "-1/1", b_format = "json";
    long long b_n = 0, b_dmin = 1, b_dmax = 0;
    bound->add_option("--target", b_target, "built-in name or config path");
    bound->add_option("--n", b_n, "polarization degree when no target given");
    bound->add_option("--d", b_dmin, "single degree");
    bound->add_option("--d-max", b_dmax, "sweep up to this degree");
    bound->add_option("--kind", b_kind, "optimal|surface|castelnuovo|cy4|bmt|planar");
    bound->add_option("--b0", b_b0, "b_0 for --kind bmt");
    bound->add_option("--format", b_format, "json or csv");

    // constants
    auto* consts = app.add_subcommand("constants", "wall-control constants with certificates");
    long long c_n = 0, c_l = 0;
    std::string c_target, c_nh_map, c_only;
    consts->add_option("--n", c_n, "surface-minimum degree");
    consts->add_option("--l", c_l, "ambient surface degree");
    consts->add_option("--target", c_target, "solve the full chain for this target");
    consts->add_option("--nH-map", c_nh_map, "JSON map k -> n_H^{|k m_H H|}");
    consts->add_option("--only", c_only, "report a single inequality's threshold");

    // certify
    auto* certify = app.add_subcommand("certify", "certified low-degree genus bounds");
    std::string t_target, t_script = "paper", t_format = "json";
    long long t_d = 0, t_maxd = 0;
    bool t_explain = false;
    certify->add_option("--target", t_target, "built-in name or config path")->required();
    certify->add_option("--d", t_d, "single degree");
    certify->add_option("--max-d", t_maxd, "sweep degrees 1..max-d");
    certify->add_flag("--explain", t_explain, "include proof traces");
    certify->add_option("--script", t_script, "default or paper");
    certify->add_option("--format", t_format, "json or csv");

    // gvpt
    auto* gvpt = app.add_subcommand("gvpt", "GV/PT generating-series conversions");
    std::string g_mode, g_in, g_window = "-8..8", g_format = "json";
    long long g_n = 0, g_m = 1, g_nh = 0;
    gvpt->add_option("mode", g_mode, "to-pt, to-gv, or check")->required();
    gvpt->add_option("--in", g_in, "input CSV (default stdin)");
    gvpt->add_option("--window", g_window, "q-exponent window lo..hi");
    gvpt->add_option("--n", g_n, "degree for check");
    gvpt->add_option("--m", g_m, "very-ampleness multiplier for check");
    gvpt->add_option("--NH", g_nh, "stability threshold for check");
    gvpt->add_option("--format", g_format, "json or csv");

    // vanish
    auto* vanish = app.add_subcommand("vanish", "vanishing predicates");
    std::string v_mode, v_beta = "0/1";
    long long v_n = 1, v_m = 1, v_nh = 1, v_g = 0, v_d = 1, v_s = 0;
    vanish->add_option("mode", v_mode, "gv, ptdt, or cy4")->required();
    vanish->add_option("--n", v_n, "degree");
    vanish->add_option("--m", v_m, "very-ampleness multiplier");
    vanish->add_option("--NH", v_nh, "stability threshold");
    vanish->add_option("--g", v_g, "genus (gv)");
    vanish->add_option("--d", v_d, "curve/surface degree");
    vanish->add_option("--s", v_s, "Euler characteristic (ptdt)");
    vanish->add_option("--betaH", v_beta, "beta.H as num/den (cy4)");

    std::vector<const char*> cargs;
    cargs.push_back("castelbound");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        emit_error(err, e.what());
        return 2;
    }

    try {
        if (*walls)
            return cmd_walls(w_d, w_g, w_n, w_ch, w_family, w_kmax,
                             w_d1max > 0 ? w_d1max : w_d, w_svg, w_format, out);
        if (*bound)
            return cmd_bound(b_target, b_n, b_dmin, b_dmax > 0 ? b_dmax : b_dmin, b_kind,
                             b_b0, b_format, out);
        if (*consts) return cmd_constants(c_n, c_l, c_target, c_nh_map, c_only, out);
        if (*certify)
            return cmd_certify(t_target, t_d, t_maxd, t_explain, t_script, t_format, out);
        if (*gvpt)
            return cmd_gvpt(g_mode, g_in, g_window, g_n, g_m, g_nh, g_format, std::cin, out);
        if (*vanish) return cmd_vanish(v_mode, v_n, v_m, v_nh, v_g, v_d, v_s, v_beta, out);
        emit_error(err, "no subcommand selected");
        return 2;
    } catch (const castelbound::error& e) {
        emit_error(err, e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error(err, e.what());
        return 3;
    }
}

} // namespace castelbound::cli
