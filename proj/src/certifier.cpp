// SPDX-License-Identifier: Apache-2.0

#include "castelbound/certifier.hpp"

#include <algorithm>
#include <sstream>

#include "castelbound/bounds.hpp"
#include "castelbound/errors.hpp"

namespace castelbound::certifier {

using numerics::big_int;
using numerics::rat;
using numerics::surd;
using numerics::surd_cmp;
using tiltwalls::chern_h;

std::string rule_name(case_rule r) {
    switch (r) {
        case case_rule::base_small: return "BaseSmall";
        case case_rule::neutral_bd: return "NeutralBd";
        case case_rule::line_bundle_wall: return "LineBundleWall";
        case case_rule::curve_wall: return "CurveWall";
        case case_rule::sub_certificate: return "SubCertificate";
        case case_rule::planar_exclusion: return "PlanarExclusion";
        case case_rule::p3_section_exclusion: return "P3SectionExclusion";
        case case_rule::three_projection_exclusion: return "ThreeProjectionExclusion";
        case case_rule::genus_drop_refinement: return "GenusDropRefinement";
    }
    return "?";
}

std::string case_node::label() const {
    std::ostringstream os;
    os << rule_name(rule);
    if (rule == case_rule::line_bundle_wall) os << "(" << k << ")";
    if (rule == case_rule::curve_wall) os << "(" << k << ", " << d1 << ")";
    if (rule == case_rule::sub_certificate) os << "(d=" << d << ")";
    return os.str();
}

engine::engine(target_threefold target, script_kind kind)
    : target_(std::move(target)), kind_(kind) {
    target_.validate();
}

std::shared_ptr<const certificate> engine::lookup(long long d) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(d);
    return it == memo_.end() ? nullptr : it->second;
}

long long engine::bound_of(long long d) {
    auto c = lookup(d);
    if (!c) throw error("certifier: internal memo miss");
    return c->bound;
}

std::shared_ptr<const certificate> engine::certify(long long d) {
    if (d < 1 || d > target_.d1_max)
        throw out_of_certified_range_error("certify: d=" + std::to_string(d) +
                                           " outside certified range of " + target_.name);
    for (long long dd = 1; dd <= d; ++dd) {
        if (lookup(dd)) continue;
        auto cert = build(dd);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(dd, std::move(cert));
    }
    return lookup(d);
}

std::vector<std::shared_ptr<const certificate>> engine::certify_table() {
    std::vector<std::shared_ptr<const certificate>> out;
    for (long long d = 1; d <= target_.d1_max; ++d) out.push_back(certify(d));
    return out;
}

long long engine::drop_for(long long d, const std::string& case_id, case_node& node) const {
    if (kind_ != script_kind::paper) return 0;
    long long total = 0;
    for (const auto& drop : target_.paper_script.drops) {
        if (drop.d != d || drop.case_id != case_id) continue;
        case_node ref;
        ref.rule = drop.requires_axiom == "p3_section_cap"
                       ? case_rule::p3_section_exclusion
                       : case_rule::genus_drop_refinement;
        ref.value = -drop.amount;
        ref.note = drop.note;
        node.children.push_back(std::move(ref));
        total += drop.amount;
    }
    return total;
}

std::shared_ptr<const certificate> engine::build(long long d) {
    const auto& ax = target_.axioms;
    const bool paper = kind_ == script_kind::paper;
    auto cert = std::make_shared<certificate>();
    cert->target = target_.name;
    cert->d = d;

    std::vector<case_node> cases;

    // Planar base case. With the no-planes axiom, curves of degree above
    // the plane-section cap cannot be planar; just above the cap the
    // equality clause of planar_bound still shaves one.
    {
        long long base_limit = ax.no_planes
                                   ? (paper ? target_.paper_script.base_small_max_d
                                            : ax.plane_section_cap)
                                   : target_.d1_max;
        if (d <= base_limit) {
            case_node node;
            node.rule = case_rule::base_small;
            node.value = bounds::planar_bound(d);
            if (ax.no_planes && d > ax.plane_section_cap) {
                if (paper && target_.paper_script.planar_decrement) {
                    case_node ex;
                    ex.rule = case_rule::planar_exclusion;
                    ex.value = -1;
                    ex.note = ax.no_planes_note;
                    node.children.push_back(std::move(ex));
                    node.value -= 1;
                    cases.push_back(std::move(node));
                }
                // without the decrement rule the planar case is simply
                // impossible here and contributes nothing
                else {
                    cert->excluded.push_back(
                        {node.label(), "planar curves impossible: " + ax.no_planes_note});
                }
            } else {
                cases.push_back(std::move(node));
            }
        } else if (ax.no_planes) {
            cert->excluded.push_back(
                {"BaseSmall", "planar curves impossible: " + ax.no_planes_note});
        }
    }

    // Boundary evaluation at b = b_d when no wall interferes.
    {
        case_node node;
        node.rule = case_rule::neutral_bd;
        node.value = numerics::floor_of_surd(bounds::bmt_bound_at_bd(d)).to_i64();
        node.value -= drop_for(d, "neutral", node);
        cases.push_back(std::move(node));
    }

    // Line-bundle walls W(O(-k), I_C): rightmost point is exactly -k, so
    // the wall meets the admissible strip iff k^2 < d. The k = 1 wall is
    // the planar case, handled above when planes are excluded.
    {
        long long k_min = ax.no_planes ? 2 : 1;
        for (long long k = k_min; k * k < d; ++k) {
            bool excluded = false;
            if (paper) {
                for (const auto& ex : target_.paper_script.lb_exclusions) {
                    if (ex.k == k && ex.d_lo <= d && d <= ex.d_hi) {
                        cert->excluded.push_back(
                            {"LineBundleWall(" + std::to_string(k) + ")",
                             "ThreeProjectionExclusion: " + ex.note});
                        excluded = true;
                        break;
                    }
                }
            }
            if (excluded) continue;
            case_node node;
            node.rule = case_rule::line_bundle_wall;
            node.k = k;
            node.value = bounds::surface_bound(d, k).floor().to_i64();
            node.value -= drop_for(d, "lb:" + std::to_string(k), node);
            cases.push_back(std::move(node));
        }
    }

    // Curve walls W(I_{C1}(-k), I_C). Admissibility caps d1; the wall must
    // reach into the strip b_d < b < 0 (rightmost t satisfies t^2 < d) and
    // the twist level must obey k <= -t.
    {
        chern_h v(rat(1), rat(0), rat(-d));
        for (long long k = 1; k * k <= d; ++k) {
            long long cap = tiltwalls::max_admissible_d1(d, 1, k);
            for (long long d1 = 1; d1 <= cap; ++d1) {
                chern_h w = tiltwalls::twist(chern_h(rat(1), rat(0), rat(-d1)), rat(k));
                auto wall = tiltwalls::numerical_wall(v, w);
                std::string lbl =
                    "CurveWall(" + std::to_string(k) + ", " + std::to_string(d1) + ")";
                if (!wall || !wall->is_semicircle()) {
                    cert->excluded.push_back({lbl, "numerical wall is empty"});
                    continue;
                }
                surd t = wall->circle().rightmost();
                // In range: t > b_d = -sqrt(d), i.e. t^2 < d for t < 0.
                if (surd_cmp(t.square(), rat(d)) != std::strong_ordering::less) {
                    cert->excluded.push_back({lbl, "wall lies below b_d"});
                    continue;
                }
                // Heart constraint: k <= -t.
                if (surd_cmp(-t, rat(k)) == std::strong_ordering::less) {
                    cert->excluded.push_back({lbl, "twist level exceeds the wall window"});
                    continue;
                }
                long long piece1_raw = bound_of(d1);
                long long piece1 = piece1_raw;
                long long piece2 = bound_of(d - d1);

                case_node node;
                node.rule = case_rule::curve_wall;
                node.k = k;
                node.d1 = d1;

                // When the residual piece can only attain its cap as a
                // plane curve, the plane it spans forces a wall at least
                // as high as this one; the cap drops by one.
                if (paper && target_.paper_script.planar_piece_refinement &&
                    piece1 == bounds::planar_bound(d1) && ax.no_planes &&
                    tiltwalls::divisor_wall_exists(d, 1, 1, d1)) {
                    rat c_new_max = rat(-1, 2) - rat(d1);
                    if (!(wall->circle().center < c_new_max)) {
                        piece1 -= 1;
                        case_node ex;
                        ex.rule = case_rule::planar_exclusion;
                        ex.value = -1;
                        ex.note = "a planar residual piece of degree " +
                                  std::to_string(d1) + " forces a plane wall at or above "
                                  "this one";
                        node.children.push_back(std::move(ex));
                    }
                }

                node.value = piece1 + piece2 + k * d1 - 1;
                case_node s1, s2;
                s1.rule = case_rule::sub_certificate;
                s1.d = d1;
                s1.value = piece1_raw;
                s2.rule = case_rule::sub_certificate;
                s2.d = d - d1;
                s2.value = piece2;
                node.children.push_back(std::move(s1));
                node.children.push_back(std::move(s2));
                cases.push_back(std::move(node));
            }
        }
    }

    long long best = cases.empty() ? 0 : cases.front().value;
    for (const auto& c : cases) best = std::max(best, c.value);
    cert->bound = best;
    cert->cases = std::move(cases);
    return cert;
}

std::string explain(const certificate& cert) {
    std::ostringstream os;
    os << cert.target << " d=" << cert.d << ": bound " << cert.bound << "\n";
    for (const auto& c : cert.cases) {
        os << "  " << c.label() << " -> " << c.value;
        if (c.value == cert.bound) os << "  [binding]";
        os << "\n";
        for (const auto& ch : c.children) {
            os << "    " << ch.label();
            if (ch.rule == case_rule::sub_certificate)
                os << " bound " << ch.value;
            else
                os << " adjusts " << ch.value;
            if (!ch.note.empty()) os << "  (" << ch.note << ")";
            os << "\n";
        }
    }
    for (const auto& e : cert.excluded)
        os << "  excluded " << e.label << ": " << e.reason << "\n";
    return os.str();
}

} // namespace castelbound::certifier
