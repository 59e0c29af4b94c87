// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "castelbound/targets.hpp"
#include "castelbound/tiltwalls.hpp"

namespace castelbound::certifier {

enum class case_rule {
    base_small,
    neutral_bd,
    line_bundle_wall,
    curve_wall,
    sub_certificate,
    planar_exclusion,
    p3_section_exclusion,
    three_projection_exclusion,
    genus_drop_refinement,
};

std::string rule_name(case_rule r);

/// One node of a certificate tree. Top-level children of the root are the
/// enabled cases; refinement nodes hang off the case they adjust and
/// curve-wall nodes carry their two sub-certificates.
struct case_node {
    case_rule rule = case_rule::base_small;
    long long k = 0;      // twist level for wall cases
    long long d1 = 0;     // residual degree for curve walls
    long long d = 0;      // degree for sub-certificate references
    long long value = 0;  // this case's bound contribution
    std::string note;     // justification echoed from axiom/script data
    std::vector<case_node> children;

    std::string label() const;
};

struct excluded_case {
    std::string label;
    std::string reason;
};

/// A certified genus bound for (target, d): bound equals the maximum over
/// the enabled case leaves of the tree.
struct certificate {
    std::string target;
    long long d = 0;
    long long bound = 0;
    std::vector<case_node> cases;
    std::vector<excluded_case> excluded;

    std::size_t enabled_case_count() const { return cases.size(); }
};

enum class script_kind { paper, conservative };

/// Branch-and-bound certification engine for a single target. Memoizes
/// per-degree certificates; the memo is guarded so concurrent certify
/// calls observe atomic per-degree insertion.
class engine {
public:
    engine(target_threefold target, script_kind kind = script_kind::paper);

    const target_threefold& target() const { return target_; }
    script_kind kind() const { return kind_; }

    /// Certified bound for degree d, 1 <= d <= target.D1.
    std::shared_ptr<const certificate> certify(long long d);

    /// Memoized sweep d = 1..D1.
    std::vector<std::shared_ptr<const certificate>> certify_table();

private:
    target_threefold target_;
    script_kind kind_;
    std::mutex mu_;
    std::map<long long, std::shared_ptr<const certificate>> memo_;

    std::shared_ptr<const certificate> lookup(long long d);
    std::shared_ptr<const certificate> build(long long d);
    long long bound_of(long long d); // requires memo_[d] present
    long long drop_for(long long d, const std::string& case_id, case_node& node) const;
};

/// Human-readable proof trace.
std::string explain(const certificate& cert);

} // namespace castelbound::certifier
