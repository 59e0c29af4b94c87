// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "castelbound/bounds.hpp"

namespace castelbound::certifier {

using numerics::rat;

/// Geometric facts about a target 3-fold that the certifier may invoke.
/// Every enabled axiom carries a justification string that is echoed in
/// proof traces.
struct axiom_set {
    bool no_planes = false;
    long long plane_section_cap = 0; // degree of the planar curve containing X cap plane
    bool no_quadric_surfaces = false;
    std::optional<long long> quadric_intersection_degree; // degree of S cap X, S a quadric
    std::optional<long long> p3_section_cap;              // degree of a curve containing X cap P^3
    bool p4_ci222_available = false;                      // (2,2,2)-curve branch usable
    std::string no_planes_note;
    std::string quadric_note;
    std::string p3_section_note;
};

/// A per-degree bound refinement: subtract `amount` from the named case
/// ("neutral" or "lb:<k>") at degree d, justified by `requires_axiom`.
struct genus_drop {
    long long d = 0;
    std::string case_id;
    long long amount = 0;
    std::string requires_axiom; // "p3_section_cap" | "quadric_intersection_degree" | "p4_ci222"
    std::string note;
};

/// Removal of a line-bundle wall case over a degree range (the persistent
/// quadric-wall argument).
struct lb_exclusion {
    long long k = 0;
    long long d_lo = 0, d_hi = 0;
    std::string note;
};

/// Degree-specific refinement schedule. "paper" ships the refinements the
/// case analyses actually use; "default" keeps only the axiom-forced case
/// enablement and is sound but weaker.
struct rule_script {
    std::string name;
    long long base_small_max_d = 0; // planar base case enabled for d <= this
    bool planar_decrement = false;  // allow planar_bound - 1 above the section cap
    bool planar_piece_refinement = false;
    std::vector<lb_exclusion> lb_exclusions;
    std::vector<genus_drop> drops;
};

/// A named 3-fold profile: numeric invariants, conjectural epsilon table
/// (when known), geometric axioms, certified degree range, and the
/// refinement schedule.
struct target_threefold {
    std::string name;
    long long n = 0;       // degree H^3
    long long s = 1;       // least s with |sH| nonempty
    long long m_h = 1;     // m_H H very ample
    long long ambient_dim = 0;
    long long d1_max = 0;  // certified range
    std::optional<bounds::epsilon_table> eps;
    axiom_set axioms;
    rule_script paper_script;
    std::vector<long long> expected_table; // reference bounds for d = 1..d1_max, when known

    const bounds::epsilon_table* eps_table() const { return eps ? &*eps : nullptr; }
    rat optimal_bound_at(long long d) const {
        return bounds::optimal_bound(d, n, eps_table());
    }
    void validate() const;
};

/// Built-in targets: x5, x24, x33, x223, x2222, pfaff-gr27-x, pfaff-gr27-y.
const std::vector<target_threefold>& builtin_targets();
const target_threefold& builtin_target(const std::string& name);
bool has_builtin_target(const std::string& name);

} // namespace castelbound::certifier
