#include "toric/fano.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace toric {

std::string CriterionViolation::to_string() const {
    std::string why = reason == Reason::union_not_component
                          ? "union is not the component"
                          : "intersection is not a member";
    return subset_to_string(i1) + ", " + subset_to_string(i2) + " in component " +
           subset_to_string(component) + ": " + why;
}

CriterionResult fano_criterion(const BuildingSet& b) {
    CriterionResult out;
    for (Subset c : components(b)) {
        BuildingSet part = restriction(b, c);
        for (std::size_t i = 0; i < part.members.size(); ++i) {
            for (std::size_t j = i + 1; j < part.members.size(); ++j) {
                Subset a = part.members[i];
                Subset d = part.members[j];
                if ((a & d) == 0 || is_subset(a, d) || is_subset(d, a)) continue;
                if ((a | d) != c) {
                    out.violations.push_back(
                        {c, a, d, CriterionViolation::Reason::union_not_component});
                } else if (!part.contains(a & d)) {
                    out.violations.push_back(
                        {c, a, d, CriterionViolation::Reason::intersection_missing});
                }
            }
        }
    }
    out.fano = out.violations.empty();
    return out;
}

namespace {

// Canonical maximal nested set: first in (size, lex) face order. For the
// empty ground the answer is the empty set.
NestedSet first_maximal_nested(const BuildingSet& b, Subset c) {
    if (c == 0) return {};
    auto faces = maximal_nested_sets(restriction(b, c));
    assert(!faces.empty());
    return faces.front();
}

std::vector<Subset> component_masks(const BuildingSet& b, Subset c) {
    if (c == 0) return {};
    return components(restriction(b, c));
}

NestedSet assemble(Subset head, const NestedSet& inner, const std::vector<Subset>& inner_max,
                   const NestedSet& outer, const std::vector<Subset>& outer_max) {
    NestedSet out;
    out.push_back(head);
    out.insert(out.end(), inner.begin(), inner.end());
    out.insert(out.end(), inner_max.begin(), inner_max.end());
    out.insert(out.end(), outer.begin(), outer.end());
    out.insert(out.end(), outer_max.begin(), outer_max.end());
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}

WitnessPair recurse_witness(const BuildingSet& b, Subset i1, Subset i2, int depth) {
    int e1 = lowest_element(i1 & ~i2);
    int e2 = lowest_element(i2 & ~i1);
    Subset sym = (i1 ^ i2) & ~singleton(e1) & ~singleton(e2);
    Subset inter = i1 & i2;

    NestedSet inner = first_maximal_nested(b, inter);
    std::vector<Subset> inner_max = component_masks(b, inter);
    NestedSet outer = first_maximal_nested(b, sym);
    std::vector<Subset> outer_max = component_masks(b, sym);

    NestedSet fam1 = assemble(i1, inner, inner_max, outer, outer_max);
    NestedSet fam2 = assemble(i2, inner, inner_max, outer, outer_max);
    auto issue1 = check_nested(b, fam1);
    auto issue2 = check_nested(b, fam2);
    if (!issue1 && !issue2)
        return WitnessPair{i1, i2, e1, e2, inner, outer, fam1, fam2, depth};

    if (subset_size(i1 ^ i2) == 2)
        throw std::logic_error("witness recursion: base case families must be nested");

    // Continue with a failing family, the first by symmetry.
    if (!issue1.has_value()) {
        std::swap(i1, i2);
        std::swap(e1, e2);
        std::swap(fam1, fam2);
        std::swap(issue1, issue2);
    }

    // Siblings of i1 living in the symmetric-difference part.
    std::vector<Subset> outer_part = outer;
    outer_part.insert(outer_part.end(), outer_max.begin(), outer_max.end());
    std::sort(outer_part.begin(), outer_part.end(), subset_less);

    Subset next1 = 0, next2 = 0;
    // Case 1: a condition-(1) violation pairs i1 with some L in the outer part.
    Subset case1_l = 0;
    for (Subset l : outer_part) {
        if ((i1 & l) != 0 && !is_subset(l, i1) && !is_subset(i1, l)) {
            case1_l = l;
            break;
        }
    }
    if (case1_l != 0) {
        next1 = i1 | case1_l;
        next2 = i2;
        if (!b.contains(next1))
            throw std::logic_error("witness recursion: union axiom failed in case 1");
    } else {
        // Condition-(2) violation: take the canonical violating family.
        if (issue1->kind != NestedIssue::Kind::disjoint_union)
            throw std::logic_error("witness recursion: unexpected failure kind");
        const NestedSet& family = issue1->family;
        Subset ls = 0;
        for (Subset m : family)
            if (is_subset(m, sym)) ls |= m;
        if (ls == 0) throw std::logic_error("witness recursion: violating family has no L part");
        bool contains_i1 = std::find(family.begin(), family.end(), i1) != family.end();
        if (contains_i1) {
            // Case 3: i1 itself sits in the disjoint family.
            next1 = i1 | ls;
            next2 = i2;
        } else {
            // Case 2: both sides absorb the L's; membership re-derived from
            // the union axiom must already be reflected in B.
            next1 = i1 | ls;
            next2 = i2 | ls;
        }
        if (!b.contains(next1) || !b.contains(next2))
            throw std::logic_error("witness recursion: union axiom failed in case 2/3");
    }

    assert((next1 | next2) == (i1 | i2));
    assert(is_proper_subset(inter, next1 & next2));

    if (!b.contains(inter) && b.contains(next1 & next2)) {
        // Detour: shrink back to (I1, I'1 ∩ I'2), which strictly shrinks the
        // union and keeps the refinement reachable.
        if (next1 == i1) {
            std::swap(i1, i2);
            std::swap(e1, e2);
            std::swap(next1, next2);
        }
        assert(is_proper_subset(i1, next1));
        Subset dd1 = i1;
        Subset dd2 = next1 & next2;
        assert((dd1 & dd2) != 0 && !is_subset(dd1, dd2) && !is_subset(dd2, dd1));
        return recurse_witness(b, dd1, dd2, depth + 1);
    }
    return recurse_witness(b, next1, next2, depth + 1);
}

}  // namespace

WitnessPair find_witness_pair(const BuildingSet& b, Subset i1, Subset i2) {
    if (!b.connected()) throw std::invalid_argument("PreconditionViolated: B must be connected");
    if (!b.contains(i1) || !b.contains(i2))
        throw std::invalid_argument("PreconditionViolated: arguments must be members");
    if ((i1 & i2) == 0 || is_subset(i1, i2) || is_subset(i2, i1))
        throw std::invalid_argument(
            "PreconditionViolated: arguments must be incomparable and intersecting");
    WitnessPair wp = recurse_witness(b, i1, i2, 0);
    if (!b.contains(i1 & i2)) {
        // Refinement promised by the recursion.
        assert(!b.contains(wp.j1 & wp.j2) || is_proper_subset(wp.j1 | wp.j2, i1 | i2));
    }
    return wp;
}

namespace {

std::optional<WitnessWall> witness_wall_connected(const BuildingSet& b) {
    CriterionResult crit = fano_criterion(b);
    if (crit.fano) return std::nullopt;
    const CriterionViolation& v = crit.violations.front();
    WitnessPair wp = find_witness_pair(b, v.i1, v.i2);

    WitnessWall out;
    out.component = b.ground;
    out.j1 = wp.j1;
    out.j2 = wp.j2;
    Subset c = wp.j1 | wp.j2;

    out.tau_members = wp.family1;
    out.tau_members.erase(
        std::find(out.tau_members.begin(), out.tau_members.end(), wp.j1));
    if (c != b.ground) {
        // Extend through the link of J1 ∪ J2: a canonical maximal nested set
        // of the contraction, pulled back along the link correspondence.
        BuildingSet contracted = contraction(b, c);
        auto faces = maximal_nested_sets(contracted);
        assert(!faces.empty());
        out.tau_members.push_back(c);
        for (Subset m : faces.front()) {
            Subset pulled = b.contains(c | m) ? (c | m) : m;
            out.link_extension.push_back(pulled);
            out.tau_members.push_back(pulled);
        }
        std::sort(out.link_extension.begin(), out.link_extension.end(), subset_less);
    } else {
        assert(!b.contains(wp.j1 & wp.j2));
    }
    std::sort(out.tau_members.begin(), out.tau_members.end(), subset_less);
    assert(static_cast<int>(out.tau_members.size()) == b.size() - 2);

    BuiltFan built = build_fan(b);
    std::vector<int> tau;
    for (Subset m : out.tau_members) {
        auto it = std::find(built.ray_members.begin(), built.ray_members.end(), m);
        assert(it != built.ray_members.end());
        tau.push_back(static_cast<int>(it - built.ray_members.begin()));
    }
    std::sort(tau.begin(), tau.end());

    bool found = false;
    for (const Wall& w : walls(built.fan)) {
        if (w.tau == tau) {
            out.wall = w;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("witness wall is not a wall of the fan");
    out.number = intersection_number(built.fan, out.wall);
    return out;
}

}  // namespace

std::optional<WitnessWall> witness_wall(const BuildingSet& b) {
    if (b.connected()) return witness_wall_connected(b);
    for (Subset c : components(b)) {
        BuildingSet part = restriction(b, c);
        auto wall = witness_wall_connected(part);
        if (wall) {
            wall->component = c;
            return wall;
        }
    }
    return std::nullopt;
}

}  // namespace toric
