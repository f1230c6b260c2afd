#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/buildset.hpp"
#include "toric/fan.hpp"
#include "toric/nested.hpp"

namespace toric {

// The combinatorial Fano criterion: within every component C, any two
// incomparable intersecting members must union to C and intersect inside B.
struct CriterionViolation {
    Subset component = 0;
    Subset i1 = 0;
    Subset i2 = 0;
    enum class Reason { union_not_component, intersection_missing } reason =
        Reason::union_not_component;
    std::string to_string() const;
};

struct CriterionResult {
    bool fano = false;
    std::vector<CriterionViolation> violations;  // canonical scan order
};
CriterionResult fano_criterion(const BuildingSet& b);

// The constructive witness of non-Fanoness: a pair (J1, J2) whose assembled
// families ({Jk} ∪ N ∪ (B|_{J1∩J2})_max ∪ N' ∪ (B|_{(J1ΔJ2)\{j1,j2}})_max)
// are nested sets of B, found by the strictly-|Δ|-decreasing recursion with
// canonical (smallest-first) choices.
struct WitnessPair {
    Subset j1 = 0;
    Subset j2 = 0;
    int elem1 = 0;  // j_1 ∈ J1 \ J2
    int elem2 = 0;  // j_2 ∈ J2 \ J1
    NestedSet inner;   // maximal nested set of B|_{J1∩J2}
    NestedSet outer;   // maximal nested set of B|_{(J1ΔJ2)\{j1,j2}}
    NestedSet family1;  // assembled family containing J1
    NestedSet family2;
    int depth = 0;  // recursion depth taken
};
WitnessPair find_witness_pair(const BuildingSet& b, Subset i1, Subset i2);

// An explicit wall of the component fan with nonpositive intersection number,
// assembled from the witness pair (and, when J1 ∪ J2 is proper, extended to a
// maximal nested set through the link of J1 ∪ J2). The number is recomputed
// independently by the fan module. Empty when the criterion holds.
struct WitnessWall {
    Subset component = 0;       // the failing component
    std::vector<Subset> tau_members;
    Subset j1 = 0;
    Subset j2 = 0;
    NestedSet link_extension;  // members completing tau through the link of J1 ∪ J2
    Wall wall;      // in the fan of the failing component's restriction
    Int number = 0;
};
std::optional<WitnessWall> witness_wall(const BuildingSet& b);

}  // namespace toric
