#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/subsets.hpp"

namespace toric {

// A building set on a ground set (stored as a bitmask of original labels):
// every singleton is a member, and the union of two intersecting members is
// a member. Members are kept deduplicated in the canonical (size, element-lex)
// order. Sub-building-sets (restrictions, contractions) keep original labels;
// relabeling to 1..k happens only at IO / canonicalization boundaries.
struct BuildingSet {
    Subset ground = 0;
    std::vector<Subset> members;

    int size() const { return subset_size(ground); }
    bool contains(Subset s) const;
    bool connected() const;
};

bool operator==(const BuildingSet& a, const BuildingSet& b);

struct ValidationIssue {
    enum class Kind { empty_member, missing_singleton, union_violation };
    Kind kind;
    Subset first = 0;
    Subset second = 0;
    int element = 0;
    std::string to_string() const;
};

// Checks the two building-set conditions; reports the first violation in
// canonical member order, or nothing if the family is a building set.
std::optional<ValidationIssue> check_building_set(const std::vector<Subset>& family,
                                                  Subset ground);

// Validated constructor; throws std::invalid_argument with the issue text.
BuildingSet make_building_set(std::vector<Subset> family, Subset ground);

// Trusted constructor for internally produced families (sorts + dedupes only).
BuildingSet building_set_unchecked(std::vector<Subset> family, Subset ground);

// B_max: the maximal members, in canonical order. They partition the ground.
std::vector<Subset> components(const BuildingSet& b);

// B|_C = members contained in C, as a building set on ground C.
BuildingSet restriction(const BuildingSet& b, Subset c);

// C \ B = { I ⊆ S\C nonempty : I ∈ B or C ∪ I ∈ B }, on ground S\C.
BuildingSet contraction(const BuildingSet& b, Subset c);

struct SimpleGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;  // unordered, no loops, no dupes
};

// Vertex sets of connected induced subgraphs.
BuildingSet graphical_building_set(const SimpleGraph& g);

// Relabels the ground elements to 1..k (ascending). old_label[i] is the
// original element carried by new label i (index 0 unused).
struct Regrounded {
    BuildingSet set;
    std::vector<int> old_label;
};
Regrounded reground(const BuildingSet& b);

// Canonical representative of the isomorphism class: the relabeling of B
// (onto ground 1..k) whose sorted member list is lexicographically minimal
// over all permutations. relabel[e] is the new label of original element e.
// Brute force over k! permutations, memoized; requires |S| <= 7.
struct CanonicalForm {
    BuildingSet form;
    std::vector<int> relabel;
};
CanonicalForm canonical_form(const BuildingSet& b);

}  // namespace toric
