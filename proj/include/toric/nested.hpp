#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/buildset.hpp"

namespace toric {

// A nested set is stored as a sorted vector of members (canonical order).
using NestedSet = std::vector<Subset>;

struct NestedIssue {
    enum class Kind {
        not_in_building_set,
        maximal_element,
        overlap,         // two members intersect but neither contains the other
        disjoint_union,  // pairwise disjoint members whose union is in B
    };
    Kind kind;
    Subset first = 0;
    Subset second = 0;
    NestedSet family;  // the violating disjoint family (disjoint_union only)
    Subset family_union = 0;
    std::string to_string() const;
};

// Checks the nested-set conditions against B \ B_max. The diagnostic is the
// first violation hit when members are inserted in canonical order; the
// disjoint-union family is the minimal one found in canonical scan order.
std::optional<NestedIssue> check_nested(const BuildingSet& b, const std::vector<Subset>& n);
bool is_nested(const BuildingSet& b, const std::vector<Subset>& n);

struct NestedComplex {
    std::vector<NestedSet> faces;  // sorted by (size, lex)
    std::size_t count_of_size(std::size_t k) const;
};

// All nested sets of B. Guarded at |S| <= 10.
NestedComplex nested_complex(const BuildingSet& b);

// Inclusion-maximal nested sets (computed genuinely, not via the cardinality
// shortcut, so purity can be asserted against it in tests).
std::vector<NestedSet> maximal_nested_sets(const BuildingSet& b);

// The link of C in N(B), the building set B|_C ∪ (C \ B) it is isomorphic to,
// and the vertex correspondence I -> I\C (when C ⊆ I) else I.
struct LinkData {
    std::vector<NestedSet> link_faces;
    BuildingSet image;
    std::vector<std::pair<Subset, Subset>> vertex_map;
    bool isomorphism_verified = false;
};
LinkData link(const BuildingSet& b, Subset c);

// Incremental checker used by the enumerator: members must be added in
// canonical order for diagnostics to be deterministic. On success the member
// is kept; on failure the checker is unchanged.
class NestedChecker {
  public:
    explicit NestedChecker(const BuildingSet& b);
    std::optional<NestedIssue> add(Subset j);
    const NestedSet& elements() const { return elems_; }

  private:
    const BuildingSet* b_;
    std::vector<Subset> maximal_members_;
    NestedSet elems_;
};

}  // namespace toric
