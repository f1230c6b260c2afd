#pragma once

#include <vector>

#include "toric/buildset.hpp"
#include "toric/linalg.hpp"
#include "toric/nested.hpp"

namespace toric {

// A simplicial fan given by primitive ray generators and maximal cones as
// sorted ray-index lists. Product fans keep their factors so Fano evaluation
// can run factor-wise; all geometry is exact integer arithmetic.
struct Fan {
    int dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> max_cones;
    std::vector<Fan> factors;  // nonempty iff built as a product
};

// e_I = sum of e_i over I, with e_{n+1} = -(e_1 + ... + e_n). Rejects I = S
// (the zero vector) and out-of-range elements.
std::vector<Int> ray_vector(Subset i_set, int n);

// The fan of a building set. For connected B the rays are e_I over
// B \ {S} in canonical member order and the maximal cones come from the
// maximal nested sets; for disconnected B the component fans are multiplied
// in canonical component order. ray_members[i] is the member behind ray i
// (original labels, so they stay distinct across components).
struct BuiltFan {
    Fan fan;
    std::vector<Subset> ray_members;
};
BuiltFan build_fan(const BuildingSet& b);

Fan product_fan(const std::vector<Fan>& parts);

// True iff every maximal cone has dim generators with determinant ±1.
bool is_smooth(const Fan& f);

// Completeness oracle (not a proof procedure): every (n-1)-cone must sit in
// exactly two maximal cones, the adjacency graph must be connected, and every
// sample lattice point with coordinates in [-3,3] that avoids all cone
// boundaries must lie in exactly one maximal cone.
bool is_complete(const Fan& f);

struct Wall {
    std::vector<int> tau;  // sorted ray indices, size dim-1
    int left_cone = -1;    // lexicographically smaller adjacent maximal cone
    int right_cone = -1;
    int v = -1;        // completing ray of left_cone
    int v_prime = -1;  // completing ray of right_cone
};

// All walls of a complete simplicial fan; throws if some (n-1)-cone does not
// have exactly two completions.
std::vector<Wall> walls(const Fan& f);

// (-K . V(tau)) = 2 + sum a_i from v + v' + sum a_i v_i = 0, solved exactly
// over the integers in the lattice basis (tau rays, v).
Int intersection_number(const Fan& f, const Wall& w);

// Fano verdict with the full wall-number profile. For product fans the
// factors are evaluated separately and every factor wall number is expanded
// with multiplicity (product of the other factors' maximal cone counts), so
// `numbers` is the exact wall multiset of the product.
struct FanoProfile {
    bool fano = false;
    std::vector<Int> numbers;                        // sorted multiset
    std::vector<std::pair<Wall, Int>> wall_numbers;  // per wall; empty for products
};
FanoProfile fano_by_intersection(const Fan& f);

}  // namespace toric
