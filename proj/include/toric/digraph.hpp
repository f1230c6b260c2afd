#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toric/buildset.hpp"
#include "toric/fan.hpp"

namespace toric {

// Loop-free, multiplicity-free directed graph on nodes 1..n+1.
struct Digraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> arrows;  // sorted, deduplicated
};
bool operator==(const Digraph& a, const Digraph& b);

// P_G: convex hull of { e_i - e_j : (i,j) arrow } inside the sum-zero
// hyperplane H of R^{n+1}. Geometry is done in the lattice coordinates
// F(x) = (x_1, x_1+x_2, ..., x_1+...+x_n), a lattice isomorphism
// H ∩ Z^{n+1} -> Z^n under which e_i - e_{i+1} maps to e_i.
struct PolytopeFacet {
    std::vector<int> points;        // indices of points on the facet
    std::vector<Int> normal;        // primitive outer normal (F-coordinates)
    Int offset = 0;                 // facet hyperplane: normal . x = offset
};

struct Polytope {
    int dim = 0;                              // n
    std::vector<std::vector<Int>> points_h;   // arrow vectors in R^{n+1}
    std::vector<std::vector<Int>> points;     // same points, F-coordinates
    std::vector<int> vertex_ids;              // which points are vertices
    std::vector<PolytopeFacet> facets;        // empty unless full-dimensional
    bool full_dim = false;
};

Polytope polytope_from_digraph(const Digraph& g);

// Hull of arbitrary lattice points of H (each summing to zero).
Polytope polytope_from_h_points(const std::vector<std::vector<Int>>& h_points);

// Smooth Fano verdict: origin the only interior lattice point, and every
// facet's vertices a lattice basis.
struct SmoothFanoReport {
    enum class Status { ok, not_full_dimensional, origin_not_interior };
    Status status = Status::ok;
    bool fano = false;
    bool smooth = false;
    bool verdict() const { return status == Status::ok && fano && smooth; }
};
SmoothFanoReport check_smooth_fano(const Polytope& p);

// F-coordinate image of a point of H.
std::vector<Int> f_coordinates(const std::vector<Int>& h_point);

// Face fan of P_G (cones over facets); requires P_G smooth Fano.
Fan fan_of_digraph(const Digraph& g);

// U = members of B \ {S} admitting a partner J with I ∩ J ≠ ∅, I ∪ J = S.
// For Fano B the shape is ∅, a pair, or the triple {I, J, S \ (I∩J)}.
struct UClassification {
    std::vector<Subset> u;
    enum class Shape { empty, pair, triple } shape = Shape::empty;
    Subset i = 0;
    Subset j = 0;
    Subset complement = 0;  // S \ (I∩J), triple case only
};
UClassification compute_u(const BuildingSet& b);

// A bijection ground -> 1..|S| making every member an interval; requires that
// intersecting members are nested. result[e] is the new position of element e.
std::vector<int> interval_renumbering(const BuildingSet& b);

// The realizing digraph of a connected Fano building set: relabel so members
// are intervals (blockwise via U in the pair/triple cases), then emit the
// arrow (i, j+1) for each member [i, j] (wrapping to (i, 1) when j = n+1),
// plus (b+1, a) for S \ (I∩J) in the triple case.
Digraph fano_to_digraph(const BuildingSet& b);

// One-point union: factors are relabeled to disjoint ranges and the node
// labeled 1 of every factor is identified.
Digraph glue_digraphs(const std::vector<Digraph>& parts);

// Unimodular map carrying rays onto rays and maximal cones onto maximal
// cones, found by anchoring one cone of `a` against every generator ordering
// of every cone of `b`.
std::optional<Matrix> fan_isomorphism(const Fan& a, const Fan& b);

}  // namespace toric
