#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "toric/atlas.hpp"
#include "toric/digraph.hpp"
#include "toric/fano.hpp"

using namespace toric;

namespace {

BuildingSet bs(std::initializer_list<std::initializer_list<int>> family,
               std::initializer_list<int> ground) {
    std::vector<Subset> members;
    for (const auto& m : family) members.push_back(subset_of(std::vector<int>(m)));
    return make_building_set(std::move(members), subset_of(std::vector<int>(ground)));
}

const BuildingSet kExample5 = bs(
    {{1}, {2}, {3}, {4}, {5}, {2, 3}, {4, 5}, {1, 2, 3}, {2, 3, 4, 5}, {1, 2, 3, 4, 5}},
    {1, 2, 3, 4, 5});

std::set<std::pair<int, int>> arrow_set(const Digraph& g) {
    return {g.arrows.begin(), g.arrows.end()};
}

// Independent smooth-Fano oracle in different lattice coordinates: project H
// onto the first n coordinates (also a lattice isomorphism) and redo the
// facet scan from scratch.
struct OracleVerdict {
    bool full_dim = false;
    bool fano = false;
    bool smooth = false;
    std::size_t vertices = 0;
};

OracleVerdict drop_coordinate_oracle(const std::vector<std::vector<Int>>& h_points) {
    OracleVerdict out;
    std::size_t n = h_points[0].size() - 1;
    std::vector<std::vector<Int>> pts;
    for (const auto& h : h_points) pts.emplace_back(h.begin(), h.end() - 1);

    Matrix diffs;
    for (std::size_t q = 1; q < pts.size(); ++q) {
        std::vector<Int> d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = pts[q][c] - pts[0][c];
        diffs.push_back(std::move(d));
    }
    out.full_dim = rank(diffs) == static_cast<int>(n);
    if (!out.full_dim) return out;

    // Facets from all n-subsets.
    std::vector<std::pair<std::vector<Int>, Int>> facets;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() {
        std::size_t k = n;
        for (;;) {
            if (k == 0) return false;
            --k;
            if (idx[k] != static_cast<int>(pts.size() - n + k)) break;
            if (k == 0) return false;
        }
        ++idx[k];
        for (std::size_t i = k + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
        return true;
    };
    do {
        std::vector<Int> normal(n, 0);
        Int sign = 1;
        Matrix diff(n - 1, std::vector<Int>(n));
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                diff[r][c] = pts[static_cast<std::size_t>(idx[r + 1])][c] -
                             pts[static_cast<std::size_t>(idx[0])][c];
        for (std::size_t drop = 0; drop < n; ++drop) {
            Matrix minor(n - 1, std::vector<Int>(n - 1));
            for (std::size_t r = 0; r + 1 < n; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != drop) minor[r][cc++] = diff[r][c];
            }
            normal[drop] = sign * det(minor);
            sign = -sign;
        }
        if (std::all_of(normal.begin(), normal.end(), [](Int v) { return v == 0; })) continue;
        Int offset = dot(normal, pts[static_cast<std::size_t>(idx[0])]);
        bool below = false, above = false;
        for (const auto& q : pts) {
            Int d = dot(normal, q);
            below = below || d < offset;
            above = above || d > offset;
        }
        if (below && above) continue;
        if (above) {
            for (Int& v : normal) v = -v;
            offset = -offset;
        }
        Int g = 0;
        for (Int v : normal) g = std::gcd(g, v < 0 ? -v : v);
        for (Int& v : normal) v /= g;
        offset /= g;
        if (std::find(facets.begin(), facets.end(), std::make_pair(normal, offset)) ==
            facets.end())
            facets.emplace_back(normal, offset);
    } while (advance());

    // Vertices: points whose incident facet normals span everything.
    std::vector<int> vertex_ids;
    for (std::size_t q = 0; q < pts.size(); ++q) {
        Matrix normals;
        for (const auto& [normal, offset] : facets)
            if (dot(normal, pts[q]) == offset) normals.push_back(normal);
        if (!normals.empty() && rank(normals) == static_cast<int>(n))
            vertex_ids.push_back(static_cast<int>(q));
    }
    out.vertices = vertex_ids.size();

    out.fano = true;
    std::vector<Int> lo(n, 0), hi(n, 0);
    for (const auto& q : pts)
        for (std::size_t c = 0; c < n; ++c) {
            lo[c] = std::min(lo[c], q[c]);
            hi[c] = std::max(hi[c], q[c]);
        }
    std::vector<Int> x = lo;
    for (;;) {
        bool interior = true;
        for (const auto& [normal, offset] : facets)
            if (dot(normal, x) >= offset) {
                interior = false;
                break;
            }
        if (interior && std::any_of(x.begin(), x.end(), [](Int v) { return v != 0; })) {
            out.fano = false;
            break;
        }
        std::size_t k = 0;
        while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
        if (k == n) break;
        ++x[k];
    }

    out.smooth = true;
    for (const auto& [normal, offset] : facets) {
        std::vector<std::vector<Int>> verts;
        for (int q : vertex_ids)
            if (dot(normal, pts[static_cast<std::size_t>(q)]) == offset)
                verts.push_back(pts[static_cast<std::size_t>(q)]);
        if (verts.size() != n) {
            out.smooth = false;
            break;
        }
        Int d = det(matrix_from_columns(verts));
        if (d != 1 && d != -1) {
            out.smooth = false;
            break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("polytopes from digraphs") {
    Digraph single{2, {{1, 2}}};
    Polytope p1 = polytope_from_digraph(single);
    CHECK_FALSE(p1.full_dim);

    Digraph cycle2{2, {{1, 2}, {2, 1}}};
    Polytope p2 = polytope_from_digraph(cycle2);
    CHECK(p2.full_dim);
    CHECK(p2.dim == 1);
    CHECK(p2.vertex_ids.size() == 2);

    Digraph g5{5, {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {4, 1}, {4, 5}, {5, 1}}};
    Polytope p3 = polytope_from_digraph(g5);
    CHECK(p3.full_dim);
    CHECK(p3.points.size() == 9);
    CHECK(p3.vertex_ids.size() == 9);

    CHECK_THROWS_AS(polytope_from_digraph(Digraph{3, {}}), std::invalid_argument);
}

TEST_CASE("F coordinates") {
    CHECK(f_coordinates({1, -1}) == std::vector<Int>{1});
    CHECK(f_coordinates({1, -1, 0, 0}) == std::vector<Int>{1, 0, 0});
    CHECK(f_coordinates({0, 1, 0, -1}) == std::vector<Int>{0, 1, 1});
    CHECK(f_coordinates({-1, 0, 1}) == std::vector<Int>{-1, -1});
}

TEST_CASE("smooth Fano verdict") {
    Digraph cycle2{2, {{1, 2}, {2, 1}}};
    CHECK(check_smooth_fano(polytope_from_digraph(cycle2)).verdict());

    Digraph g5{5, {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {4, 1}, {4, 5}, {5, 1}}};
    CHECK(check_smooth_fano(polytope_from_digraph(g5)).verdict());

    // Hull of (2,-2) and (-2,2): the lattice point (1,-1) is interior.
    Polytope wide = polytope_from_h_points({{2, -2}, {-2, 2}});
    SmoothFanoReport rep = check_smooth_fano(wide);
    CHECK(rep.status == SmoothFanoReport::Status::ok);
    CHECK_FALSE(rep.fano);

    // Degenerate input.
    Polytope flat = polytope_from_digraph(Digraph{2, {{1, 2}}});
    CHECK(check_smooth_fano(flat).status == SmoothFanoReport::Status::not_full_dimensional);
}

TEST_CASE("origin must be interior") {
    // Segment from (1,-1) to (3,-3) misses the origin.
    Polytope shifted = polytope_from_h_points({{1, -1}, {3, -3}});
    CHECK(check_smooth_fano(shifted).status == SmoothFanoReport::Status::origin_not_interior);
}

TEST_CASE("fans from digraphs") {
    Digraph cycle2{2, {{1, 2}, {2, 1}}};
    Fan f = fan_of_digraph(cycle2);
    CHECK(f.dim == 1);
    std::set<std::vector<Int>> rays(f.rays.begin(), f.rays.end());
    CHECK(rays == std::set<std::vector<Int>>{{1}, {-1}});

    Digraph g5{5, {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {4, 1}, {4, 5}, {5, 1}}};
    Fan constructed = fan_of_digraph(g5);
    CHECK(is_smooth(constructed));
    CHECK(is_complete(constructed));
    CHECK(fan_isomorphism(build_fan(kExample5).fan, constructed).has_value());
}

TEST_CASE("U classification") {
    UClassification u5 = compute_u(kExample5);
    CHECK(u5.shape == UClassification::Shape::pair);
    CHECK(u5.u == std::vector<Subset>{subset_of({1, 2, 3}), subset_of({2, 3, 4, 5})});

    BuildingSet powerset = bs({{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}, {1, 2, 3});
    UClassification uc = compute_u(powerset);
    CHECK(uc.shape == UClassification::Shape::triple);
    CHECK(uc.i == subset_of({1, 2}));
    CHECK(uc.j == subset_of({1, 3}));
    CHECK(uc.complement == subset_of({2, 3}));

    BuildingSet minimal = bs({{1}, {2}, {3}, {1, 2, 3}}, {1, 2, 3});
    CHECK(compute_u(minimal).shape == UClassification::Shape::empty);
}

TEST_CASE("U never takes an unexpected shape on Fano families") {
    for (int n = 1; n <= 4; ++n) {
        for (const BuildingSet& b : enumerate_building_sets(n, true)) {
            if (!fano_criterion(b).fano) continue;
            CHECK_NOTHROW(compute_u(b));
        }
    }
}

TEST_CASE("triple-case structure: B decomposes through U") {
    for (int n = 1; n <= 4; ++n) {
        for (const BuildingSet& b : enumerate_building_sets(n, true)) {
            if (!fano_criterion(b).fano) continue;
            UClassification u = compute_u(b);
            if (u.shape == UClassification::Shape::empty) continue;
            std::vector<Subset> expected = {b.ground};
            expected.insert(expected.end(), u.u.begin(), u.u.end());
            for (Subset block : {u.i & ~u.j, u.i & u.j, u.j & ~u.i}) {
                BuildingSet part = restriction(b, block);
                expected.insert(expected.end(), part.members.begin(), part.members.end());
            }
            std::sort(expected.begin(), expected.end(), subset_less);
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            CHECK(expected == b.members);
        }
    }
}

TEST_CASE("interval renumbering") {
    BuildingSet laminar = bs({{1}, {2}, {3}, {4}, {2, 4}, {2, 3, 4}}, {1, 2, 3, 4});
    std::vector<int> f = interval_renumbering(laminar);
    CHECK(f[1] == 1);
    CHECK(f[2] == 2);
    CHECK(f[4] == 3);
    CHECK(f[3] == 4);

    BuildingSet singles = bs({{1}, {2}, {3}}, {1, 2, 3});
    std::vector<int> id = interval_renumbering(singles);
    CHECK(id[1] == 1);
    CHECK(id[2] == 2);
    CHECK(id[3] == 3);

    BuildingSet pairs = bs({{1}, {2}, {3}, {4}, {1, 2}, {3, 4}}, {1, 2, 3, 4});
    std::vector<int> fp = interval_renumbering(pairs);
    for (Subset m : {subset_of({1, 2}), subset_of({3, 4})}) {
        std::vector<int> images;
        for (int e : subset_elements(m)) images.push_back(fp[static_cast<std::size_t>(e)]);
        std::sort(images.begin(), images.end());
        CHECK(images.back() - images.front() == 1);
    }

    BuildingSet crossing = bs({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}}, {1, 2, 3});
    CHECK_THROWS_AS(interval_renumbering(crossing), std::invalid_argument);
}

TEST_CASE("digraph of the ten-member example matches the published arrows") {
    Digraph g = fano_to_digraph(kExample5);
    CHECK(g.nodes == 5);
    CHECK(arrow_set(g) == std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                                        {2, 4}, {4, 1}, {1, 4}, {2, 1}});
}

TEST_CASE("digraphs of the small cases") {
    BuildingSet plane = bs({{1}, {2}, {3}, {1, 2, 3}}, {1, 2, 3});
    CHECK(arrow_set(fano_to_digraph(plane)) ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}});

    BuildingSet powerset = bs({{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}, {1, 2, 3});
    CHECK(arrow_set(fano_to_digraph(powerset)) ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}, {1, 3}, {2, 1}, {3, 2}});

    SimpleGraph path4{4, {{1, 2}, {2, 3}, {3, 4}}};
    CHECK_THROWS_AS(fano_to_digraph(graphical_building_set(path4)), std::invalid_argument);
    CHECK_THROWS_AS(fano_to_digraph(bs({{1}, {2}}, {1, 2})), std::invalid_argument);
}

TEST_CASE("arrow sets are in bijection with the proper members") {
    for (int n = 1; n <= 4; ++n) {
        for (const BuildingSet& b : enumerate_building_sets(n, true)) {
            if (!fano_criterion(b).fano) continue;
            Digraph g = fano_to_digraph(b);
            CHECK(g.arrows.size() == b.members.size() - 1);
            if (g.arrows.empty()) continue;
            // F carries the arrow vectors onto distinct e_K vectors: in these
            // coordinates each is an interval of 1s or an interval of -1s.
            Polytope p = polytope_from_digraph(g);
            std::set<std::vector<Int>> images(p.points.begin(), p.points.end());
            CHECK(images.size() == p.points.size());
            for (const auto& v : p.points) {
                Int level = 0;
                int first = -1, last = -1;
                bool interval = true;
                for (std::size_t c = 0; c < v.size(); ++c) {
                    if (v[c] == 0) continue;
                    if (level == 0) level = v[c];
                    if (v[c] != level) interval = false;
                    if (first < 0) first = static_cast<int>(c);
                    last = static_cast<int>(c);
                }
                interval = interval && (level == 1 || level == -1) && first >= 0 &&
                           last - first + 1 == [&] {
                               int nonzero = 0;
                               for (Int x : v) nonzero += x != 0;
                               return nonzero;
                           }();
                CHECK(interval);
            }
        }
    }
}

TEST_CASE("fan isomorphism search") {
    Fan blowup = build_fan(bs({{1}, {2}, {3}, {2, 3}, {1, 2, 3}}, {1, 2, 3})).fan;
    auto self = fan_isomorphism(blowup, blowup);
    REQUIRE(self.has_value());
    CHECK(*self == Matrix{{1, 0}, {0, 1}});

    Fan plane = build_fan(bs({{1}, {2}, {3}, {1, 2, 3}}, {1, 2, 3})).fan;
    Fan square = build_fan(bs({{1}, {2}, {1, 2}, {3}, {4}, {3, 4}}, {1, 2, 3, 4})).fan;
    CHECK_FALSE(fan_isomorphism(plane, square).has_value());
    CHECK_FALSE(fan_isomorphism(blowup, plane).has_value());
}

TEST_CASE("gluing digraphs realizes products") {
    Digraph cycle2{2, {{1, 2}, {2, 1}}};
    Digraph glued = glue_digraphs({cycle2, cycle2});
    CHECK(glued.nodes == 3);
    CHECK(glued.arrows.size() == 4);

    BuildingSet square = bs({{1}, {2}, {1, 2}, {3}, {4}, {3, 4}}, {1, 2, 3, 4});
    Fan target = build_fan(square).fan;
    Fan constructed = fan_of_digraph(glued);
    CHECK(fan_isomorphism(target, constructed).has_value());

    // Point factors contribute nothing.
    Digraph with_point = glue_digraphs({cycle2, Digraph{1, {}}});
    CHECK(with_point.nodes == 2);
    CHECK(with_point.arrows.size() == 2);
}

TEST_CASE("realization pipeline extends to the size-6 sample") {
    std::size_t fano_count = 0;
    for (const BuildingSet& b : enumerate_building_sets_sample(6, 1000, false)) {
        if (!fano_criterion(b).fano) continue;
        ++fano_count;
        std::vector<Digraph> parts;
        for (Subset c : components(b))
            parts.push_back(fano_to_digraph(reground(restriction(b, c)).set));
        Digraph g = parts.size() == 1 ? parts[0] : glue_digraphs(parts);
        BuiltFan target = build_fan(b);
        if (g.arrows.empty()) {
            CHECK(target.fan.dim == 0);
            continue;
        }
        Polytope p = polytope_from_digraph(g);
        CHECK(check_smooth_fano(p).verdict());
        CHECK(fan_isomorphism(target.fan, fan_of_digraph(g)).has_value());
    }
    CHECK(fano_count == 135);
}

TEST_CASE("implementation agrees with the drop-coordinate oracle") {
    for (int n = 1; n <= 4; ++n) {
        for (const BuildingSet& b : enumerate_building_sets(n, true)) {
            if (!fano_criterion(b).fano) continue;
            Digraph g = fano_to_digraph(b);
            if (g.arrows.empty()) continue;
            Polytope p = polytope_from_digraph(g);
            SmoothFanoReport rep = check_smooth_fano(p);
            OracleVerdict oracle = drop_coordinate_oracle(p.points_h);
            CHECK(p.full_dim == oracle.full_dim);
            if (!p.full_dim) continue;
            CHECK(rep.fano == oracle.fano);
            CHECK(rep.smooth == oracle.smooth);
            CHECK(p.vertex_ids.size() == oracle.vertices);
        }
    }

    // Also on a non-Fano polytope.
    OracleVerdict wide = drop_coordinate_oracle({{2, -2}, {-2, 2}});
    CHECK(wide.full_dim);
    CHECK_FALSE(wide.fano);
}
