#include "toric/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toric/fano.hpp"

namespace toric {

bool operator==(const Digraph& a, const Digraph& b) {
    return a.nodes == b.nodes && a.arrows == b.arrows;
}

std::vector<Int> f_coordinates(const std::vector<Int>& h_point) {
    std::vector<Int> out(h_point.size() - 1, 0);
    Int acc = 0;
    for (std::size_t i = 0; i + 1 < h_point.size(); ++i) {
        acc += h_point[i];
        out[i] = acc;
    }
    return out;
}

namespace {

Int gcd_ll(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Primitive normal of the hyperplane through n points in Z^n, by cofactor
// expansion of the (n-1) x n difference matrix; zero if the points are
// affinely dependent.
std::vector<Int> hyperplane_normal(const std::vector<std::vector<Int>>& pts,
                                   const std::vector<int>& idx) {
    std::size_t n = pts[0].size();
    Matrix diff(idx.size() - 1, std::vector<Int>(n, 0));
    for (std::size_t r = 0; r + 1 < idx.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            diff[r][c] = pts[static_cast<std::size_t>(idx[r + 1])][c] -
                         pts[static_cast<std::size_t>(idx[0])][c];
    std::vector<Int> normal(n, 0);
    Int sign = 1;
    for (std::size_t drop = 0; drop < n; ++drop) {
        Matrix minor(diff.size(), std::vector<Int>(n - 1, 0));
        for (std::size_t r = 0; r < diff.size(); ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != drop) minor[r][cc++] = diff[r][c];
        }
        normal[drop] = sign * det(minor);
        sign = -sign;
    }
    Int g = 0;
    for (Int v : normal) g = gcd_ll(g, v);
    if (g > 1)
        for (Int& v : normal) v /= g;
    return normal;
}

struct FacetKey {
    std::vector<Int> normal;
    Int offset;
    bool operator<(const FacetKey& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

void compute_facets(Polytope& p) {
    std::size_t m = p.points.size();
    std::size_t n = static_cast<std::size_t>(p.dim);
    std::set<FacetKey> seen;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<Int> normal = hyperplane_normal(p.points, idx);
        bool nonzero = std::any_of(normal.begin(), normal.end(), [](Int v) { return v != 0; });
        if (nonzero) {
            Int offset = dot(normal, p.points[static_cast<std::size_t>(idx[0])]);
            bool below = false, above = false;
            for (const auto& q : p.points) {
                Int d = dot(normal, q);
                if (d < offset) below = true;
                if (d > offset) above = true;
            }
            if (!(below && above)) {
                if (above) {
                    for (Int& v : normal) v = -v;
                    offset = -offset;
                }
                FacetKey key{normal, offset};
                if (!seen.count(key)) {
                    seen.insert(key);
                    PolytopeFacet f;
                    f.normal = normal;
                    f.offset = offset;
                    for (std::size_t q = 0; q < m; ++q)
                        if (dot(normal, p.points[q]) == offset)
                            f.points.push_back(static_cast<int>(q));
                    p.facets.push_back(std::move(f));
                }
            }
        }
        // Next n-combination of {0..m-1}.
        std::size_t k = n;
        for (;;) {
            if (k == 0) return;
            --k;
            if (idx[k] != static_cast<int>(m - n + k)) break;
            if (k == 0) return;
        }
        ++idx[k];
        for (std::size_t i = k + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
}

void compute_vertices(Polytope& p) {
    for (std::size_t q = 0; q < p.points.size(); ++q) {
        Matrix normals;
        for (const auto& f : p.facets)
            if (std::find(f.points.begin(), f.points.end(), static_cast<int>(q)) !=
                f.points.end())
                normals.push_back(f.normal);
        if (!normals.empty() && rank(normals) == p.dim)
            p.vertex_ids.push_back(static_cast<int>(q));
    }
}

}  // namespace

Polytope polytope_from_h_points(const std::vector<std::vector<Int>>& h_points) {
    if (h_points.empty()) throw std::invalid_argument("empty point set");
    Polytope p;
    p.dim = static_cast<int>(h_points[0].size()) - 1;
    for (const auto& v : h_points) {
        Int sum = 0;
        for (Int c : v) sum += c;
        if (sum != 0 || static_cast<int>(v.size()) != p.dim + 1)
            throw std::invalid_argument("points must lie in the sum-zero hyperplane");
        p.points.push_back(f_coordinates(v));
        p.points_h.push_back(v);
    }

    // Full-dimensional iff the affine hull of the points is all of H.
    Matrix diffs;
    for (std::size_t q = 1; q < p.points.size(); ++q) {
        std::vector<Int> d(p.points[q].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = p.points[q][c] - p.points[0][c];
        diffs.push_back(std::move(d));
    }
    p.full_dim = rank(diffs) == p.dim;
    if (p.full_dim && p.dim > 0) {
        compute_facets(p);
        compute_vertices(p);
    }
    return p;
}

Polytope polytope_from_digraph(const Digraph& g) {
    if (g.nodes < 2 || g.nodes > kMaxGround)
        throw std::invalid_argument("digraph must have between 2 and 16 nodes");
    if (g.arrows.empty()) throw std::invalid_argument("EmptyArrowSet");
    std::set<std::pair<int, int>> unique(g.arrows.begin(), g.arrows.end());
    if (unique.size() != g.arrows.size())
        throw std::invalid_argument("duplicate arrows");

    std::vector<std::vector<Int>> points;
    for (auto [i, j] : g.arrows) {
        if (i < 1 || i > g.nodes || j < 1 || j > g.nodes || i == j)
            throw std::invalid_argument("invalid arrow");
        std::vector<Int> v(static_cast<std::size_t>(g.nodes), 0);
        v[static_cast<std::size_t>(i) - 1] = 1;
        v[static_cast<std::size_t>(j) - 1] = -1;
        points.push_back(std::move(v));
    }
    return polytope_from_h_points(points);
}

SmoothFanoReport check_smooth_fano(const Polytope& p) {
    SmoothFanoReport out;
    if (!p.full_dim) {
        out.status = SmoothFanoReport::Status::not_full_dimensional;
        return out;
    }
    for (const auto& f : p.facets) {
        if (f.offset <= 0) {
            out.status = SmoothFanoReport::Status::origin_not_interior;
            return out;
        }
    }

    // Fano: scan the lattice points of the bounding box against the strict
    // facet inequalities; only the origin may survive.
    std::size_t n = static_cast<std::size_t>(p.dim);
    std::vector<Int> lo(n, 0), hi(n, 0);
    for (const auto& q : p.points)
        for (std::size_t c = 0; c < n; ++c) {
            lo[c] = std::min(lo[c], q[c]);
            hi[c] = std::max(hi[c], q[c]);
        }
    out.fano = true;
    std::vector<Int> x = lo;
    for (;;) {
        bool interior = true;
        for (const auto& f : p.facets) {
            if (dot(f.normal, x) >= f.offset) {
                interior = false;
                break;
            }
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

    // Smooth: the vertices of every facet form a lattice basis.
    out.smooth = true;
    std::set<int> vertex_set(p.vertex_ids.begin(), p.vertex_ids.end());
    for (const auto& f : p.facets) {
        std::vector<std::vector<Int>> verts;
        for (int q : f.points)
            if (vertex_set.count(q)) verts.push_back(p.points[static_cast<std::size_t>(q)]);
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

Fan fan_of_digraph(const Digraph& g) {
    Polytope p = polytope_from_digraph(g);
    SmoothFanoReport report = check_smooth_fano(p);
    if (report.status == SmoothFanoReport::Status::not_full_dimensional)
        throw std::invalid_argument("NotFullDimensional: P_G is not full-dimensional in H");
    if (report.status == SmoothFanoReport::Status::origin_not_interior)
        throw std::invalid_argument("OriginNotInterior: P_G does not contain 0 in its interior");
    if (!report.verdict())
        throw std::invalid_argument("P_G is not a smooth Fano polytope");

    Fan fan;
    fan.dim = p.dim;
    std::vector<int> vertex_index(p.points.size(), -1);
    for (int q : p.vertex_ids) {
        vertex_index[static_cast<std::size_t>(q)] = static_cast<int>(fan.rays.size());
        fan.rays.push_back(p.points[static_cast<std::size_t>(q)]);
    }
    std::set<int> vertex_set(p.vertex_ids.begin(), p.vertex_ids.end());
    for (const auto& f : p.facets) {
        std::vector<int> cone;
        for (int q : f.points)
            if (vertex_set.count(q)) cone.push_back(vertex_index[static_cast<std::size_t>(q)]);
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    return fan;
}

UClassification compute_u(const BuildingSet& b) {
    if (!b.connected()) throw std::invalid_argument("compute_u requires a connected building set");
    UClassification out;
    for (Subset i : b.members) {
        if (i == b.ground) continue;
        for (Subset j : b.members) {
            if (j == b.ground || j == i) continue;
            if ((i & j) != 0 && (i | j) == b.ground) {
                out.u.push_back(i);
                break;
            }
        }
    }
    auto unexpected = [&]() {
        return std::runtime_error("UnexpectedUShape: U has " + std::to_string(out.u.size()) +
                                  " elements and fits no case");
    };
    if (out.u.empty()) {
        out.shape = UClassification::Shape::empty;
    } else if (out.u.size() == 2) {
        out.shape = UClassification::Shape::pair;
        out.i = out.u[0];
        out.j = out.u[1];
        if ((out.i & out.j) == 0 || (out.i | out.j) != b.ground) throw unexpected();
    } else if (out.u.size() == 3) {
        out.shape = UClassification::Shape::triple;
        out.i = out.u[0];
        out.j = out.u[1];
        out.complement = out.u[2];
        if ((out.i & out.j) == 0 || out.complement != (b.ground & ~(out.i & out.j)))
            throw unexpected();
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = x + 1; y < 3; ++y)
                if ((out.u[x] | out.u[y]) != b.ground) throw unexpected();
    } else {
        throw unexpected();
    }
    return out;
}

namespace {

void assign_positions(Subset region, const std::vector<Subset>& blocks,
                      std::vector<int>& pos, int& next_pos) {
    // Maximal members properly inside the region.
    std::vector<Subset> kids;
    for (Subset m : blocks) {
        if (!is_proper_subset(m, region)) continue;
        bool maximal = true;
        for (Subset other : blocks) {
            if (other != m && is_proper_subset(m, other) && is_proper_subset(other, region)) {
                maximal = false;
                break;
            }
        }
        if (maximal) kids.push_back(m);
    }
    Subset covered = 0;
    for (Subset k : kids) covered |= k;

    struct Item {
        int key;
        Subset block;  // 0 for a loose element
        int element;
    };
    std::vector<Item> items;
    for (int e : subset_elements(region & ~covered)) items.push_back({e, 0, e});
    for (Subset k : kids) items.push_back({lowest_element(k), k, 0});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });
    for (const Item& it : items) {
        if (it.block == 0)
            pos[static_cast<std::size_t>(it.element)] = next_pos++;
        else
            assign_positions(it.block, blocks, pos, next_pos);
    }
}

}  // namespace

std::vector<int> interval_renumbering(const BuildingSet& b) {
    for (std::size_t i = 0; i < b.members.size(); ++i) {
        for (std::size_t j = i + 1; j < b.members.size(); ++j) {
            Subset x = b.members[i], y = b.members[j];
            if ((x & y) != 0 && !is_subset(x, y) && !is_subset(y, x))
                throw std::invalid_argument("HypothesisViolated: " + subset_to_string(x) +
                                            " and " + subset_to_string(y) +
                                            " overlap without nesting");
        }
    }
    std::vector<Subset> blocks;
    for (Subset m : b.members)
        if (subset_size(m) >= 2) blocks.push_back(m);
    std::vector<int> pos(static_cast<std::size_t>(kMaxGround) + 1, 0);
    int next_pos = 1;
    assign_positions(b.ground, blocks, pos, next_pos);
    return pos;
}

Digraph fano_to_digraph(const BuildingSet& b) {
    if (!b.connected()) throw std::invalid_argument("NotConnected");
    if (!fano_criterion(b).fano) throw std::invalid_argument("NotFano");
    int node_count = b.size();

    UClassification u = compute_u(b);
    std::vector<int> f;
    Subset skipped = 0;
    int wrap_from = 0, wrap_to = 0;
    if (u.shape == UClassification::Shape::empty) {
        f = interval_renumbering(b);
    } else {
        Subset x = u.i & ~u.j, y = u.i & u.j, z = u.j & ~u.i;
        auto fx = interval_renumbering(restriction(b, x));
        auto fy = interval_renumbering(restriction(b, y));
        auto fz = interval_renumbering(restriction(b, z));
        f.assign(static_cast<std::size_t>(kMaxGround) + 1, 0);
        int off_y = subset_size(x), off_z = off_y + subset_size(y);
        for (int e : subset_elements(x)) f[static_cast<std::size_t>(e)] = fx[static_cast<std::size_t>(e)];
        for (int e : subset_elements(y)) f[static_cast<std::size_t>(e)] = fy[static_cast<std::size_t>(e)] + off_y;
        for (int e : subset_elements(z)) f[static_cast<std::size_t>(e)] = fz[static_cast<std::size_t>(e)] + off_z;
        if (u.shape == UClassification::Shape::triple) {
            skipped = u.complement;
            wrap_from = off_z + 1;  // b + 1
            wrap_to = off_y + 1;    // a
        }
    }

    Digraph g;
    g.nodes = node_count;
    for (Subset k : b.members) {
        if (k == b.ground || k == skipped) continue;
        Subset img = relabel_subset(k, f);
        int i = lowest_element(img);
        int j = i + subset_size(img) - 1;
        Subset interval = 0;
        for (int e = i; e <= j; ++e) interval |= singleton(e);
        if (img != interval)
            throw std::logic_error("member " + subset_to_string(k) +
                                   " did not map to an interval");
        g.arrows.emplace_back(i, j < node_count ? j + 1 : 1);
    }
    if (skipped != 0) g.arrows.emplace_back(wrap_from, wrap_to);
    std::sort(g.arrows.begin(), g.arrows.end());
    if (g.arrows.size() != b.members.size() - 1)
        throw std::logic_error("arrow set is not in bijection with B \\ {S}");
    return g;
}

Digraph glue_digraphs(const std::vector<Digraph>& parts) {
    Digraph out;
    out.nodes = 1;
    for (const Digraph& p : parts) {
        int offset = out.nodes - 1;
        for (auto [i, j] : p.arrows)
            out.arrows.emplace_back(i == 1 ? 1 : i + offset, j == 1 ? 1 : j + offset);
        out.nodes += p.nodes - 1;
    }
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

std::optional<Matrix> fan_isomorphism(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.rays.size() != b.rays.size() ||
        a.max_cones.size() != b.max_cones.size())
        return std::nullopt;
    if (a.dim == 0) return Matrix{};

    auto valences = [](const Fan& f) {
        std::vector<int> v(f.rays.size(), 0);
        for (const auto& cone : f.max_cones)
            for (int idx : cone) ++v[static_cast<std::size_t>(idx)];
        std::sort(v.begin(), v.end());
        return v;
    };
    if (valences(a) != valences(b)) return std::nullopt;

    std::map<std::vector<Int>, int> b_ray_index;
    for (std::size_t i = 0; i < b.rays.size(); ++i)
        b_ray_index.emplace(b.rays[i], static_cast<int>(i));
    std::set<std::vector<int>> b_cones(b.max_cones.begin(), b.max_cones.end());

    const std::vector<int>& anchor = a.max_cones[0];
    std::vector<std::vector<Int>> anchor_cols;
    for (int idx : anchor) anchor_cols.push_back(a.rays[static_cast<std::size_t>(idx)]);
    Matrix anchor_matrix = matrix_from_columns(anchor_cols);

    // Integer inverse of the unimodular anchor basis, column by column.
    std::size_t n = static_cast<std::size_t>(a.dim);
    Matrix anchor_inv(n, std::vector<Int>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Int> e(n, 0), col;
        e[c] = 1;
        if (!solve_unimodular(anchor_matrix, e, col)) return std::nullopt;
        for (std::size_t r = 0; r < n; ++r) anchor_inv[r][c] = col[r];
    }

    for (const auto& target : b.max_cones) {
        std::vector<int> perm = target;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::vector<Int>> target_cols;
            for (int idx : perm) target_cols.push_back(b.rays[static_cast<std::size_t>(idx)]);
            Matrix tm = matrix_from_columns(target_cols);
            // M = target_basis * anchor_basis^{-1}
            Matrix m(n, std::vector<Int>(n, 0));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    __int128 acc = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        acc += (__int128)tm[r][k] * anchor_inv[k][c];
                    m[r][c] = static_cast<Int>(acc);
                }

            std::vector<int> image(a.rays.size(), -1);
            bool ok = true;
            for (std::size_t i = 0; i < a.rays.size() && ok; ++i) {
                auto it = b_ray_index.find(matvec(m, a.rays[i]));
                if (it == b_ray_index.end())
                    ok = false;
                else
                    image[i] = it->second;
            }
            if (ok) {
                std::set<int> distinct(image.begin(), image.end());
                ok = distinct.size() == image.size();
            }
            for (std::size_t c = 0; c < a.max_cones.size() && ok; ++c) {
                std::vector<int> mapped;
                for (int idx : a.max_cones[c]) mapped.push_back(image[static_cast<std::size_t>(idx)]);
                std::sort(mapped.begin(), mapped.end());
                if (!b_cones.count(mapped)) ok = false;
            }
            if (ok) return m;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

}  // namespace toric
