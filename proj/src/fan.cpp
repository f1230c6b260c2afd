#include "toric/fan.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace toric {

std::vector<Int> ray_vector(Subset i_set, int n) {
    if (i_set == 0) throw std::invalid_argument("ray_vector: empty subset");
    Subset full = (Subset{1} << (n + 1)) - 1;
    if (!is_subset(i_set, full)) throw std::invalid_argument("ray_vector: element out of range");
    if (i_set == full) throw std::invalid_argument("FullSetRay: e_S is the zero vector");
    std::vector<Int> v(static_cast<std::size_t>(n), 0);
    for (int e : subset_elements(i_set)) {
        if (e <= n) {
            v[static_cast<std::size_t>(e) - 1] += 1;
        } else {
            for (auto& c : v) c -= 1;
        }
    }
    return v;
}

namespace {

Matrix cone_columns(const Fan& f, const std::vector<int>& cone) {
    std::vector<std::vector<Int>> cols;
    cols.reserve(cone.size());
    for (int idx : cone) cols.push_back(f.rays[static_cast<std::size_t>(idx)]);
    return matrix_from_columns(cols);
}

BuiltFan build_connected_fan(const BuildingSet& b) {
    std::vector<int> elems = subset_elements(b.ground);
    int n = static_cast<int>(elems.size()) - 1;
    std::vector<int> position(static_cast<std::size_t>(kMaxGround) + 1, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        position[static_cast<std::size_t>(elems[i])] = static_cast<int>(i) + 1;

    BuiltFan out;
    out.fan.dim = n;
    std::map<Subset, int> ray_index;
    for (Subset m : b.members) {
        if (m == b.ground) continue;
        Subset repositioned = relabel_subset(m, position);
        ray_index.emplace(m, static_cast<int>(out.fan.rays.size()));
        out.fan.rays.push_back(ray_vector(repositioned, n));
        out.ray_members.push_back(m);
    }
    for (const NestedSet& face : maximal_nested_sets(b)) {
        std::vector<int> cone;
        cone.reserve(face.size());
        for (Subset m : face) cone.push_back(ray_index.at(m));
        std::sort(cone.begin(), cone.end());
        out.fan.max_cones.push_back(std::move(cone));
    }
    std::sort(out.fan.max_cones.begin(), out.fan.max_cones.end());
    return out;
}

}  // namespace

BuiltFan build_fan(const BuildingSet& b) {
    if (b.connected()) return build_connected_fan(b);

    std::vector<BuiltFan> parts;
    for (Subset c : components(b)) parts.push_back(build_fan(restriction(b, c)));

    BuiltFan out;
    std::vector<Fan> factor_fans;
    for (auto& p : parts) {
        factor_fans.push_back(p.fan);
        out.ray_members.insert(out.ray_members.end(), p.ray_members.begin(),
                               p.ray_members.end());
    }
    out.fan = product_fan(factor_fans);
    return out;
}

Fan product_fan(const std::vector<Fan>& parts) {
    Fan out;
    for (const Fan& p : parts) out.dim += p.dim;

    int coord_offset = 0;
    std::vector<int> ray_offsets;
    for (const Fan& p : parts) {
        ray_offsets.push_back(static_cast<int>(out.rays.size()));
        for (const auto& r : p.rays) {
            std::vector<Int> embedded(static_cast<std::size_t>(out.dim), 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                embedded[static_cast<std::size_t>(coord_offset) + i] = r[i];
            out.rays.push_back(std::move(embedded));
        }
        coord_offset += p.dim;
    }

    std::vector<int> assembled;
    std::vector<std::size_t> choice(parts.size(), 0);
    // Cartesian product of maximal cones, first factor slowest.
    for (;;) {
        assembled.clear();
        for (std::size_t k = 0; k < parts.size(); ++k) {
            for (int idx : parts[k].max_cones[choice[k]])
                assembled.push_back(idx + ray_offsets[k]);
        }
        std::sort(assembled.begin(), assembled.end());
        out.max_cones.push_back(assembled);
        std::size_t k = parts.size();
        while (k > 0) {
            --k;
            if (++choice[k] < parts[k].max_cones.size()) break;
            choice[k] = 0;
            if (k == 0) {
                out.factors = parts;
                return out;
            }
        }
        if (parts.empty()) break;
    }
    out.factors = parts;
    return out;
}

bool is_smooth(const Fan& f) {
    for (const auto& cone : f.max_cones) {
        if (static_cast<int>(cone.size()) != f.dim) return false;
        Int d = det(cone_columns(f, cone));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

std::vector<Wall> walls(const Fan& f) {
    std::vector<Wall> out;
    if (f.dim == 0) return out;
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        if (static_cast<int>(cone.size()) != f.dim)
            throw std::runtime_error("walls: fan is not pure");
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> tau;
            tau.reserve(cone.size() - 1);
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) tau.push_back(cone[i]);
            facets[tau].emplace_back(static_cast<int>(c), cone[drop]);
        }
    }
    for (auto& [tau, owners] : facets) {
        if (owners.size() != 2)
            throw std::runtime_error("DanglingWall: a codimension-1 cone has " +
                                     std::to_string(owners.size()) + " completions");
        auto [c0, v0] = owners[0];
        auto [c1, v1] = owners[1];
        bool zero_first =
            f.max_cones[static_cast<std::size_t>(c0)] < f.max_cones[static_cast<std::size_t>(c1)];
        Wall w;
        w.tau = tau;
        w.left_cone = zero_first ? c0 : c1;
        w.right_cone = zero_first ? c1 : c0;
        w.v = zero_first ? v0 : v1;
        w.v_prime = zero_first ? v1 : v0;
        out.push_back(std::move(w));
    }
    return out;
}

Int intersection_number(const Fan& f, const Wall& w) {
    // Solve v' = sum beta_i v_i + alpha v in the basis (tau rays, v); the
    // wall relation forces alpha = -1 and a_i = -beta_i.
    std::vector<std::vector<Int>> cols;
    for (int idx : w.tau) cols.push_back(f.rays[static_cast<std::size_t>(idx)]);
    cols.push_back(f.rays[static_cast<std::size_t>(w.v)]);
    std::vector<Int> x;
    if (!solve_unimodular(matrix_from_columns(cols), f.rays[static_cast<std::size_t>(w.v_prime)], x))
        throw std::runtime_error("SingularSolve: wall basis is degenerate");
    if (x.back() != -1)
        throw std::runtime_error("SingularSolve: wall relation has v-coefficient != -1");
    Int sum = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) sum -= x[i];
    return 2 + sum;
}

namespace {

bool complete_by_sampling(const Fan& f) {
    int n = f.dim;
    std::vector<Matrix> cone_cols;
    cone_cols.reserve(f.max_cones.size());
    for (const auto& cone : f.max_cones) cone_cols.push_back(cone_columns(f, cone));

    std::vector<Int> p(static_cast<std::size_t>(n), -3);
    std::size_t counted = 0;
    for (;;) {
        bool origin = std::all_of(p.begin(), p.end(), [](Int v) { return v == 0; });
        if (!origin) {
            int strict = 0;
            bool on_boundary = false;
            for (const auto& cols : cone_cols) {
                Int d;
                std::vector<Int> coord;
                cramer_signs(cols, p, d, coord);
                if (d == 0) continue;  // degenerate cone carries no full-dimensional mass
                Int sign = d > 0 ? 1 : -1;
                bool contained = true;
                bool zero = false;
                for (Int cd : coord) {
                    if (cd == 0)
                        zero = true;
                    else if (cd * sign < 0)
                        contained = false;
                }
                if (contained && zero) {
                    on_boundary = true;
                    break;
                }
                if (contained) ++strict;
            }
            if (!on_boundary) {
                ++counted;
                if (strict != 1) return false;
            }
        }
        std::size_t k = 0;
        while (k < p.size() && p[k] == 3) p[k++] = -3;
        if (k == p.size()) break;
        ++p[k];
    }
    return counted > 0;
}

}  // namespace

bool is_complete(const Fan& f) {
    if (f.dim == 0) return f.max_cones.size() == 1 && f.max_cones[0].empty();
    std::vector<Wall> ws;
    try {
        ws = walls(f);
    } catch (const std::runtime_error&) {
        return false;
    }
    // Adjacency connectivity.
    std::vector<std::vector<int>> adj(f.max_cones.size());
    for (const Wall& w : ws) {
        adj[static_cast<std::size_t>(w.left_cone)].push_back(w.right_cone);
        adj[static_cast<std::size_t>(w.right_cone)].push_back(w.left_cone);
    }
    std::vector<char> seen(f.max_cones.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int other : adj[static_cast<std::size_t>(c)]) {
            if (!seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
    return complete_by_sampling(f);
}

FanoProfile fano_by_intersection(const Fan& f) {
    FanoProfile out;
    if (!f.factors.empty()) {
        out.fano = true;
        for (std::size_t k = 0; k < f.factors.size(); ++k) {
            FanoProfile part = fano_by_intersection(f.factors[k]);
            out.fano = out.fano && part.fano;
            std::size_t multiplicity = 1;
            for (std::size_t j = 0; j < f.factors.size(); ++j)
                if (j != k) multiplicity *= f.factors[j].max_cones.size();
            for (Int num : part.numbers)
                out.numbers.insert(out.numbers.end(), multiplicity, num);
        }
        std::sort(out.numbers.begin(), out.numbers.end());
        return out;
    }
    out.fano = true;
    for (const Wall& w : walls(f)) {
        Int num = intersection_number(f, w);
        out.numbers.push_back(num);
        out.wall_numbers.emplace_back(w, num);
        if (num < 1) out.fano = false;
    }
    std::sort(out.numbers.begin(), out.numbers.end());
    return out;
}

}  // namespace toric
