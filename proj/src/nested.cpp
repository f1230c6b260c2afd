#include "toric/nested.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace toric {

std::string NestedIssue::to_string() const {
    switch (kind) {
        case Kind::not_in_building_set:
            return "NotInBuildingSet: " + subset_to_string(first);
        case Kind::maximal_element:
            return "MaximalElementIncluded: " + subset_to_string(first);
        case Kind::overlap:
            return "OverlapViolation: " + subset_to_string(first) + " and " +
                   subset_to_string(second) + " overlap without nesting";
        case Kind::disjoint_union: {
            std::string out = "DisjointUnionViolation:";
            for (Subset m : family) out += " " + subset_to_string(m);
            out += " union " + subset_to_string(family_union) + " is a member";
            return out;
        }
    }
    return "unknown issue";
}

NestedChecker::NestedChecker(const BuildingSet& b)
    : b_(&b), maximal_members_(components(b)) {}

std::optional<NestedIssue> NestedChecker::add(Subset j) {
    if (!b_->contains(j))
        return NestedIssue{NestedIssue::Kind::not_in_building_set, j, 0, {}, 0};
    if (std::find(maximal_members_.begin(), maximal_members_.end(), j) !=
        maximal_members_.end())
        return NestedIssue{NestedIssue::Kind::maximal_element, j, 0, {}, 0};

    // Condition (1) against the members already present.
    for (Subset i : elems_) {
        if ((i & j) != 0 && !is_subset(i, j) && !is_subset(j, i)) {
            Subset lo = subset_less(i, j) ? i : j;
            Subset hi = lo == i ? j : i;
            return NestedIssue{NestedIssue::Kind::overlap, lo, hi, {}, 0};
        }
    }

    // Condition (2). A violating pairwise-disjoint family must contain j, and
    // it may be replaced by {j} plus roots of the members disjoint from j
    // (the union axiom closes the enlarged family's union back into B). So a
    // violation exists iff some member M ⊋ j has M \ j exactly covered by
    // those roots.
    std::vector<Subset> disjoint;
    for (Subset i : elems_)
        if ((i & j) == 0) disjoint.push_back(i);
    std::vector<Subset> roots;
    for (Subset r : disjoint) {
        bool maximal = true;
        for (Subset other : disjoint) {
            if (other != r && is_proper_subset(r, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) roots.push_back(r);
    }
    for (Subset m : b_->members) {
        if (!is_proper_subset(j, m)) continue;
        Subset x = m & ~j;
        Subset cover = 0;
        NestedSet used;
        for (Subset r : roots) {
            if (is_subset(r, x)) {
                cover |= r;
                used.push_back(r);
            }
        }
        if (cover == x && !used.empty()) {
            used.push_back(j);
            std::sort(used.begin(), used.end(), subset_less);
            return NestedIssue{NestedIssue::Kind::disjoint_union, 0, 0, std::move(used), m};
        }
    }

    elems_.push_back(j);
    return std::nullopt;
}

std::optional<NestedIssue> check_nested(const BuildingSet& b, const std::vector<Subset>& n) {
    NestedSet sorted = n;
    std::sort(sorted.begin(), sorted.end(), subset_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    NestedChecker checker(b);
    for (Subset j : sorted)
        if (auto issue = checker.add(j)) return issue;
    return std::nullopt;
}

bool is_nested(const BuildingSet& b, const std::vector<Subset>& n) {
    return !check_nested(b, n).has_value();
}

std::size_t NestedComplex::count_of_size(std::size_t k) const {
    std::size_t count = 0;
    for (const auto& f : faces)
        if (f.size() == k) ++count;
    return count;
}

namespace {

void enumerate_faces(const BuildingSet& b, const std::vector<Subset>& vertices,
                     NestedChecker& checker, std::size_t start,
                     std::vector<NestedSet>& out) {
    out.push_back(checker.elements());
    for (std::size_t i = start; i < vertices.size(); ++i) {
        NestedChecker next = checker;
        if (!next.add(vertices[i]))
            enumerate_faces(b, vertices, next, i + 1, out);
    }
}

bool face_less(const NestedSet& a, const NestedSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_less);
}

struct FaceHash {
    std::size_t operator()(const NestedSet& f) const {
        std::size_t h = 14695981039346656037ull;
        for (Subset m : f) h = (h ^ m) * 1099511628211ull;
        return h;
    }
};

}  // namespace

NestedComplex nested_complex(const BuildingSet& b) {
    if (b.size() > 10) throw std::invalid_argument("TooLarge: nested_complex requires |S| <= 10");
    std::vector<Subset> vertices;
    std::vector<Subset> maximal = components(b);
    for (Subset m : b.members)
        if (std::find(maximal.begin(), maximal.end(), m) == maximal.end())
            vertices.push_back(m);

    NestedComplex complex;
    NestedChecker checker(b);
    enumerate_faces(b, vertices, checker, 0, complex.faces);
    std::sort(complex.faces.begin(), complex.faces.end(), face_less);
    return complex;
}

std::vector<NestedSet> maximal_nested_sets(const BuildingSet& b) {
    NestedComplex complex = nested_complex(b);
    std::unordered_set<NestedSet, FaceHash> non_maximal;
    for (const NestedSet& f : complex.faces) {
        if (f.size() < 1) continue;
        NestedSet sub(f.size() - 1);
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            sub.clear();
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            non_maximal.insert(sub);
        }
    }
    std::vector<NestedSet> out;
    for (const NestedSet& f : complex.faces)
        if (!non_maximal.count(f)) out.push_back(f);
    return out;
}

LinkData link(const BuildingSet& b, Subset c) {
    std::vector<Subset> maximal = components(b);
    if (!b.contains(c) ||
        std::find(maximal.begin(), maximal.end(), c) != maximal.end())
        throw std::invalid_argument("NotALinkableMember: " + subset_to_string(c));

    NestedComplex complex = nested_complex(b);
    LinkData out;
    for (const NestedSet& f : complex.faces) {
        if (std::find(f.begin(), f.end(), c) == f.end()) continue;
        NestedSet reduced;
        for (Subset m : f)
            if (m != c) reduced.push_back(m);
        out.link_faces.push_back(std::move(reduced));
    }
    std::sort(out.link_faces.begin(), out.link_faces.end(), face_less);

    BuildingSet restricted = restriction(b, c);
    BuildingSet contracted = contraction(b, c);
    std::vector<Subset> image_members = restricted.members;
    image_members.insert(image_members.end(), contracted.members.begin(),
                         contracted.members.end());
    out.image = building_set_unchecked(std::move(image_members), b.ground);

    // Vertex correspondence and the face-by-face isomorphism check.
    std::unordered_map<Subset, Subset> vmap;
    for (const NestedSet& f : out.link_faces)
        for (Subset m : f)
            if (!vmap.count(m)) vmap.emplace(m, is_subset(c, m) ? m & ~c : m);
    for (auto& [from, to] : vmap) out.vertex_map.emplace_back(from, to);
    std::sort(out.vertex_map.begin(), out.vertex_map.end(),
              [](const auto& x, const auto& y) { return subset_less(x.first, y.first); });

    std::vector<NestedSet> mapped;
    mapped.reserve(out.link_faces.size());
    for (const NestedSet& f : out.link_faces) {
        NestedSet m;
        m.reserve(f.size());
        for (Subset v : f) m.push_back(vmap.at(v));
        std::sort(m.begin(), m.end(), subset_less);
        mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end(), face_less);
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

    NestedComplex target = nested_complex(out.image);
    out.isomorphism_verified =
        mapped.size() == out.link_faces.size() && mapped == target.faces;
    return out;
}

}  // namespace toric
