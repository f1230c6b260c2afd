#include "toric/buildset.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace toric {

namespace {

void sort_members(std::vector<Subset>& members) {
    std::sort(members.begin(), members.end(), subset_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

}  // namespace

bool BuildingSet::contains(Subset s) const {
    return std::binary_search(members.begin(), members.end(), s, subset_less);
}

bool BuildingSet::connected() const {
    return !members.empty() && members.back() == ground;
}

bool operator==(const BuildingSet& a, const BuildingSet& b) {
    return a.ground == b.ground && a.members == b.members;
}

std::string ValidationIssue::to_string() const {
    switch (kind) {
        case Kind::empty_member:
            return "EmptyMember: the empty set is not a valid member";
        case Kind::missing_singleton:
            return "MissingSingleton: {" + std::to_string(element) + "} is not a member";
        case Kind::union_violation:
            return "UnionViolation: " + subset_to_string(first) + " and " +
                   subset_to_string(second) + " intersect but their union is missing";
    }
    return "unknown issue";
}

std::optional<ValidationIssue> check_building_set(const std::vector<Subset>& family,
                                                  Subset ground) {
    if (ground == 0 || subset_size(ground) > kMaxGround)
        throw std::invalid_argument("ground set must have between 1 and 16 elements");
    std::vector<Subset> sorted = family;
    sort_members(sorted);

    for (Subset m : sorted) {
        if (m == 0)
            return ValidationIssue{ValidationIssue::Kind::empty_member, 0, 0, 0};
        if (!is_subset(m, ground))
            throw std::invalid_argument("member " + subset_to_string(m) +
                                        " is not a subset of the ground set");
    }
    for (int e : subset_elements(ground)) {
        if (!std::binary_search(sorted.begin(), sorted.end(), singleton(e), subset_less))
            return ValidationIssue{ValidationIssue::Kind::missing_singleton, 0, 0, e};
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            Subset a = sorted[i], b = sorted[j];
            if ((a & b) == 0) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(), a | b, subset_less))
                return ValidationIssue{ValidationIssue::Kind::union_violation, a, b, 0};
        }
    }
    return std::nullopt;
}

BuildingSet make_building_set(std::vector<Subset> family, Subset ground) {
    if (auto issue = check_building_set(family, ground))
        throw std::invalid_argument(issue->to_string());
    sort_members(family);
    return BuildingSet{ground, std::move(family)};
}

BuildingSet building_set_unchecked(std::vector<Subset> family, Subset ground) {
    sort_members(family);
    return BuildingSet{ground, std::move(family)};
}

std::vector<Subset> components(const BuildingSet& b) {
    std::vector<Subset> out;
    for (Subset m : b.members) {
        bool maximal = true;
        for (Subset other : b.members) {
            if (other != m && is_subset(m, other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(m);
    }
    return out;
}

BuildingSet restriction(const BuildingSet& b, Subset c) {
    if (c == 0) throw std::invalid_argument("EmptyRestrictionTarget");
    if (!is_subset(c, b.ground))
        throw std::invalid_argument("restriction target is not a subset of the ground set");
    std::vector<Subset> kept;
    for (Subset m : b.members)
        if (is_subset(m, c)) kept.push_back(m);
    return BuildingSet{c, std::move(kept)};
}

BuildingSet contraction(const BuildingSet& b, Subset c) {
    if (c == 0 || c == b.ground || !is_subset(c, b.ground))
        throw std::invalid_argument("InvalidContractionTarget");
    Subset rest = b.ground & ~c;
    std::vector<Subset> kept;
    // Walk all nonempty subsets of S \ C.
    for (Subset i = rest; i != 0; i = (i - 1) & rest) {
        if (b.contains(i) || b.contains(c | i)) kept.push_back(i);
    }
    sort_members(kept);
    return BuildingSet{rest, std::move(kept)};
}

BuildingSet graphical_building_set(const SimpleGraph& g) {
    if (g.nodes < 1 || g.nodes > kMaxGround)
        throw std::invalid_argument("node count out of range");
    std::vector<Subset> adj(static_cast<std::size_t>(g.nodes) + 1, 0);
    for (auto [u, v] : g.edges) {
        if (u < 1 || u > g.nodes || v < 1 || v > g.nodes || u == v)
            throw std::invalid_argument("invalid edge");
        adj[static_cast<std::size_t>(u)] |= singleton(v);
        adj[static_cast<std::size_t>(v)] |= singleton(u);
    }
    Subset ground = (Subset{1} << g.nodes) - 1;
    std::vector<Subset> members;
    for (Subset s = ground; s != 0; s = (s - 1) & ground) {
        Subset reached = singleton(lowest_element(s));
        for (;;) {
            Subset next = reached;
            for (int e : subset_elements(reached)) next |= adj[static_cast<std::size_t>(e)] & s;
            if (next == reached) break;
            reached = next;
        }
        if (reached == s) members.push_back(s);
    }
    sort_members(members);
    return BuildingSet{ground, std::move(members)};
}

Regrounded reground(const BuildingSet& b) {
    std::vector<int> old_label(1, 0);
    std::vector<int> image(static_cast<std::size_t>(kMaxGround) + 1, 0);
    int next = 1;
    for (int e : subset_elements(b.ground)) {
        image[static_cast<std::size_t>(e)] = next++;
        old_label.push_back(e);
    }
    std::vector<Subset> members;
    members.reserve(b.members.size());
    for (Subset m : b.members) members.push_back(relabel_subset(m, image));
    sort_members(members);
    Subset new_ground = (Subset{1} << (next - 1)) - 1;
    return Regrounded{BuildingSet{new_ground, std::move(members)}, std::move(old_label)};
}

namespace {

struct FamilyKey {
    Subset ground;
    std::vector<Subset> members;
    bool operator==(const FamilyKey&) const = default;
};

struct FamilyKeyHash {
    std::size_t operator()(const FamilyKey& k) const {
        std::size_t h = std::hash<Subset>{}(k.ground);
        for (Subset m : k.members) h = h * 1000003u + m;
        return h;
    }
};

std::mutex canon_mutex;
std::unordered_map<FamilyKey, CanonicalForm, FamilyKeyHash> canon_cache;

}  // namespace

CanonicalForm canonical_form(const BuildingSet& b) {
    int k = b.size();
    if (k > 7) throw std::invalid_argument("GroundSetTooLarge: canonical_form requires |S| <= 7");

    FamilyKey key{b.ground, b.members};
    {
        std::lock_guard<std::mutex> lock(canon_mutex);
        auto it = canon_cache.find(key);
        if (it != canon_cache.end()) return it->second;
    }

    Regrounded rg = reground(b);
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Subset> best;
    std::vector<int> best_perm;
    std::vector<int> image(static_cast<std::size_t>(k) + 1, 0);
    std::vector<Subset> relabeled(rg.set.members.size());
    do {
        for (int i = 0; i < k; ++i) image[static_cast<std::size_t>(i) + 1] = perm[static_cast<std::size_t>(i)];
        for (std::size_t i = 0; i < rg.set.members.size(); ++i)
            relabeled[i] = relabel_subset(rg.set.members[i], image);
        std::sort(relabeled.begin(), relabeled.end(), subset_less);
        if (best.empty() ||
            std::lexicographical_compare(relabeled.begin(), relabeled.end(), best.begin(),
                                         best.end(), subset_less)) {
            best = relabeled;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Compose: original element -> consecutive label -> permuted label.
    std::vector<int> relabel(static_cast<std::size_t>(kMaxGround) + 1, 0);
    for (int i = 1; i <= k; ++i) {
        int original = rg.old_label[static_cast<std::size_t>(i)];
        relabel[static_cast<std::size_t>(original)] = best_perm[static_cast<std::size_t>(i) - 1];
    }
    CanonicalForm out{BuildingSet{rg.set.ground, std::move(best)}, std::move(relabel)};

    std::lock_guard<std::mutex> lock(canon_mutex);
    canon_cache.emplace(std::move(key), out);
    return out;
}

}  // namespace toric
