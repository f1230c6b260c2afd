#include "toric/atlas.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace toric {

namespace {

// Families of subsets of {1..n} packed into one word: bit s is set iff the
// subset with mask s is a member. Fits for n <= 6.
using FamilyMask = std::uint64_t;

FamilyMask family_bit(Subset s) { return FamilyMask{1} << s; }

FamilyMask close_family(FamilyMask fam) {
    for (;;) {
        FamilyMask next = fam;
        std::vector<Subset> members;
        for (FamilyMask rest = fam; rest;) {
            int s = __builtin_ctzll(rest);
            members.push_back(static_cast<Subset>(s));
            rest &= rest - 1;
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (members[i] & members[j]) next |= family_bit(members[i] | members[j]);
        if (next == fam) return fam;
        fam = next;
    }
}

// Subset images under every permutation of {1..n}, precomputed.
std::vector<std::vector<Subset>> permutation_tables(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<Subset>> tables;
    do {
        std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i) + 1] = perm[static_cast<std::size_t>(i)];
        std::vector<Subset> table(std::size_t{1} << n, 0);
        for (Subset s = 0; s < (Subset{1} << n); ++s) table[s] = relabel_subset(s, image);
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

FamilyMask apply_table(FamilyMask fam, const std::vector<Subset>& table) {
    FamilyMask out = 0;
    while (fam) {
        int s = __builtin_ctzll(fam);
        out |= family_bit(table[static_cast<std::size_t>(s)]);
        fam &= fam - 1;
    }
    return out;
}

FamilyMask orbit_min(FamilyMask fam, const std::vector<std::vector<Subset>>& tables) {
    FamilyMask best = ~FamilyMask{0};
    for (const auto& t : tables) best = std::min(best, apply_table(fam, t));
    return best;
}

BuildingSet family_to_building_set(FamilyMask fam, int n) {
    std::vector<Subset> members;
    while (fam) {
        members.push_back(static_cast<Subset>(__builtin_ctzll(fam)));
        fam &= fam - 1;
    }
    return building_set_unchecked(std::move(members), (Subset{1} << n) - 1);
}

std::vector<BuildingSet> enumerate_impl(int n, std::size_t limit, bool connected_only) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("TooLarge: enumeration supports ground sizes 1..6");
    auto tables = permutation_tables(n);
    Subset ground = (Subset{1} << n) - 1;

    FamilyMask start = 0;
    for (int e = 1; e <= n; ++e) start |= family_bit(singleton(e));

    std::vector<Subset> candidates;
    for (Subset s = 1; s <= ground; ++s)
        if (subset_size(s) >= 2) candidates.push_back(s);

    // Classes are processed smallest first (member count, then orbit key), so
    // discovery order is deterministic and sampling is reproducible.
    std::set<std::pair<int, FamilyMask>> frontier;
    std::unordered_set<FamilyMask> seen;
    FamilyMask start_key = orbit_min(start, tables);
    frontier.emplace(__builtin_popcountll(start_key), start_key);
    seen.insert(start_key);

    std::vector<BuildingSet> out;
    while (!frontier.empty()) {
        auto [count, rep] = *frontier.begin();
        frontier.erase(frontier.begin());
        bool connected = (rep & family_bit(ground)) != 0;
        if (!connected_only || connected) {
            out.push_back(canonical_form(family_to_building_set(rep, n)).form);
            if (out.size() >= limit) break;
        }
        for (Subset m : candidates) {
            if (rep & family_bit(m)) continue;
            FamilyMask grown = close_family(rep | family_bit(m));
            FamilyMask key = orbit_min(grown, tables);
            if (seen.insert(key).second)
                frontier.emplace(__builtin_popcountll(key), key);
        }
    }
    return out;
}

}  // namespace

std::vector<BuildingSet> enumerate_building_sets(int n, bool connected_only) {
    if (n > 5)
        throw std::invalid_argument("TooLarge: exhaustive enumeration supports n <= 5");
    return enumerate_impl(n, SIZE_MAX, connected_only);
}

std::vector<BuildingSet> enumerate_building_sets_sample(int n, std::size_t count,
                                                        bool connected_only) {
    return enumerate_impl(n, count, connected_only);
}

std::vector<SimpleGraph> enumerate_graphs(int nodes) {
    if (nodes < 1 || nodes > 6) throw std::invalid_argument("enumerate_graphs supports 1..6 nodes");
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= nodes; ++i)
        for (int j = i + 1; j <= nodes; ++j) all_edges.emplace_back(i, j);
    std::size_t edge_count = all_edges.size();

    std::vector<int> perm(static_cast<std::size_t>(nodes));
    std::iota(perm.begin(), perm.end(), 1);
    // Edge-mask image table per node permutation.
    std::vector<std::vector<int>> edge_maps;
    do {
        std::vector<int> emap(edge_count);
        for (std::size_t e = 0; e < edge_count; ++e) {
            int u = perm[static_cast<std::size_t>(all_edges[e].first) - 1];
            int v = perm[static_cast<std::size_t>(all_edges[e].second) - 1];
            if (u > v) std::swap(u, v);
            auto it = std::find(all_edges.begin(), all_edges.end(), std::make_pair(u, v));
            emap[e] = static_cast<int>(it - all_edges.begin());
        }
        edge_maps.push_back(std::move(emap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> reps;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edge_count); ++mask) {
        std::uint32_t best = mask;
        for (const auto& emap : edge_maps) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < edge_count; ++e)
                if (mask & (std::uint32_t{1} << e))
                    image |= std::uint32_t{1} << emap[e];
            best = std::min(best, image);
        }
        reps.insert(best);
    }

    std::vector<SimpleGraph> out;
    for (std::uint32_t mask : reps) {
        SimpleGraph g;
        g.nodes = nodes;
        for (std::size_t e = 0; e < edge_count; ++e)
            if (mask & (std::uint32_t{1} << e)) g.edges.push_back(all_edges[e]);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CensusRecord make_record(const BuildingSet& form, int size) {
    CensusRecord rec;
    rec.ground_size = size;
    rec.form = form;
    rec.connected = form.connected();
    rec.fano_by_criterion = fano_criterion(form).fano;
    BuiltFan built = build_fan(form);
    FanoProfile profile = fano_by_intersection(built.fan);
    rec.fano_by_numbers = profile.fano;
    rec.wall_numbers = profile.numbers;
    return rec;
}

// Digraph-realization pipeline for one canonical Fano form. Point components glue as
// no-ops; an all-point form has a 0-dimensional fan and verifies trivially.
bool run_realization(const BuildingSet& form, Digraph& g_out) {
    std::vector<Digraph> parts;
    for (Subset c : components(form))
        parts.push_back(fano_to_digraph(canonical_form(restriction(form, c)).form));
    Digraph g = parts.size() == 1 ? parts[0] : glue_digraphs(parts);
    g_out = g;
    BuiltFan target = build_fan(form);
    if (g.arrows.empty()) return target.fan.dim == 0;
    Polytope p = polytope_from_digraph(g);
    if (!check_smooth_fano(p).verdict()) return false;
    Fan constructed = fan_of_digraph(g);
    return fan_isomorphism(target.fan, constructed).has_value();
}

}  // namespace

CensusReport classify_fano(int n, RunMode mode) {
    auto t0 = std::chrono::steady_clock::now();
    CensusReport report;
    for (int size = 1; size <= n; ++size) {
        std::vector<BuildingSet> forms = enumerate_building_sets(size, false);
        std::vector<CensusRecord> records(forms.size());
        for_each_index(forms.size(), mode,
                       [&](std::size_t i) { records[i] = make_record(forms[i], size); });

        CensusRow row;
        row.size = size;
        for (const CensusRecord& rec : records) {
            if (rec.fano_by_criterion != rec.fano_by_numbers)
                throw OracleDisagreement(
                    "criterion and intersection numbers disagree on a form of size " +
                    std::to_string(size));
            ++row.total;
            if (rec.connected) ++row.connected;
            if (rec.fano_by_criterion) ++row.fano;
            if (rec.connected && rec.fano_by_criterion) ++row.connected_fano;
        }
        report.rows.push_back(row);
        report.records.insert(report.records.end(), records.begin(), records.end());
    }
    report.seconds = seconds_since(t0);
    return report;
}

CensusReport verify_realization(int n, RunMode mode) {
    auto t0 = std::chrono::steady_clock::now();
    CensusReport report;
    for (int size = 1; size <= n; ++size) {
        std::vector<BuildingSet> all = enumerate_building_sets(size, false);
        std::vector<BuildingSet> fano_forms;
        for (const BuildingSet& form : all)
            if (fano_criterion(form).fano) fano_forms.push_back(form);

        std::vector<CensusRecord> records(fano_forms.size());
        for_each_index(fano_forms.size(), mode, [&](std::size_t i) {
            CensusRecord rec;
            rec.ground_size = size;
            rec.form = fano_forms[i];
            rec.connected = fano_forms[i].connected();
            rec.fano_by_criterion = true;
            Digraph g;
            rec.realization_ok = run_realization(fano_forms[i], g);
            rec.digraph = g;
            records[i] = std::move(rec);
        });

        CensusRow row;
        row.size = size;
        row.total = all.size();
        for (const CensusRecord& rec : records) {
            if (!rec.realization_ok)
                throw RealizationFailure("digraph pipeline failed on a Fano form of size " +
                                      std::to_string(size));
            ++row.fano;
            if (rec.connected) {
                ++row.connected;
                ++row.connected_fano;
            }
        }
        report.rows.push_back(row);
        report.records.insert(report.records.end(), records.begin(), records.end());
    }
    report.seconds = seconds_since(t0);
    return report;
}

namespace {

// Disjoint union of building sets, each shifted onto fresh labels.
BuildingSet disjoint_union(const std::vector<BuildingSet>& parts) {
    std::vector<Subset> members;
    Subset ground = 0;
    int offset = 0;
    for (const BuildingSet& p : parts) {
        std::vector<int> image(static_cast<std::size_t>(kMaxGround) + 1, 0);
        for (int e : subset_elements(p.ground))
            image[static_cast<std::size_t>(e)] = e + offset;
        for (Subset m : p.members) members.push_back(relabel_subset(m, image));
        ground |= relabel_subset(p.ground, image);
        offset += p.size();
    }
    return building_set_unchecked(std::move(members), ground);
}

}  // namespace

ThreefoldReport threefold_census(RunMode mode) {
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::pair<bool, BuildingSet>> sources;  // (is_product, form)
    for (const BuildingSet& form : enumerate_building_sets(4, true))
        if (fano_criterion(form).fano) sources.emplace_back(false, form);

    std::vector<BuildingSet> del_pezzo;  // dimension-2 connected Fano types
    for (const BuildingSet& form : enumerate_building_sets(3, true))
        if (fano_criterion(form).fano) del_pezzo.push_back(form);
    BuildingSet p1 = make_building_set({subset_of({1}), subset_of({2}), subset_of({1, 2})},
                                       subset_of({1, 2}));
    for (const BuildingSet& surface : del_pezzo)
        sources.emplace_back(true, disjoint_union({p1, surface}));
    sources.emplace_back(true, disjoint_union({p1, p1, p1}));

    std::vector<Fan> fans(sources.size());
    for_each_index(sources.size(), mode,
                   [&](std::size_t i) { fans[i] = build_fan(sources[i].second).fan; });

    ThreefoldReport report;
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < fans.size(); ++i) {
        bool duplicate = false;
        for (std::size_t r : representatives) {
            if (fan_isomorphism(fans[r], fans[i]).has_value()) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            representatives.push_back(i);
            if (sources[i].first)
                ++report.products;
            else
                ++report.indecomposable;
        }
    }
    report.total_distinct = representatives.size();
    report.seconds = seconds_since(t0);
    return report;
}

}  // namespace toric
