#include "toric/json_io.hpp"

#include <stdexcept>

namespace toric {

using nlohmann::json;

namespace {

json subset_to_array(Subset s) {
    json arr = json::array();
    for (int e : subset_elements(s)) arr.push_back(e);
    return arr;
}

Subset subset_from_array(const json& arr, int ground_size) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("member must be a nonempty array of elements");
    Subset s = 0;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw std::invalid_argument("member elements must be integers");
        int e = v.get<int>();
        if (e < 1 || e > ground_size)
            throw std::invalid_argument("element " + std::to_string(e) + " out of range");
        s |= singleton(e);
    }
    return s;
}

}  // namespace

json building_set_to_json(const BuildingSet& b) {
    Regrounded rg = reground(b);
    json members = json::array();
    for (Subset m : rg.set.members) members.push_back(subset_to_array(m));
    return json{{"ground", rg.set.size()}, {"members", members}};
}

BuildingSet building_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("members"))
        throw std::invalid_argument("expected {\"ground\": n, \"members\": [[..],..]}");
    int n = j.at("ground").get<int>();
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("ground size must be between 1 and 16");
    std::vector<Subset> members;
    for (const auto& arr : j.at("members")) members.push_back(subset_from_array(arr, n));
    return make_building_set(std::move(members), (Subset{1} << n) - 1);
}

json digraph_to_json(const Digraph& g) {
    json arrows = json::array();
    for (auto [i, j] : g.arrows) arrows.push_back(json::array({i, j}));
    return json{{"nodes", g.nodes}, {"arrows", arrows}};
}

Digraph digraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("arrows"))
        throw std::invalid_argument("expected {\"nodes\": n, \"arrows\": [[i,j],..]}");
    Digraph g;
    g.nodes = j.at("nodes").get<int>();
    for (const auto& arr : j.at("arrows")) {
        if (!arr.is_array() || arr.size() != 2)
            throw std::invalid_argument("arrows must be pairs");
        g.arrows.emplace_back(arr[0].get<int>(), arr[1].get<int>());
    }
    std::sort(g.arrows.begin(), g.arrows.end());
    return g;
}

json nested_set_to_json(const NestedSet& n) {
    json arr = json::array();
    for (Subset m : n) arr.push_back(subset_to_array(m));
    return arr;
}

json fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(r);
    json cones = json::array();
    for (const auto& c : f.max_cones) cones.push_back(c);
    return json{{"dim", f.dim}, {"rays", rays}, {"max_cones", cones}};
}

json fano_profile_to_json(const FanoProfile& p) {
    json walls = json::array();
    for (const auto& [wall, number] : p.wall_numbers)
        walls.push_back(json{{"tau", wall.tau}, {"number", number}});
    return json{{"fano", p.fano}, {"numbers", p.numbers}, {"walls", walls}};
}

json criterion_to_json(const CriterionResult& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back(json{
            {"component", subset_to_array(v.component)},
            {"i1", subset_to_array(v.i1)},
            {"i2", subset_to_array(v.i2)},
            {"reason", v.reason == CriterionViolation::Reason::union_not_component
                           ? "UnionNotComponent"
                           : "IntersectionNotInB"}});
    }
    return json{{"fano", r.fano}, {"violations", violations}};
}

json witness_to_json(const WitnessWall& w) {
    json tau = json::array();
    for (Subset m : w.tau_members) tau.push_back(subset_to_array(m));
    return json{{"component", subset_to_array(w.component)},
                {"j1", subset_to_array(w.j1)},
                {"j2", subset_to_array(w.j2)},
                {"tau_members", tau},
                {"intersection_number", w.number}};
}

json census_report_to_json(const CensusReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"size", row.size},
                            {"total", row.total},
                            {"connected", row.connected},
                            {"fano", row.fano},
                            {"connected_fano", row.connected_fano}});
    }
    json records = json::array();
    for (const auto& rec : r.records) {
        json item{{"ground_size", rec.ground_size},
                  {"form", building_set_to_json(rec.form)},
                  {"connected", rec.connected},
                  {"fano", rec.fano_by_criterion},
                  {"wall_numbers", rec.wall_numbers}};
        if (rec.digraph) item["digraph"] = digraph_to_json(*rec.digraph);
        records.push_back(std::move(item));
    }
    return json{{"rows", rows}, {"records", records}, {"seconds", r.seconds}};
}

json threefold_report_to_json(const ThreefoldReport& r) {
    return json{{"indecomposable", r.indecomposable},
                {"products", r.products},
                {"total_distinct", r.total_distinct},
                {"seconds", r.seconds}};
}

}  // namespace toric
