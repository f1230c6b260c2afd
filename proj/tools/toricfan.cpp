// Command-line front end: building-set validation, nested complexes, fans,
// Fano verdicts by either method, non-Fano witnesses, the directed-graph
// construction, and the census/verification engines.
//
// Exit codes: 0 success, 1 Fano verdict is false (fano verb), 2 input error,
// 3 internal oracle disagreement.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "toric/atlas.hpp"
#include "toric/json_io.hpp"

using namespace toric;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

BuildingSet load_building_set(const std::string& path) {
    return building_set_from_json(load_json(path));
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Plain table: one key per line, arrays inline.
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

void emit_census(const CensusReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << census_report_to_json(report).dump(2) << "\n";
        return;
    }
    std::printf("%6s %8s %10s %8s %15s\n", "size", "total", "connected", "fano",
                "connected_fano");
    for (const CensusRow& row : report.rows)
        std::printf("%6d %8zu %10zu %8zu %15zu\n", row.size, row.total, row.connected,
                    row.fano, row.connected_fano);
    std::printf("%zu records in %.2f s\n", report.records.size(), report.seconds);
}

std::string describe_members(const BuildingSet& b) {
    std::string out;
    for (Subset m : b.members) {
        if (!out.empty()) out += " ";
        out += subset_to_string(m);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric varieties of building sets: fans, Fano tests, digraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input;
    std::string format = "table";
    app.add_option("--input", input, "input JSON file")->envname("TORICFAN_INPUT");
    app.add_option("--output", format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* validate_cmd = app.add_subcommand("validate", "validate a building set");
    auto* nested_cmd = app.add_subcommand("nested", "emit the nested complex");
    bool maximal_only = false;
    nested_cmd->add_flag("--maximal", maximal_only, "maximal nested sets only");
    auto* fan_cmd = app.add_subcommand("fan", "emit rays, maximal cones and wall profile");
    auto* fano_cmd = app.add_subcommand("fano", "decide Fano-ness");
    std::string method = "both";
    fano_cmd->add_option("--method", method, "criterion|intersection|both")
        ->check(CLI::IsMember({"criterion", "intersection", "both"}));
    auto* witness_cmd = app.add_subcommand("witness", "explicit non-Fano wall, if any");
    auto* digraph_cmd =
        app.add_subcommand("digraph", "directed graph realizing a Fano building set");
    auto* check_digraph_cmd =
        app.add_subcommand("check-digraph", "smooth-Fano test of P_G for a digraph");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "building sets up to isomorphism");
    int size = 3;
    bool connected = false, fano_only = false;
    enumerate_cmd->add_option("--size", size, "ground size")->required();
    enumerate_cmd->add_flag("--connected", connected, "connected only");
    enumerate_cmd->add_flag("--fano-only", fano_only, "Fano only");
    std::size_t sample = 0;
    enumerate_cmd->add_option("--sample", sample, "stop after N canonical forms");
    auto* thm2_cmd = app.add_subcommand("verify-thm2", "digraph pipeline over all Fano forms");
    int thm2_size = 4;
    thm2_cmd->add_option("--size", thm2_size, "maximum ground size")->required();
    auto* census_cmd = app.add_subcommand("census-threefolds", "dimension-3 Fano census");
    auto* classify_cmd = app.add_subcommand("classify", "census with both Fano deciders");
    int classify_size = 4;
    classify_cmd->add_option("--size", classify_size, "maximum ground size")->required();
    bool serial = false;
    app.add_flag("--serial", serial, "disable the OpenMP path");
    auto* search_cmd = app.add_subcommand(
        "search-nonbuilding",
        "long-running: digraphs whose smooth Fano polytope matches no building set");
    int search_nodes = 4;
    search_cmd->add_option("--nodes", search_nodes, "digraph node count (<= 5)");

    CLI11_PARSE(app, argc, argv);
    RunMode mode = serial ? RunMode::serial : RunMode::parallel;

    try {
        if (validate_cmd->parsed()) {
            json j = load_json(input);
            int n = j.at("ground").get<int>();
            std::vector<Subset> members;
            for (const auto& arr : j.at("members")) {
                Subset s = 0;
                for (const auto& v : arr) s |= singleton(v.get<int>());
                members.push_back(s);
            }
            auto issue = check_building_set(members, (Subset{1} << n) - 1);
            if (issue) {
                emit(json{{"valid", false}, {"issue", issue->to_string()}}, format);
                return 2;
            }
            emit(json{{"valid", true}}, format);
            return 0;
        }
        if (nested_cmd->parsed()) {
            BuildingSet b = load_building_set(input);
            json faces = json::array();
            if (maximal_only) {
                for (const auto& f : maximal_nested_sets(b)) faces.push_back(nested_set_to_json(f));
            } else {
                for (const auto& f : nested_complex(b).faces) faces.push_back(nested_set_to_json(f));
            }
            emit(json{{"faces", faces}}, format);
            return 0;
        }
        if (fan_cmd->parsed()) {
            BuildingSet b = load_building_set(input);
            BuiltFan built = build_fan(b);
            json out = fan_to_json(built.fan);
            json members = json::array();
            for (Subset m : built.ray_members) members.push_back(subset_to_string(m));
            out["ray_members"] = members;
            out["profile"] = fano_profile_to_json(fano_by_intersection(built.fan));
            emit(out, format);
            return 0;
        }
        if (fano_cmd->parsed()) {
            BuildingSet b = load_building_set(input);
            json out;
            bool verdict = true;
            if (method == "criterion" || method == "both") {
                CriterionResult crit = fano_criterion(b);
                out["criterion"] = criterion_to_json(crit);
                verdict = crit.fano;
            }
            if (method == "intersection" || method == "both") {
                FanoProfile profile = fano_by_intersection(build_fan(b).fan);
                out["intersection"] = fano_profile_to_json(profile);
                verdict = profile.fano;
            }
            if (method == "both") {
                bool a = out["criterion"]["fano"].get<bool>();
                bool bb = out["intersection"]["fano"].get<bool>();
                if (a != bb) {
                    out["disagreement"] = true;
                    emit(out, format);
                    return 3;
                }
            }
            emit(out, format);
            return verdict ? 0 : 1;
        }
        if (witness_cmd->parsed()) {
            BuildingSet b = load_building_set(input);
            auto wall = witness_wall(b);
            if (!wall) {
                emit(json{{"fano", true}}, format);
                return 0;
            }
            json out = witness_to_json(*wall);
            out["fano"] = false;
            emit(out, format);
            return 0;
        }
        if (digraph_cmd->parsed()) {
            BuildingSet b = load_building_set(input);
            std::vector<Digraph> parts;
            for (Subset c : components(b))
                parts.push_back(fano_to_digraph(reground(restriction(b, c)).set));
            Digraph g = parts.size() == 1 ? parts[0] : glue_digraphs(parts);
            json out = digraph_to_json(g);
            if (!g.arrows.empty()) {
                Polytope p = polytope_from_digraph(g);
                SmoothFanoReport rep = check_smooth_fano(p);
                out["smooth_fano"] = rep.verdict();
                if (rep.verdict()) {
                    auto iso = fan_isomorphism(build_fan(b).fan, fan_of_digraph(g));
                    out["fan_isomorphic"] = iso.has_value();
                    if (iso) out["matrix"] = *iso;
                }
            }
            emit(out, format);
            return 0;
        }
        if (check_digraph_cmd->parsed()) {
            Digraph g = digraph_from_json(load_json(input));
            Polytope p = polytope_from_digraph(g);
            SmoothFanoReport rep = check_smooth_fano(p);
            json out{{"full_dimensional", p.full_dim}};
            if (rep.status == SmoothFanoReport::Status::ok) {
                out["fano"] = rep.fano;
                out["smooth"] = rep.smooth;
                out["smooth_fano"] = rep.verdict();
                json verts = json::array();
                for (int v : p.vertex_ids) verts.push_back(v);
                out["vertex_arrows"] = verts;
            } else {
                out["smooth_fano"] = false;
                out["status"] = rep.status == SmoothFanoReport::Status::not_full_dimensional
                                    ? "NotFullDimensional"
                                    : "OriginNotInterior";
            }
            emit(out, format);
            return 0;
        }
        if (enumerate_cmd->parsed()) {
            std::vector<BuildingSet> forms =
                sample > 0 ? enumerate_building_sets_sample(size, sample, connected)
                           : enumerate_building_sets(size, connected);
            json arr = json::array();
            std::size_t kept = 0;
            for (const BuildingSet& b : forms) {
                if (fano_only && !fano_criterion(b).fano) continue;
                ++kept;
                if (format == "json")
                    arr.push_back(building_set_to_json(b));
                else
                    std::cout << describe_members(b) << "\n";
            }
            if (format == "json")
                emit(json{{"count", kept}, {"forms", arr}}, format);
            else
                std::cout << "count: " << kept << "\n";
            return 0;
        }
        if (classify_cmd->parsed()) {
            emit_census(classify_fano(classify_size, mode), format);
            return 0;
        }
        if (thm2_cmd->parsed()) {
            emit_census(verify_realization(thm2_size, mode), format);
            return 0;
        }
        if (census_cmd->parsed()) {
            ThreefoldReport report = threefold_census(mode);
            emit(threefold_report_to_json(report), format);
            return 0;
        }
        if (search_cmd->parsed()) {
            if (search_nodes < 2 || search_nodes > 5) {
                std::cerr << "search-nonbuilding supports 2..5 nodes\n";
                return 2;
            }
            // Every building-set fan of the matching dimension: products of
            // connected Fano factors over all partitions of the dimension
            // (point components never change the fan).
            int dim = search_nodes - 1;
            std::vector<std::vector<Fan>> factors(static_cast<std::size_t>(dim) + 1);
            for (int d = 1; d <= dim; ++d)
                for (const BuildingSet& b : enumerate_building_sets(d + 1, true))
                    if (fano_criterion(b).fano) factors[static_cast<std::size_t>(d)].push_back(build_fan(b).fan);
            std::vector<Fan> targets;
            std::vector<Fan> stack;
            std::function<void(int, int)> assemble = [&](int remaining, int max_part) {
                if (remaining == 0) {
                    targets.push_back(stack.size() == 1 ? stack[0] : product_fan(stack));
                    return;
                }
                for (int part = std::min(remaining, max_part); part >= 1; --part) {
                    for (const Fan& f : factors[static_cast<std::size_t>(part)]) {
                        stack.push_back(f);
                        assemble(remaining - part, part);
                        stack.pop_back();
                    }
                }
            };
            assemble(dim, dim);
            std::size_t found = 0, scanned = 0;
            // All loop-free digraphs on the node set, filtered up to nothing:
            // this is a search utility, so duplicates across isomorphism are
            // accepted and only novel fans are reported.
            std::vector<std::pair<int, int>> slots;
            for (int i = 1; i <= search_nodes; ++i)
                for (int j = 1; j <= search_nodes; ++j)
                    if (i != j) slots.emplace_back(i, j);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
                Digraph g;
                g.nodes = search_nodes;
                for (std::size_t e = 0; e < slots.size(); ++e)
                    if (mask & (std::uint64_t{1} << e)) g.arrows.push_back(slots[e]);
                ++scanned;
                try {
                    Polytope p = polytope_from_digraph(g);
                    if (!check_smooth_fano(p).verdict()) continue;
                    Fan f = fan_of_digraph(g);
                    bool matched = false;
                    for (const Fan& t : targets)
                        if (fan_isomorphism(t, f)) {
                            matched = true;
                            break;
                        }
                    if (!matched) {
                        ++found;
                        std::cout << digraph_to_json(g).dump() << "\n";
                    }
                } catch (const std::exception&) {
                    continue;
                }
            }
            std::cerr << "scanned " << scanned << " digraphs, " << found
                      << " smooth-Fano polytopes outside the building-set range\n";
            return 0;
        }
    } catch (const OracleDisagreement& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
