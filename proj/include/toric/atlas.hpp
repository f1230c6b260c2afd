#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/buildset.hpp"
#include "toric/digraph.hpp"
#include "toric/fan.hpp"
#include "toric/fano.hpp"
#include "toric/parallel.hpp"

namespace toric {

// All building sets on ground {1..n} up to isomorphism, as canonical forms in
// a deterministic discovery order (classes are grown by single-member
// additions closed under the union axiom, processed smallest first).
// Exhaustive enumeration is limited to n <= 5; n = 6 only through the sampled
// variant below.
std::vector<BuildingSet> enumerate_building_sets(int n, bool connected_only);

// First `count` canonical forms in enumeration order (n <= 6).
std::vector<BuildingSet> enumerate_building_sets_sample(int n, std::size_t count,
                                                        bool connected_only);

// Simple graphs on `nodes` labeled vertices up to isomorphism.
std::vector<SimpleGraph> enumerate_graphs(int nodes);

struct OracleDisagreement : std::runtime_error {
    explicit OracleDisagreement(const std::string& what) : std::runtime_error(what) {}
};
struct RealizationFailure : std::runtime_error {
    explicit RealizationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CensusRecord {
    int ground_size = 0;
    BuildingSet form;
    bool connected = false;
    bool fano_by_criterion = false;
    bool fano_by_numbers = false;
    std::vector<Int> wall_numbers;
    std::optional<Digraph> digraph;
    bool realization_ok = false;
};

struct CensusRow {
    int size = 0;
    std::size_t total = 0;
    std::size_t connected = 0;
    std::size_t fano = 0;
    std::size_t connected_fano = 0;
};

struct CensusReport {
    std::vector<CensusRow> rows;          // one per ground size 1..n
    std::vector<CensusRecord> records;
    double seconds = 0.0;
    std::string notes;
};

// Runs both Fano deciders on every canonical form of every ground size up to
// n; any disagreement is a hard failure (OracleDisagreement).
CensusReport classify_fano(int n, RunMode mode);

// Runs the digraph pipeline on every Fano record (disconnected ones via the
// one-node gluing) and checks the fan isomorphism; any failure is a hard
// failure (RealizationFailure).
CensusReport verify_realization(int n, RunMode mode);

struct ThreefoldReport {
    std::size_t indecomposable = 0;  // connected |S| = 4 Fano types
    std::size_t products = 0;        // P^1 x del Pezzo combinations
    std::size_t total_distinct = 0;  // distinct by fan isomorphism
    double seconds = 0.0;
};
ThreefoldReport threefold_census(RunMode mode);

}  // namespace toric
