#pragma once

#include "ucq/finite_space.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <cstdint>
#include <random>
#include <optional>
#include <string>
#include <vector>

namespace ucq {

// One row of a suite report. `ok` is false only for genuine mismatches;
// checks degraded to Unknown at the given horizon set `skipped` instead.
struct CheckEntry {
    std::string id;
    std::string quote;
    std::string verdict;
    std::string detail;  // witness / certificate / replay artifact
    bool ok = true;
    bool skipped = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long long trials = 0;
    long long max_size = 0;
    long long horizon = 10000;
    long long eps_grid = 64;
    std::vector<CheckEntry> checks;  // sorted by id

    long long failures() const;
    long long skipped() const;
    // Canonical machine form; byte-identical across runs with equal inputs.
    std::string to_json_text() const;
    std::string to_text() const;
};

// Test oracles shared by the suites and the gate binary.
// Normality by enumerating all pairs of open separators (|X| <= 12).
bool is_normal_bruteforce(const FiniteSpace& s);
// Open cover built from minimal neighborhoods with random padding.
Cover random_open_cover(std::mt19937_64& rng, const FiniteSpace& s);
// Ball-containment verification: holds at delta_star, breaks just above it.
bool lebesgue_exact(const FiniteSpace& s, const Cover& c, std::string* why = nullptr);

// Randomized finite-space invariant suite. One report row per property,
// aggregated over all trials; the first failing trial is embedded as a
// replayable space JSON. Throws if trials < 1.
SuiteReport run_finite_suite(std::uint64_t seed, long long trials, std::size_t max_size);

// Runs every machine-checkable catalog claim; metadata claims are listed
// without execution. Claims that return Unknown at the horizon are skipped.
SuiteReport run_zoo_suite(long long horizon = 10000, long long eps_grid = 64);

// Fixed mutation list: single distance-case overrides and expected-verdict
// flips. Each entry must break at least one zoo-suite check.
std::vector<std::string> mutation_ids();
// Zoo suite under one mutation (exposed so tests can inspect which check breaks).
SuiteReport run_mutated_zoo_suite(const std::string& mutation_id, long long horizon = 10000,
                                  long long eps_grid = 64);
// One row per mutation; ok iff the mutated zoo suite reports a failure.
SuiteReport run_mutation_suite(long long horizon = 10000, long long eps_grid = 64);

// Random search over non-T1 spaces for one whose conjugate topology differs
// from the conjugate topology of its rho construction. Reports findings
// without asserting that an example must exist.
struct TopologySearchResult {
    long long trials = 0;
    long long found = 0;
    std::optional<FiniteSpace> example;
};
TopologySearchResult search_rho_conjugate_topology(std::uint64_t seed, long long trials,
                                                   std::size_t max_size);

}  // namespace ucq
