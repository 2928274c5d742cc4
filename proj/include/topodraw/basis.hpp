#pragma once
// Isometric-cycle basis selection: Monte Carlo over random orders and
// steepest descent on the cubic functional.

#include <cstdint>
#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

namespace topo {

struct BasisCandidate {
    std::vector<int> cycles;  // positions into the cycle table, ascending
    int64_t f_cubic = 0;
    int64_t f_quadratic = 0;
    int sum_of_lengths = 0;
    bool independent = false;
    bool covers_edges = false;
    bool covers_vertices = false;
    std::string method;  // "mc" | "sd" | "given"
    int64_t trial = -1;
};

// Fill the metric fields of a candidate from its cycle list.
BasisCandidate evaluate_basis(const Graph& g, const std::vector<Cycle>& cycles, std::vector<int> ids,
                              std::string method = "given");
bool basis_better(const BasisCandidate& a, const BasisCandidate& b);

// SplitMix64 finalizer, used to derive per-trial streams
uint64_t mix_seed(uint64_t seed, uint64_t trial);
// Fisher-Yates with rejection-sampled bounded draws from mt19937_64
std::vector<int> trial_order(int k, uint64_t seed, uint64_t trial);

struct TrialRecord {
    int64_t trial = 0;
    std::vector<int> cycles;
    int64_t f_cubic = 0;
    int sum_of_lengths = 0;
};

struct MonteCarloResult {
    BasisCandidate best;
    std::vector<TrialRecord> log;
};

// throws Error on rank deficiency
MonteCarloResult monte_carlo_basis(const Graph& g, const std::vector<Cycle>& cycles, int64_t trials,
                                   uint64_t seed, int threads = 1);

struct DescentRound {
    int removed = -1;
    int64_t f_before = 0;
    int64_t f_after = 0;
    int64_t rate = 0;
    // (cycle, value) for every legal removal in this round
    std::vector<std::pair<int, int64_t>> values;
};

struct DescentResult {
    BasisCandidate basis;
    std::vector<int> excluded;
    std::vector<DescentRound> rounds;
    bool complete = false;  // reached m-n+1 cycles
    int64_t evaluations = 0;
};

// k longest cycles, ties by higher id; throws Error if k is too large
std::vector<int> seed_exclusions(const Graph& g, const std::vector<Cycle>& cycles, int k);

DescentResult steepest_descent_basis(const Graph& g, const std::vector<Cycle>& cycles,
                                     const std::vector<int>& exclusions = {});

// Among the independent subsets of pool of size m-n+1, the minimum by
// (f_cubic, sum of lengths, ids). Exhaustive; pool excess over the target
// must be at most 4.
BasisCandidate best_contained_basis(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& pool);

}  // namespace topo
