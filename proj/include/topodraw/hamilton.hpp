#pragma once
// Cycle graph H of a plane configuration and Hamiltonian-cycle extraction
// by Euler-rule deletions until H is a tree.

#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

namespace topo {

struct CycleGraphEdge {
    int a = -1, b = -1;  // positions in the configuration, a < b
    int edge = -1;       // the shared graph edge (load 2)
};

struct CycleGraph {
    int vertices = 0;
    std::vector<CycleGraphEdge> edges;
    std::vector<int> degree() const;
    bool connected(const std::vector<char>* alive = nullptr) const;
    bool is_tree() const;
    // pairs joined by more than one edge
    std::vector<std::pair<int, int>> multi_pairs() const;
    std::vector<std::vector<int>> components() const;
    // simple-graph bridges of the multigraph (parallel edges are never bridges)
    std::vector<std::pair<int, int>> bridges(const std::vector<char>* alive = nullptr) const;
};

CycleGraph build_cycle_graph(const Graph& g, const std::vector<Cycle>& config);

enum class HamiltonStatus { found, not_found, non_hamiltonian_evidence };
const char* status_name(HamiltonStatus s);

struct Witness {
    std::string kind;  // "H_multiedge" | "H_separable" | "vertex_uncovered"
    std::vector<int> cycles;  // H_multiedge: the pair
    std::vector<int> edges;   // H_multiedge: shared graph edges
    std::vector<std::vector<int>> components;  // H_separable
    std::vector<int> vertices;                 // vertex_uncovered
};

// Structural witnesses visible in the configuration itself.
std::vector<Witness> configuration_witnesses(const Graph& g, const std::vector<Cycle>& config);

struct HamiltonStep {
    int cycle = -1;  // position in the (possibly extended) configuration
    int edge = -1;
};

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::not_found;
    std::vector<int> cycle;      // vertices, when found
    std::vector<int> rim_edges;  // ascending, when found
    std::vector<HamiltonStep> trace;
    std::vector<Witness> evidence;
    std::vector<Cycle> adopted;  // rim loops appended to the configuration
    int branches = 0;            // alternative branches tried
};

struct HamiltonOptions {
    int budget = 32;
    bool adopt_rim_loops = false;
};

HamiltonResult extract_hamiltonian(const Graph& g, const std::vector<Cycle>& config, const HamiltonOptions& opt = {});

bool verify_hamiltonian(const std::vector<int>& cycle, const Graph& g);

struct VariantSummary {
    std::vector<HamiltonResult> results;
    std::vector<std::vector<int>> distinct;  // distinct Hamiltonian edge sets, ascending
};

VariantSummary enumerate_hamiltonian_variants(const Graph& g, const std::vector<std::vector<Cycle>>& configs,
                                              const HamiltonOptions& opt = {});

}  // namespace topo
