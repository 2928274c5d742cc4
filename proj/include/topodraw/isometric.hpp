#pragma once
// Isometric cycles: every pair of cycle vertices is at graph distance equal
// to the shorter arc between them.

#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

namespace topo {

// throws GraphError if c is not a simple cycle of g
bool is_isometric(const Graph& g, const DistanceTable& d, const EdgeSet& c);
bool is_isometric(const Graph& g, const EdgeSet& c);

struct IsometricCycleSet {
    std::vector<Cycle> cycles;  // id c_{i+1} is cycles[i]
    long long candidates = 0;    // distinct candidates examined
    int size() const { return static_cast<int>(cycles.size()); }
};

// Sorted by (length, edge list lexicographic). threads <= 0 picks hardware.
IsometricCycleSet enumerate_isometric_cycles(const Graph& g, int threads = 1);

// Canonical order used for every cycle list.
bool cycle_order_less(const Cycle& a, const Cycle& b);

}  // namespace topo
