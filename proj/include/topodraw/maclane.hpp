#pragma once
// Edge/vertex load vectors and the quadratic and cubic MacLane functionals.

#include <cstdint>
#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

namespace topo {

using LoadVector = std::vector<int>;

// subset holds positions into cycles
LoadVector edge_load(const std::vector<Cycle>& cycles, const std::vector<int>& subset, int m);
LoadVector edge_load(const std::vector<const EdgeSet*>& sets, int m);
LoadVector vertex_load(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& subset);

// sum p^2 - 3p + 2 over edges
int64_t f_quadratic(const LoadVector& p);
// sum p(p-1)(p-2)
int64_t f_cubic(const LoadVector& p);

inline int64_t cubic_term(int64_t p) { return p * (p - 1) * (p - 2); }

// f_cubic of subset minus drop; throws Error if drop is not in subset
int64_t removal_value(const std::vector<Cycle>& cycles, const std::vector<int>& subset, int drop, int m);

// Incrementally maintained loads for a changing subset.
class LoadTracker {
public:
    explicit LoadTracker(int m) : p_(static_cast<std::size_t>(m), 0) {}
    void add(const EdgeSet& c);
    void remove(const EdgeSet& c);
    // F after removing c, without mutating
    int64_t value_without(const EdgeSet& c) const;
    int64_t cubic() const { return f3_; }
    const LoadVector& loads() const { return p_; }
    int load(int e) const { return p_[static_cast<std::size_t>(e)]; }
    // edges of c whose load is exactly 1
    std::vector<int> private_edges(const EdgeSet& c) const;

private:
    LoadVector p_;
    int64_t f3_ = 0;
};

// "<3, 1, 1, ...>"
std::string format_load(const LoadVector& p);

}  // namespace topo
