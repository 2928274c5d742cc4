#pragma once
// Dense GF(2) edge subsets and cycles over a fixed edge universe.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "topodraw/graph.hpp"

namespace topo {

class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe);
    static EdgeSet from_indices(int universe, const std::vector<int>& edges);  // 0-based

    int universe() const { return m_; }
    bool test(int e) const { return (w_[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1u; }
    void set(int e) { w_[static_cast<std::size_t>(e >> 6)] |= uint64_t{1} << (e & 63); }
    void reset(int e) { w_[static_cast<std::size_t>(e >> 6)] &= ~(uint64_t{1} << (e & 63)); }
    void flip(int e) { w_[static_cast<std::size_t>(e >> 6)] ^= uint64_t{1} << (e & 63); }

    int count() const;
    bool empty() const;
    int lowest() const;  // -1 when empty
    std::vector<int> indices() const;
    int intersection_count(const EdgeSet& o) const;

    // throws Error on universe mismatch
    EdgeSet& operator^=(const EdgeSet& o);
    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& operator&=(const EdgeSet& o);
    bool operator==(const EdgeSet& o) const { return m_ == o.m_ && w_ == o.w_; }

    // lexicographic on the sorted index lists
    bool lex_less(const EdgeSet& o) const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::size_t hash() const;

private:
    void check(const EdgeSet& o) const;
    int m_ = 0;
    std::vector<uint64_t> w_;
};

EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b);
EdgeSet ring_sum_all(const std::vector<const EdgeSet*>& sets, int universe);

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

struct Cycle {
    EdgeSet edges;
    std::vector<int> vertices;  // cyclic order, may be empty
    int length() const { return edges.count(); }
};

// Orders the vertices of a simple cycle given by its edges: start at the
// smallest vertex, then toward its smaller neighbor. Empty result if the
// edge set is not one simple cycle.
std::vector<int> cycle_vertex_order(const Graph& g, const EdgeSet& s);
bool is_simple_cycle(const Graph& g, const EdgeSet& s);
Cycle make_cycle(const Graph& g, const EdgeSet& s);  // throws GraphError if not simple
Cycle cycle_from_vertices(const Graph& g, const std::vector<int>& seq);  // throws GraphError

// "{e1, e2, e5}" with 1-based ids
std::string format_edges(const EdgeSet& s);
std::string format_vertices(const std::vector<int>& vs);

}  // namespace topo
