#include "topodraw/maclane.hpp"

#include <algorithm>
#include <cassert>

namespace topo {

LoadVector edge_load(const std::vector<Cycle>& cycles, const std::vector<int>& subset, int m) {
    LoadVector p(static_cast<std::size_t>(m), 0);
    for (int i : subset)
        for (int e : cycles.at(static_cast<std::size_t>(i)).edges.indices()) ++p[static_cast<std::size_t>(e)];
    return p;
}

LoadVector edge_load(const std::vector<const EdgeSet*>& sets, int m) {
    LoadVector p(static_cast<std::size_t>(m), 0);
    for (const EdgeSet* s : sets)
        for (int e : s->indices()) ++p[static_cast<std::size_t>(e)];
    return p;
}

LoadVector vertex_load(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& subset) {
    LoadVector p(static_cast<std::size_t>(g.n()), 0);
    for (int i : subset) {
        std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
        for (int e : cycles.at(static_cast<std::size_t>(i)).edges.indices()) {
            hit[static_cast<std::size_t>(g.edge(e).u)] = 1;
            hit[static_cast<std::size_t>(g.edge(e).v)] = 1;
        }
        for (std::size_t v = 0; v < hit.size(); ++v) p[v] += hit[v];
    }
    return p;
}

int64_t f_quadratic(const LoadVector& p) {
    int64_t s = 0;
    for (int x : p) s += int64_t{x} * x - 3 * int64_t{x} + 2;
    return s;
}

int64_t f_cubic(const LoadVector& p) {
    int64_t s = 0;
    for (int x : p) s += cubic_term(x);
    return s;
}

int64_t removal_value(const std::vector<Cycle>& cycles, const std::vector<int>& subset, int drop, int m) {
    auto it = std::find(subset.begin(), subset.end(), drop);
    if (it == subset.end()) throw Error("cycle c" + std::to_string(drop + 1) + " is not in the subset");
    LoadTracker t(m);
    for (int i : subset) t.add(cycles.at(static_cast<std::size_t>(i)).edges);
    return t.value_without(cycles[static_cast<std::size_t>(drop)].edges);
}

void LoadTracker::add(const EdgeSet& c) {
    for (int e : c.indices()) {
        int& x = p_[static_cast<std::size_t>(e)];
        f3_ += cubic_term(x + 1) - cubic_term(x);
        ++x;
    }
}

void LoadTracker::remove(const EdgeSet& c) {
    for (int e : c.indices()) {
        int& x = p_[static_cast<std::size_t>(e)];
        if (x <= 0) throw Error("load underflow on edge e" + std::to_string(e + 1));
        f3_ += cubic_term(x - 1) - cubic_term(x);
        --x;
    }
#ifndef NDEBUG
    assert(f3_ == f_cubic(p_));
#endif
}

int64_t LoadTracker::value_without(const EdgeSet& c) const {
    int64_t f = f3_;
    for (int e : c.indices()) {
        int x = p_[static_cast<std::size_t>(e)];
        f += cubic_term(x - 1) - cubic_term(x);
    }
    return f;
}

std::vector<int> LoadTracker::private_edges(const EdgeSet& c) const {
    std::vector<int> out;
    for (int e : c.indices())
        if (p_[static_cast<std::size_t>(e)] == 1) out.push_back(e);
    return out;
}

std::string format_load(const LoadVector& p) {
    std::string s = "<";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
    return s + ">";
}

}  // namespace topo
