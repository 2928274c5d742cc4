#include "topodraw/edgeset.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "topodraw/kernels.hpp"

namespace topo {

EdgeSet::EdgeSet(int universe) : m_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {
    if (universe < 0) throw Error("negative edge universe");
}

EdgeSet EdgeSet::from_indices(int universe, const std::vector<int>& edges) {
    EdgeSet s(universe);
    for (int e : edges) {
        if (e < 0 || e >= universe) throw Error("edge index " + std::to_string(e + 1) + " out of range");
        s.set(e);
    }
    return s;
}

int EdgeSet::count() const { return static_cast<int>(kernels::popcount(w_.data(), w_.size())); }

bool EdgeSet::empty() const {
    return std::all_of(w_.begin(), w_.end(), [](uint64_t x) { return x == 0; });
}

int EdgeSet::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    return -1;
}

std::vector<int> EdgeSet::indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        uint64_t x = w_[i];
        while (x) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

int EdgeSet::intersection_count(const EdgeSet& o) const {
    check(o);
    return static_cast<int>(kernels::and_popcount(w_.data(), o.w_.data(), w_.size()));
}

void EdgeSet::check(const EdgeSet& o) const {
    if (m_ != o.m_) throw Error("edge universe mismatch");
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
    check(o);
    kernels::xor_into(w_.data(), o.w_.data(), w_.size());
    return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

bool EdgeSet::lex_less(const EdgeSet& o) const {
    auto a = indices(), b = o.indices();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t EdgeSet::hash() const {
    std::size_t h = static_cast<std::size_t>(m_) * 0x9e3779b97f4a7c15ULL;
    for (uint64_t x : w_) h ^= std::hash<uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r = a;
    r ^= b;
    return r;
}

EdgeSet ring_sum_all(const std::vector<const EdgeSet*>& sets, int universe) {
    EdgeSet r(universe);
    for (const EdgeSet* s : sets) r ^= *s;
    return r;
}

std::vector<int> cycle_vertex_order(const Graph& g, const EdgeSet& s) {
    std::map<int, std::vector<int>> nb;
    auto idx = s.indices();
    if (idx.size() < 3) return {};
    for (int e : idx) {
        const Edge& ed = g.edge(e);
        nb[ed.u].push_back(ed.v);
        nb[ed.v].push_back(ed.u);
    }
    for (auto& [v, l] : nb)
        if (l.size() != 2) return {};
    int start = nb.begin()->first;
    std::vector<int> seq{start};
    int prev = start, cur = std::min(nb[start][0], nb[start][1]);
    while (cur != start) {
        seq.push_back(cur);
        const auto& l = nb[cur];
        int nxt = l[0] == prev ? l[1] : l[0];
        prev = cur;
        cur = nxt;
        if (seq.size() > nb.size()) return {};
    }
    if (seq.size() != nb.size()) return {};
    return seq;
}

bool is_simple_cycle(const Graph& g, const EdgeSet& s) { return !cycle_vertex_order(g, s).empty(); }

Cycle make_cycle(const Graph& g, const EdgeSet& s) {
    auto seq = cycle_vertex_order(g, s);
    if (seq.empty()) throw GraphError("edge set " + format_edges(s) + " is not a simple cycle");
    return Cycle{s, std::move(seq)};
}

Cycle cycle_from_vertices(const Graph& g, const std::vector<int>& seq) {
    EdgeSet s(g.m());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int a = seq[i], b = seq[(i + 1) % seq.size()];
        auto e = g.edge_index(a, b);
        if (!e) throw GraphError("(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") is not an edge");
        s.set(*e);
    }
    if (static_cast<std::size_t>(s.count()) != seq.size()) throw GraphError("vertex sequence is not a simple cycle");
    return make_cycle(g, s);
}

std::string format_edges(const EdgeSet& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.indices()) {
        out += (first ? "e" : ", e") + std::to_string(e + 1);
        first = false;
    }
    return out + "}";
}

std::string format_vertices(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", v" : "v") + std::to_string(vs[i] + 1);
    return out + "}";
}

}  // namespace topo
