#pragma once
// Brute-force reference implementations, deliberately independent of the
// library's algorithms (adjacency matrices, plain vectors, no bitsets).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "topodraw/graph.hpp"

namespace oracle {

using Sets = std::set<std::vector<int>>;  // sorted 0-based edge ids

inline std::vector<std::vector<int>> matrix(const topo::Graph& g) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(g.n()), std::vector<int>(static_cast<std::size_t>(g.n()), -1));
    for (int e = 0; e < g.m(); ++e) {
        a[static_cast<std::size_t>(g.edge(e).u)][static_cast<std::size_t>(g.edge(e).v)] = e;
        a[static_cast<std::size_t>(g.edge(e).v)][static_cast<std::size_t>(g.edge(e).u)] = e;
    }
    return a;
}

// Floyd-Warshall hop distances; unreachable = large
inline std::vector<std::vector<int>> distances(const topo::Graph& g) {
    const int INF = 1 << 20;
    auto a = matrix(g);
    auto n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] >= 0) d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// every simple cycle, each as (sorted edges, vertex order)
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> all_simple_cycles(const topo::Graph& g) {
    auto a = matrix(g);
    const int n = g.n();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> path;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    // cycles whose smallest vertex is s, second vertex < last vertex
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w = s; w < n; ++w) {
            if (a[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] < 0) continue;
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                std::vector<int> es;
                for (std::size_t i = 0; i < path.size(); ++i)
                    es.push_back(a[static_cast<std::size_t>(path[i])][static_cast<std::size_t>(path[(i + 1) % path.size()])]);
                std::sort(es.begin(), es.end());
                out.emplace_back(es, path);
                continue;
            }
            if (w == s || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            dfs(s, w);
            path.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(static_cast<std::size_t>(n), 0);
        on[static_cast<std::size_t>(s)] = 1;
        dfs(s, s);
    }
    return out;
}

inline bool isometric(const std::vector<std::vector<int>>& d, const std::vector<int>& seq) {
    const int L = static_cast<int>(seq.size());
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            if (d[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])][static_cast<std::size_t>(seq[static_cast<std::size_t>(j)])] !=
                std::min(j - i, L - j + i))
                return false;
    return true;
}

inline Sets isometric_cycles(const topo::Graph& g) {
    auto d = distances(g);
    Sets out;
    for (auto& [es, seq] : all_simple_cycles(g))
        if (isometric(d, seq)) out.insert(es);
    return out;
}

// rank over GF(2) with dense byte rows, pivot on the highest column
inline int rank(std::vector<std::vector<uint8_t>> rows) {
    int r = 0;
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows.front().size());
    for (int c = cols - 1; c >= 0 && r < static_cast<int>(rows.size()); --c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(r)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])
                for (int k = 0; k < cols; ++k) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] ^= rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        ++r;
    }
    return r;
}

inline bool connected_without(const topo::Graph& g, int skip_vertex, int skip_edge) {
    auto a = matrix(g);
    const int n = g.n();
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (v != skip_vertex) {
            ++total;
            if (start < 0) start = v;
        }
    if (total == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> st{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int cnt = 0;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        ++cnt;
        for (int y = 0; y < n; ++y) {
            int e = a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (e < 0 || e == skip_edge || y == skip_vertex || seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            st.push_back(y);
        }
    }
    return cnt == total;
}

struct Separability {
    bool connected;
    std::vector<int> bridges, cut_vertices;
    int min_degree;
};

inline int components(const topo::Graph& g, int skip_vertex, int skip_edge) {
    auto a = matrix(g);
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    int c = 0;
    for (int s0 = 0; s0 < g.n(); ++s0) {
        if (s0 == skip_vertex || seen[static_cast<std::size_t>(s0)]) continue;
        ++c;
        std::vector<int> st{s0};
        seen[static_cast<std::size_t>(s0)] = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y = 0; y < g.n(); ++y) {
                int e = a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                if (e < 0 || e == skip_edge || y == skip_vertex || seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                st.push_back(y);
            }
        }
    }
    return c;
}

// removal-based: an edge or vertex is critical when deleting it adds a component
inline Separability separability(const topo::Graph& g) {
    Separability s{components(g, -1, -1) <= 1, {}, {}, g.n() ? 1 << 20 : 0};
    for (int v = 0; v < g.n(); ++v) s.min_degree = std::min(s.min_degree, g.degree(v));
    int base = components(g, -1, -1);
    for (int e = 0; e < g.m(); ++e)
        if (components(g, -1, e) > base) s.bridges.push_back(e);
    for (int v = 0; v < g.n(); ++v)
        if (components(g, v, -1) > base - (g.degree(v) == 0 ? 1 : 0)) s.cut_vertices.push_back(v);
    return s;
}

// Hamiltonian cycle by backtracking; empty if none
inline std::vector<int> hamiltonian_cycle(const topo::Graph& g) {
    const int n = g.n();
    if (n < 3) return {};
    auto a = matrix(g);
    std::vector<int> path{0};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[0] = 1;
    std::function<bool()> go = [&]() {
        if (static_cast<int>(path.size()) == n) return a[static_cast<std::size_t>(path.back())][0] >= 0;
        for (int w = 1; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || a[static_cast<std::size_t>(path.back())][static_cast<std::size_t>(w)] < 0) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (go()) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return go() ? path : std::vector<int>{};
}

// interleaving on a circle given endpoint positions
inline bool interleave(int a1, int b1, int a2, int b2) {
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
    if (a1 > b1) std::swap(a1, b1);
    bool in2 = a1 < a2 && a2 < b1, inb = a1 < b2 && b2 < b1;
    return in2 != inb;
}

// random graph on n vertices with edge probability p, retried until
// connected, bridgeless, without cut vertices and min degree >= 3
inline topo::Graph random_nonseparable(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    while (true) {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        topo::Graph g(n, es);
        auto s = separability(g);
        if (s.connected && s.bridges.empty() && s.cut_vertices.empty() && s.min_degree >= 3) return g;
    }
}

inline topo::Graph random_graph(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
    return topo::Graph(n, all);
}

}  // namespace oracle
