#include "topodraw/isometric.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace topo {

namespace {

bool isometric_seq(const DistanceTable& d, const std::vector<int>& seq) {
    const std::size_t L = seq.size();
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j) {
            std::size_t arc = std::min(j - i, L - (j - i));
            if (d(seq[i], seq[j]) != static_cast<int>(arc)) return false;
        }
    return true;
}

struct Geodesic {
    EdgeSet edges;
    EdgeSet verts;  // vertex bitset, universe n
};

// Every cycle whose smallest vertex is r and which is isometric splits at r
// into two shortest paths (to one antipode, or to the ends of the antipodal
// edge), so pairing all shortest paths from r that avoid smaller vertices
// covers it. Paths run over the BFS DAG of r.
void candidates_from(const Graph& g, const DistanceTable& d, int r, std::vector<EdgeSet>& out) {
    std::vector<std::vector<Geodesic>> at(static_cast<std::size_t>(g.n()));
    Geodesic cur{EdgeSet(g.m()), EdgeSet(g.n())};
    cur.verts.set(r);
    auto walk = [&](auto&& self, int v) -> void {
        for (const auto& inc : g.incident(v)) {
            int w = inc.vertex;
            if (w < r || d(r, w) != d(r, v) + 1) continue;
            cur.edges.set(inc.edge);
            cur.verts.set(w);
            at[static_cast<std::size_t>(w)].push_back(cur);
            self(self, w);
            cur.edges.reset(inc.edge);
            cur.verts.reset(w);
        }
    };
    walk(walk, r);

    // even: two paths to the same antipode
    for (int t = r + 1; t < g.n(); ++t) {
        const auto& ps = at[static_cast<std::size_t>(t)];
        if (d(r, t) < 2) continue;
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                if (ps[i].verts.intersection_count(ps[j].verts) != 2) continue;
                out.push_back(ring_sum(ps[i].edges, ps[j].edges));
            }
    }
    // odd: paths to both ends of an edge at equal distance
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u < r || ed.v < r || d(r, ed.u) != d(r, ed.v)) continue;
        const auto& pu = at[static_cast<std::size_t>(ed.u)];
        const auto& pv = at[static_cast<std::size_t>(ed.v)];
        for (const auto& a : pu)
            for (const auto& b : pv) {
                if (a.verts.intersection_count(b.verts) != 1) continue;
                EdgeSet c = ring_sum(a.edges, b.edges);
                c.set(e);
                out.push_back(std::move(c));
            }
    }
}

}  // namespace

bool cycle_order_less(const Cycle& a, const Cycle& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.edges.lex_less(b.edges);
}

bool is_isometric(const Graph& g, const DistanceTable& d, const EdgeSet& c) {
    auto seq = cycle_vertex_order(g, c);
    if (seq.empty()) throw GraphError("edge set " + format_edges(c) + " is not a simple cycle");
    return isometric_seq(d, seq);
}

bool is_isometric(const Graph& g, const EdgeSet& c) { return is_isometric(g, all_pairs_distance(g), c); }

IsometricCycleSet enumerate_isometric_cycles(const Graph& g, int threads) {
    DistanceTable d = all_pairs_distance(g);
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::max(1, std::min(threads, g.n()));

    std::vector<std::vector<EdgeSet>> per(static_cast<std::size_t>(threads));
    auto work = [&](int k) {
        for (int r = k; r < g.n(); r += threads) candidates_from(g, d, r, per[static_cast<std::size_t>(k)]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(work, k);
        for (auto& t : pool) t.join();
    }

    std::unordered_set<EdgeSet, EdgeSetHash> seen;
    IsometricCycleSet out;
    for (auto& bucket : per)
        for (auto& c : bucket) {
            if (!seen.insert(c).second) continue;
            auto seq = cycle_vertex_order(g, c);
            if (seq.empty() || !isometric_seq(d, seq)) continue;
            out.cycles.push_back(Cycle{c, std::move(seq)});
        }
    out.candidates = static_cast<long long>(seen.size());
    std::sort(out.cycles.begin(), out.cycles.end(), cycle_order_less);
    return out;
}

}  // namespace topo
