#include "topodraw/hamilton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "topodraw/embed.hpp"
#include "topodraw/maclane.hpp"

namespace topo {

std::vector<int> CycleGraph::degree() const {
    std::vector<int> d(static_cast<std::size_t>(vertices), 0);
    for (const auto& e : edges) {
        ++d[static_cast<std::size_t>(e.a)];
        ++d[static_cast<std::size_t>(e.b)];
    }
    return d;
}

std::vector<std::vector<int>> CycleGraph::components() const {
    std::vector<int> comp(static_cast<std::size_t>(vertices), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < vertices; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> st{s}, members;
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            members.push_back(x);
            for (int y : adj[static_cast<std::size_t>(x)])
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
                    st.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool CycleGraph::connected(const std::vector<char>* alive) const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
    auto live = [&](int v) { return !alive || (*alive)[static_cast<std::size_t>(v)]; };
    for (const auto& e : edges)
        if (live(e.a) && live(e.b)) {
            adj[static_cast<std::size_t>(e.a)].push_back(e.b);
            adj[static_cast<std::size_t>(e.b)].push_back(e.a);
        }
    int start = -1, total = 0;
    for (int v = 0; v < vertices; ++v)
        if (live(v)) {
            ++total;
            if (start < 0) start = v;
        }
    if (total == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(vertices), 0);
    std::vector<int> st{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int cnt = 0;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        ++cnt;
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                st.push_back(y);
            }
    }
    return cnt == total;
}

bool CycleGraph::is_tree() const {
    return static_cast<int>(edges.size()) == vertices - 1 && connected();
}

std::vector<std::pair<int, int>> CycleGraph::multi_pairs() const {
    std::map<std::pair<int, int>, int> cnt;
    for (const auto& e : edges) ++cnt[{e.a, e.b}];
    std::vector<std::pair<int, int>> out;
    for (auto [k, c] : cnt)
        if (c > 1) out.push_back(k);
    return out;
}

std::vector<std::pair<int, int>> CycleGraph::bridges(const std::vector<char>* alive) const {
    auto live = [&](int v) { return !alive || (*alive)[static_cast<std::size_t>(v)]; };
    std::map<std::pair<int, int>, int> cnt;
    for (const auto& e : edges)
        if (live(e.a) && live(e.b)) ++cnt[{e.a, e.b}];
    std::vector<std::pair<int, int>> out;
    for (auto [k, c] : cnt) {
        if (c != 1) continue;
        CycleGraph h;
        h.vertices = vertices;
        for (const auto& e : edges)
            if (!(e.a == k.first && e.b == k.second)) h.edges.push_back(e);
        if (!h.connected(alive)) out.push_back(k);
    }
    return out;
}

namespace {

CycleGraph cycle_graph_of(const Graph& g, const std::vector<Cycle>& cfg, const std::vector<char>& alive) {
    std::vector<std::vector<int>> owners(static_cast<std::size_t>(g.m()));
    for (std::size_t k = 0; k < cfg.size(); ++k)
        if (alive[k])
            for (int e : cfg[k].edges.indices()) owners[static_cast<std::size_t>(e)].push_back(static_cast<int>(k));
    CycleGraph h;
    h.vertices = static_cast<int>(cfg.size());
    for (int e = 0; e < g.m(); ++e) {
        const auto& o = owners[static_cast<std::size_t>(e)];
        if (o.size() == 2) h.edges.push_back({std::min(o[0], o[1]), std::max(o[0], o[1]), e});
    }
    return h;
}

struct Search {
    const Graph& g;
    const std::vector<Cycle>& cfg;
    int budget;
    int branches = 0;
    std::vector<HamiltonStep> trace;
    EdgeSet rim;
    std::vector<int> cycle;

    LoadVector loads(const std::vector<char>& alive) const {
        LoadVector p(static_cast<std::size_t>(g.m()), 0);
        for (std::size_t k = 0; k < cfg.size(); ++k)
            if (alive[k])
                for (int e : cfg[k].edges.indices()) ++p[static_cast<std::size_t>(e)];
        return p;
    }

    bool covered_without(const LoadVector& p, int e) const {
        for (int v : {g.edge(e).u, g.edge(e).v}) {
            bool ok = false;
            for (const Incidence& inc : g.incident(v))
                if (inc.edge != e && p[static_cast<std::size_t>(inc.edge)] > 0) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    bool run(std::vector<char>& alive, int last) {
        const LoadVector p = loads(alive);
        CycleGraph h = cycle_graph_of(g, cfg, alive);
        int live = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
        if (static_cast<int>(h.edges.size()) == live - 1 && h.connected(&alive)) {
            EdgeSet r(g.m());
            for (int e = 0; e < g.m(); ++e)
                if (p[static_cast<std::size_t>(e)] == 1) r.set(e);
            auto seq = cycle_vertex_order(g, r);
            if (r.count() == g.n() && static_cast<int>(seq.size()) == g.n()) {
                rim = r;
                cycle = seq;
                return true;
            }
            return false;
        }
        auto deg = h.degree();
        auto old = h.bridges(&alive);
        struct Cand {
            int touching, new_bridge, deg, len, id, edge;
        };
        std::vector<Cand> cands;
        for (std::size_t k = 0; k < cfg.size(); ++k) {
            if (!alive[k]) continue;
            std::vector<int> ones;
            for (int e : cfg[k].edges.indices())
                if (p[static_cast<std::size_t>(e)] == 1) ones.push_back(e);
            if (ones.size() != 1 || !covered_without(p, ones.front())) continue;
            alive[k] = 0;
            CycleGraph h2 = cycle_graph_of(g, cfg, alive);
            bool conn = h2.connected(&alive);
            bool tree = conn && static_cast<int>(h2.edges.size()) == live - 2;
            int nb = 0;
            if (conn && !tree)
                for (auto br : h2.bridges(&alive))
                    if (std::find(old.begin(), old.end(), br) == old.end()) nb = 1;
            alive[k] = 1;
            if (!conn) continue;
            int touching = last < 0 || cfg[k].edges.intersection_count(cfg[static_cast<std::size_t>(last)].edges) > 0;
            cands.push_back({touching ? 0 : 1, nb, -deg[k], -cfg[k].edges.count(), -static_cast<int>(k), ones.front()});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return std::tie(a.touching, a.new_bridge, a.deg, a.len, a.id) <
                   std::tie(b.touching, b.new_bridge, b.deg, b.len, b.id);
        });
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (branches >= budget) return false;
            if (i > 0) ++branches;
            int k = -cands[i].id;
            alive[static_cast<std::size_t>(k)] = 0;
            trace.push_back({k, cands[i].edge});
            if (run(alive, k)) return true;
            trace.pop_back();
            alive[static_cast<std::size_t>(k)] = 1;
        }
        return false;
    }
};

}  // namespace

CycleGraph build_cycle_graph(const Graph& g, const std::vector<Cycle>& config) {
    return cycle_graph_of(g, config, std::vector<char>(config.size(), 1));
}

const char* status_name(HamiltonStatus s) {
    switch (s) {
        case HamiltonStatus::found: return "found";
        case HamiltonStatus::not_found: return "not_found";
        case HamiltonStatus::non_hamiltonian_evidence: return "non_hamiltonian_evidence";
    }
    return "?";
}

std::vector<Witness> configuration_witnesses(const Graph& g, const std::vector<Cycle>& config) {
    std::vector<Witness> out;
    CycleGraph h = build_cycle_graph(g, config);
    for (auto [a, b] : h.multi_pairs()) {
        Witness w;
        w.kind = "H_multiedge";
        w.cycles = {a, b};
        for (const auto& e : h.edges)
            if (e.a == a && e.b == b) w.edges.push_back(e.edge);
        out.push_back(std::move(w));
    }
    auto comps = h.components();
    if (comps.size() > 1) {
        Witness w;
        w.kind = "H_separable";
        w.components = comps;
        out.push_back(std::move(w));
    }
    std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
    for (const auto& c : config)
        for (int e : c.edges.indices()) {
            hit[static_cast<std::size_t>(g.edge(e).u)] = 1;
            hit[static_cast<std::size_t>(g.edge(e).v)] = 1;
        }
    Witness w;
    w.kind = "vertex_uncovered";
    for (int v = 0; v < g.n(); ++v)
        if (!hit[static_cast<std::size_t>(v)]) w.vertices.push_back(v);
    if (!w.vertices.empty()) out.push_back(std::move(w));
    return out;
}

HamiltonResult extract_hamiltonian(const Graph& g, const std::vector<Cycle>& config, const HamiltonOptions& opt) {
    HamiltonResult res;
    std::vector<Cycle> cfg = config;
    if (opt.adopt_rim_loops) {
        Rim rim = compute_rim(g, config);
        if (rim.decomposable && rim.loops.size() > 1) {
            int lowest = rim.edges.lowest();
            for (const auto& loop : rim.loops) {
                Cycle c = cycle_from_vertices(g, loop);
                if (c.edges.test(lowest)) continue;
                res.adopted.push_back(c);
                cfg.push_back(std::move(c));
            }
        }
    }
    Search s{g, cfg, opt.budget, 0, {}, EdgeSet(g.m()), {}};
    std::vector<char> alive(cfg.size(), 1);
    bool ok = !cfg.empty() && s.run(alive, -1);
    res.branches = s.branches;
    if (ok) {
        res.status = HamiltonStatus::found;
        res.cycle = s.cycle;
        res.rim_edges = s.rim.indices();
        res.trace = s.trace;
        return res;
    }
    res.evidence = configuration_witnesses(g, cfg);
    res.status = res.evidence.empty() ? HamiltonStatus::not_found : HamiltonStatus::non_hamiltonian_evidence;
    return res;
}

bool verify_hamiltonian(const std::vector<int>& cycle, const Graph& g) {
    if (g.n() < 3 || static_cast<int>(cycle.size()) != g.n()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

VariantSummary enumerate_hamiltonian_variants(const Graph& g, const std::vector<std::vector<Cycle>>& configs,
                                              const HamiltonOptions& opt) {
    VariantSummary out;
    std::set<std::vector<int>> seen;
    for (const auto& cfg : configs) {
        HamiltonResult r = extract_hamiltonian(g, cfg, opt);
        if (r.status != HamiltonStatus::found && !opt.adopt_rim_loops) {
            HamiltonOptions o2 = opt;
            o2.adopt_rim_loops = true;
            HamiltonResult r2 = extract_hamiltonian(g, cfg, o2);
            if (r2.status == HamiltonStatus::found) r = std::move(r2);
        }
        if (r.status == HamiltonStatus::found && seen.insert(r.rim_edges).second) out.distinct.push_back(r.rim_edges);
        out.results.push_back(std::move(r));
    }
    return out;
}

}  // namespace topo
