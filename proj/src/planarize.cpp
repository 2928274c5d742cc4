#include "topodraw/planarize.hpp"

#include <algorithm>
#include <map>

#include "topodraw/maclane.hpp"

namespace topo {

namespace {

bool covers_without(const Graph& g, const LoadTracker& loads, const std::vector<int>& zeroed) {
    // vertices touching a zeroed edge must keep another loaded edge
    for (int e : zeroed)
        for (int v : {g.edge(e).u, g.edge(e).v}) {
            bool ok = false;
            for (const Incidence& inc : g.incident(v))
                if (loads.load(inc.edge) > 0 && std::find(zeroed.begin(), zeroed.end(), inc.edge) == zeroed.end()) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    return true;
}

bool forms_one_path(const Graph& g, const std::vector<int>& es) {
    std::map<int, int> deg;
    for (int e : es) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    int ends = 0;
    for (auto [v, d] : deg) {
        if (d > 2) return false;
        ends += d == 1;
    }
    // a forest of paths with one component has exactly |V| - 1 edges
    return ends == 2 && deg.size() == es.size() + 1;
}

std::optional<std::vector<int>> deletable_with(const Graph& g, const LoadTracker& loads, const EdgeSet& c,
                                               const ReduceOptions& opt) {
    auto priv = loads.private_edges(c);
    if (priv.empty()) return std::nullopt;
    if (priv.size() > 1 && !(opt.count_rim_as_cycle && forms_one_path(g, priv))) return std::nullopt;
    if (!covers_without(g, loads, priv)) return std::nullopt;
    return priv;
}

LoadTracker tracker_for(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& subset) {
    LoadTracker t(g.m());
    for (int i : subset) t.add(cycles.at(static_cast<std::size_t>(i)).edges);
    return t;
}

}  // namespace

std::optional<std::vector<int>> deletable_edges(const Graph& g, const std::vector<Cycle>& cycles,
                                                const std::vector<int>& subset, int c, const ReduceOptions& opt) {
    if (std::find(subset.begin(), subset.end(), c) == subset.end())
        throw Error("cycle c" + std::to_string(c + 1) + " is not in the subset");
    return deletable_with(g, tracker_for(g, cycles, subset), cycles[static_cast<std::size_t>(c)].edges, opt);
}

std::optional<int> euler_deletable(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& subset,
                                   int c) {
    auto r = deletable_edges(g, cycles, subset, c, {});
    if (!r) return std::nullopt;
    return r->front();
}

std::vector<Cycle> select_cycles(const std::vector<Cycle>& cycles, const std::vector<int>& ids) {
    std::vector<Cycle> out;
    for (int i : ids) out.push_back(cycles.at(static_cast<std::size_t>(i)));
    return out;
}

PlaneChecks audit_plane(const Graph& g, const std::vector<Cycle>& faces, Rim* rim_out, RotationSystem* rot_out) {
    PlaneChecks ck;
    EdgeSet all(g.m());
    for (const auto& f : faces) all |= f.edges;
    std::vector<std::pair<int, int>> es;
    for (int e : all.indices()) es.emplace_back(g.edge(e).u, g.edge(e).v);
    // keep vertex numbering; uncovered vertices make it disconnected
    Graph sub(g.n(), es);
    NonseparabilityReport rep = validate_nonseparable(sub);
    ck.connected = rep.connected;
    ck.articulation_points = rep.articulation_points;
    ck.no_articulation = rep.articulation_points.empty();
    Rim rim = compute_rim(g, faces);
    RotationSystem rot = rotation_system(g, faces, rim);
    ck.rotation_closed = rim.simple && check_embedding(g, faces, rim, rot).ok();
    ck.rotation_failure = rot.failure;
    if (!ck.rotation_closed && ck.rotation_failure.empty()) ck.rotation_failure = "face trace mismatch";
    if (rim_out) *rim_out = std::move(rim);
    if (rot_out) *rot_out = std::move(rot);
    return ck;
}

void audit_configuration(const Graph& g, const std::vector<Cycle>& cycles, PlaneConfiguration& config) {
    config.checks = audit_plane(g, select_cycles(cycles, config.cycles), &config.rim, &config.rotation);
}

PlaneConfiguration reduce_to_plane(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& basis,
                                   const ReduceOptions& opt) {
    PlaneConfiguration pc;
    pc.cycles = basis;
    std::sort(pc.cycles.begin(), pc.cycles.end());
    LoadTracker loads = tracker_for(g, cycles, pc.cycles);
    std::map<int, int64_t> prev;

    while (loads.cubic() > 0) {
        const int64_t f0 = loads.cubic();
        struct Cand {
            int64_t f, rate;
            int len, id;
            std::vector<int> edges;
        };
        std::vector<Cand> cands;
        for (int c : pc.cycles) {
            const EdgeSet& es = cycles[static_cast<std::size_t>(c)].edges;
            auto del = deletable_with(g, loads, es, opt);
            if (!del) continue;
            int64_t f = loads.value_without(es);
            auto it = prev.find(c);
            int64_t before = it == prev.end() ? f0 : it->second;
            cands.push_back({f, before - f, es.count(), c, std::move(*del)});
        }
        if (cands.empty()) break;
        auto best = std::min_element(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.f != b.f) return a.f < b.f;
            if (a.rate != b.rate) return a.rate > b.rate;
            if (a.len != b.len) return a.len < b.len;
            return a.id < b.id;
        });
        prev.clear();
        for (const auto& c : cands) prev[c.id] = c.f;

        RemovalStep st{best->id, best->edges, f0, best->f, best->rate};
        loads.remove(cycles[static_cast<std::size_t>(best->id)].edges);
        pc.cycles.erase(std::find(pc.cycles.begin(), pc.cycles.end(), best->id));
        pc.removed_edges.insert(pc.removed_edges.end(), st.edges.begin(), st.edges.end());
        pc.steps.push_back(std::move(st));
    }
    pc.f_cubic = loads.cubic();
    pc.planar = pc.f_cubic == 0;
    audit_configuration(g, cycles, pc);
    return pc;
}

}  // namespace topo
