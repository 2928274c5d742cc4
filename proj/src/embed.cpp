#include "topodraw/embed.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "topodraw/maclane.hpp"

namespace topo {

namespace {

std::vector<int> edges_along(const Graph& g, const std::vector<int>& seq, bool closed) {
    std::vector<int> out;
    std::size_t L = seq.size();
    for (std::size_t i = 0; i + (closed ? 0 : 1) < L; ++i) {
        auto e = g.edge_index(seq[i], seq[(i + 1) % L]);
        out.push_back(e ? *e : -1);
    }
    return out;
}

Rim make_rim(const Graph& g, EdgeSet s) {
    Rim r;
    r.edges = std::move(s);
    std::map<int, std::vector<int>> deg;
    for (int e : r.edges.indices()) {
        deg[g.edge(e).u].push_back(e);
        deg[g.edge(e).v].push_back(e);
    }
    r.decomposable = !deg.empty();
    for (auto& [v, l] : deg)
        if (l.size() != 2) r.decomposable = false;
    if (!r.decomposable) return r;

    EdgeSet left = r.edges;
    while (!left.empty()) {
        // collect the component of the lowest remaining edge
        EdgeSet comp(g.m());
        std::vector<int> stack{left.lowest()};
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            if (comp.test(e)) continue;
            comp.set(e);
            left.reset(e);
            for (int x : {g.edge(e).u, g.edge(e).v})
                for (int f : deg[x])
                    if (!comp.test(f)) stack.push_back(f);
        }
        r.loops.push_back(cycle_vertex_order(g, comp));
    }
    r.simple = r.loops.size() == 1;
    if (r.simple) {
        r.vertices = r.loops.front();
        r.arcs = edges_along(g, r.vertices, true);
    }
    return r;
}

}  // namespace

Rim compute_rim(const Graph& g, const std::vector<const EdgeSet*>& faces) {
    return make_rim(g, ring_sum_all(faces, g.m()));
}

Rim compute_rim(const Graph& g, const std::vector<Cycle>& faces) {
    std::vector<const EdgeSet*> p;
    for (const auto& c : faces) p.push_back(&c.edges);
    return compute_rim(g, p);
}

RotationSystem rotation_system(const Graph& g, const std::vector<Cycle>& faces, const Rim& rim) {
    RotationSystem rot;
    rot.order.assign(static_cast<std::size_t>(g.n()), {});
    if (!rim.simple) {
        rot.failure = "rim is not a single simple cycle";
        return rot;
    }
    std::vector<std::vector<int>> seqs;
    for (const auto& f : faces) seqs.push_back(f.vertices.empty() ? cycle_vertex_order(g, f.edges) : f.vertices);
    seqs.push_back(rim.vertices);
    const std::size_t F = seqs.size();

    std::vector<std::vector<std::size_t>> by_edge(static_cast<std::size_t>(g.m()));
    for (std::size_t f = 0; f < F; ++f) {
        if (seqs[f].empty()) {
            rot.failure = "face " + std::to_string(f + 1) + " is not a simple cycle";
            return rot;
        }
        for (int e : edges_along(g, seqs[f], true)) by_edge[static_cast<std::size_t>(e)].push_back(f);
    }
    for (int e = 0; e < g.m(); ++e) {
        auto k = by_edge[static_cast<std::size_t>(e)].size();
        if (k != 0 && k != 2) {
            rot.failure = "edge e" + std::to_string(e + 1) + " bounds " + std::to_string(k) + " faces";
            return rot;
        }
    }

    // orient the rim along its traversal, then flip across every shared edge
    std::vector<int> dir(F, 0);
    dir[F - 1] = 1;
    std::deque<std::size_t> q{F - 1};
    auto oriented = [&](std::size_t f) {
        std::vector<int> s = seqs[f];
        if (dir[f] < 0) std::reverse(s.begin(), s.end());
        return s;
    };
    while (!q.empty()) {
        std::size_t f = q.front();
        q.pop_front();
        auto s = oriented(f);
        for (std::size_t i = 0; i < s.size(); ++i) {
            int a = s[i], b = s[(i + 1) % s.size()];
            int e = *g.edge_index(a, b);
            for (std::size_t h : by_edge[static_cast<std::size_t>(e)]) {
                if (h == f) continue;
                const auto& t = seqs[h];
                auto pos = static_cast<std::size_t>(std::find(t.begin(), t.end(), b) - t.begin());
                int want = t[(pos + 1) % t.size()] == a ? 1 : -1;
                if (dir[h] == 0) {
                    dir[h] = want;
                    q.push_back(h);
                } else if (dir[h] != want) {
                    rot.failure = "orientation conflict on edge e" + std::to_string(e + 1);
                    return rot;
                }
            }
        }
    }
    for (std::size_t f = 0; f < F; ++f)
        if (dir[f] == 0) {
            rot.failure = "configuration is not connected through shared edges";
            return rot;
        }

    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(g.n()));
    for (std::size_t f = 0; f < F; ++f) {
        auto s = oriented(f);
        for (std::size_t i = 0; i < s.size(); ++i) {
            int u = s[i], v = s[(i + 1) % s.size()], w = s[(i + 2) % s.size()];
            succ[static_cast<std::size_t>(v)][u] = w;
        }
    }
    rot.closed = true;
    for (int v = 0; v < g.n(); ++v) {
        const auto& sv = succ[static_cast<std::size_t>(v)];
        if (sv.empty()) continue;
        int start = sv.begin()->first;
        std::vector<int> cyc{start};
        for (int x = sv.at(start); x != start; x = sv.at(x)) {
            cyc.push_back(x);
            if (cyc.size() > sv.size() || !sv.count(x)) break;
        }
        if (cyc.size() != sv.size()) {
            rot.closed = false;
            if (rot.failure.empty()) rot.failure = "rotation at v" + std::to_string(v + 1) + " is not one cycle";
        }
        rot.order[static_cast<std::size_t>(v)] = std::move(cyc);
    }
    return rot;
}

std::vector<EdgeSet> trace_faces(const Graph& g, const RotationSystem& rot) {
    // next(u->v) = v->sigma_v(u)
    std::vector<std::map<int, int>> sigma(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        const auto& o = rot.order[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < o.size(); ++i) sigma[static_cast<std::size_t>(v)][o[i]] = o[(i + 1) % o.size()];
    }
    std::set<std::pair<int, int>> used;
    std::vector<EdgeSet> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : rot.order[static_cast<std::size_t>(u)]) {
            if (used.count({u, v})) continue;
            EdgeSet face(g.m());
            int a = u, b = v;
            std::size_t guard = 0;
            while (!used.count({a, b}) && guard++ <= static_cast<std::size_t>(2 * g.m())) {
                used.insert({a, b});
                auto e = g.edge_index(a, b);
                if (e) face.flip(*e);
                auto it = sigma[static_cast<std::size_t>(b)].find(a);
                if (it == sigma[static_cast<std::size_t>(b)].end()) break;
                int c = it->second;
                a = b;
                b = c;
            }
            out.push_back(std::move(face));
        }
    return out;
}

EmbeddingCheck check_embedding(const Graph& g, const std::vector<Cycle>& faces, const Rim& rim,
                               const RotationSystem& rot) {
    EmbeddingCheck ck;
    ck.closed = rot.closed;
    if (!rot.closed) return ck;
    auto traced = trace_faces(g, rot);
    ck.traced = static_cast<int>(traced.size());
    std::vector<EdgeSet> want;
    for (const auto& f : faces) want.push_back(f.edges);
    want.push_back(rim.edges);
    auto key = [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); };
    std::sort(traced.begin(), traced.end(), key);
    std::sort(want.begin(), want.end(), key);
    ck.faces_match = traced == want;
    EdgeSet all(g.m());
    for (const auto& f : faces) all |= f.edges;
    int nv = 0;
    for (const auto& o : rot.order) nv += o.empty() ? 0 : 1;
    ck.euler = nv - all.count() + static_cast<int>(traced.size()) == 2;
    return ck;
}

ChordProjection project_chord(const Rim& rim, int a, int b, int edge) {
    if (!rim.simple) throw GraphError("rim is not a single simple cycle");
    const auto& vs = rim.vertices;
    auto ia = std::find(vs.begin(), vs.end(), a), ib = std::find(vs.begin(), vs.end(), b);
    if (ia == vs.end() || ib == vs.end() || a == b)
        throw GraphError("chord endpoint v" + std::to_string((ia == vs.end() ? a : b) + 1) + " is not on the rim");
    auto i = static_cast<std::size_t>(ia - vs.begin()), j = static_cast<std::size_t>(ib - vs.begin());
    if (i > j) std::swap(i, j);
    ChordProjection p;
    p.edge = edge;
    p.a = vs[i];
    p.b = vs[j];
    const std::size_t L = vs.size();
    for (std::size_t k = i; k < j; ++k) p.arc1.push_back(rim.arcs[k]);
    for (std::size_t k = i; k <= j; ++k) p.arc1_vertices.push_back(vs[k]);
    for (std::size_t k = j; k != i; k = (k + 1) % L) {
        p.arc2.push_back(rim.arcs[k]);
        p.arc2_vertices.push_back(vs[k]);
    }
    p.arc2_vertices.push_back(vs[i]);
    return p;
}

bool chords_cross(const ChordProjection& x, const ChordProjection& y) {
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
    // interior of x's first arc holds exactly one endpoint of y
    int inside = 0;
    for (std::size_t k = 1; k + 1 < x.arc1_vertices.size(); ++k)
        if (x.arc1_vertices[k] == y.a || x.arc1_vertices[k] == y.b) ++inside;
    return inside == 1;
}

namespace {

// Maximum non-crossing chord set on positions 0..L-1 (chords may share
// endpoints). g(i,j): best within [i,j]; x(i,j): same without chord (i,j).
std::vector<std::size_t> exact_selection(const std::vector<std::pair<int, int>>& pos, int L) {
    const auto N = static_cast<std::size_t>(L);
    std::vector<int> chord_at(N * N, -1);
    for (std::size_t c = 0; c < pos.size(); ++c)
        chord_at[static_cast<std::size_t>(pos[c].first) * N + static_cast<std::size_t>(pos[c].second)] = static_cast<int>(c);
    std::vector<int> g(N * N, 0), x(N * N, 0);
    auto at = [N](int i, int j) { return static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j); };
    auto G = [&](int i, int j) { return i >= j ? 0 : g[at(i, j)]; };
    for (int i = L - 1; i >= 0; --i)
        for (int j = i + 1; j < L; ++j) {
            int best = G(i + 1, j);
            for (int k = i + 1; k < j; ++k)
                if (chord_at[at(i, k)] >= 0) best = std::max(best, G(i, k) + G(k, j));
            x[at(i, j)] = best;
            g[at(i, j)] = best + (chord_at[at(i, j)] >= 0 ? 1 : 0);
        }
    std::vector<std::size_t> out;
    // walk back: (i, j, use_x)
    std::vector<std::tuple<int, int, bool>> st;
    if (L > 1) st.emplace_back(0, L - 1, false);
    while (!st.empty()) {
        auto [i, j, excl] = st.back();
        st.pop_back();
        if (i >= j) continue;
        if (!excl && chord_at[at(i, j)] >= 0) {
            out.push_back(static_cast<std::size_t>(chord_at[at(i, j)]));
            st.emplace_back(i, j, true);
            continue;
        }
        int want = x[at(i, j)];
        if (G(i + 1, j) == want) {
            st.emplace_back(i + 1, j, false);
            continue;
        }
        for (int k = i + 1; k < j; ++k)
            if (chord_at[at(i, k)] >= 0 && G(i, k) + G(k, j) == want) {
                st.emplace_back(i, k, false);
                st.emplace_back(k, j, false);
                break;
            }
    }
    return out;
}

}  // namespace

ChordSelection select_noncrossing(const std::vector<ChordProjection>& chords, bool exact) {
    ChordSelection sel;
    sel.exact = exact;
    const std::size_t k = chords.size();
    std::vector<std::vector<char>> cross(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        sel.chords.push_back(chords[i].edge);
        for (std::size_t j = 0; j < k; ++j) cross[i][j] = i != j && chords_cross(chords[i], chords[j]);
    }
    for (std::size_t i = 0; i < k; ++i)
        sel.crossings.push_back(static_cast<int>(std::count(cross[i].begin(), cross[i].end(), 1)));

    std::vector<char> alive(k, 1);
    if (exact) {
        // linearize by position along the first chord's rim
        std::map<int, int> where;
        int L = 0;
        if (!chords.empty()) {
            const auto& c0 = chords.front();
            std::vector<int> ring(c0.arc1_vertices.begin(), c0.arc1_vertices.end() - 1);
            ring.insert(ring.end(), c0.arc2_vertices.begin(), c0.arc2_vertices.end() - 1);
            for (int v : ring) where[v] = L++;
        }
        std::vector<std::pair<int, int>> pos;
        for (const auto& c : chords) pos.push_back(std::minmax(where.at(c.a), where.at(c.b)));
        std::fill(alive.begin(), alive.end(), 0);
        for (std::size_t c : exact_selection(pos, L)) alive[c] = 1;
        for (std::size_t i = 0; i < k; ++i)
            if (!alive[i]) sel.discarded.push_back(chords[i].edge);
    } else {
        while (true) {
            int worst = -1, worst_count = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (!alive[i]) continue;
                int cnt = 0;
                for (std::size_t j = 0; j < k; ++j) cnt += alive[j] && cross[i][j];
                if (cnt > worst_count || (cnt == worst_count && cnt > 0 && chords[i].edge > chords[static_cast<std::size_t>(worst)].edge)) {
                    worst = static_cast<int>(i);
                    worst_count = cnt;
                }
            }
            if (worst < 0) break;
            alive[static_cast<std::size_t>(worst)] = 0;
            sel.discarded.push_back(chords[static_cast<std::size_t>(worst)].edge);
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        if (alive[i]) sel.kept.push_back(chords[i].edge);
    std::sort(sel.kept.begin(), sel.kept.end());
    return sel;
}

Stage3Result reinsert_chords(const Graph& g, const std::vector<Cycle>& faces, bool exact) {
    Stage3Result res;
    res.faces = faces;
    for (auto& f : res.faces)
        if (f.vertices.empty()) f.vertices = cycle_vertex_order(g, f.edges);
    res.rim_before = compute_rim(g, faces);
    if (!res.rim_before.simple) throw GraphError("rim is not a single simple cycle");

    EdgeSet used(g.m());
    for (const auto& f : faces) used |= f.edges;
    std::set<int> on_rim(res.rim_before.vertices.begin(), res.rim_before.vertices.end());
    for (int e = 0; e < g.m(); ++e) {
        if (used.test(e)) continue;
        const Edge& ed = g.edge(e);
        if (on_rim.count(ed.u) && on_rim.count(ed.v))
            res.projections.push_back(project_chord(res.rim_before, ed.u, ed.v, e));
        else
            res.interior_chords.push_back(e);
    }
    res.selection = select_noncrossing(res.projections, exact);

    // insert kept rim chords, shortest remaining arc first
    std::vector<int> rim = res.rim_before.vertices;
    std::vector<int> pending = res.selection.kept;
    std::vector<int> fallback;
    while (!pending.empty()) {
        int pick = -1;
        std::size_t pick_len = 0, pi = 0, pj = 0;
        bool pick_first = true;
        for (int e : std::vector<int>(pending)) {
            const Edge& ed = g.edge(e);
            auto ia = std::find(rim.begin(), rim.end(), ed.u), ib = std::find(rim.begin(), rim.end(), ed.v);
            if (ia == rim.end() || ib == rim.end()) {
                fallback.push_back(e);
                pending.erase(std::find(pending.begin(), pending.end(), e));
                continue;
            }
            auto i = static_cast<std::size_t>(ia - rim.begin()), j = static_cast<std::size_t>(ib - rim.begin());
            if (i > j) std::swap(i, j);
            std::size_t l1 = j - i, l2 = rim.size() - l1;
            std::size_t len = std::min(l1, l2);
            if (pick < 0 || len < pick_len || (len == pick_len && e < pick)) {
                pick = e;
                pick_len = len;
                pi = i;
                pj = j;
                pick_first = l1 <= l2;
            }
        }
        if (pick < 0) break;
        pending.erase(std::find(pending.begin(), pending.end(), pick));
        std::vector<int> arc, rest;
        if (pick_first) {
            arc.assign(rim.begin() + static_cast<std::ptrdiff_t>(pi), rim.begin() + static_cast<std::ptrdiff_t>(pj) + 1);
            rest.assign(rim.begin(), rim.begin() + static_cast<std::ptrdiff_t>(pi) + 1);
            rest.insert(rest.end(), rim.begin() + static_cast<std::ptrdiff_t>(pj), rim.end());
        } else {
            arc.assign(rim.begin() + static_cast<std::ptrdiff_t>(pj), rim.end());
            arc.insert(arc.end(), rim.begin(), rim.begin() + static_cast<std::ptrdiff_t>(pi) + 1);
            rest.assign(rim.begin() + static_cast<std::ptrdiff_t>(pi), rim.begin() + static_cast<std::ptrdiff_t>(pj) + 1);
        }
        AddedCycle ac;
        ac.chord = pick;
        ac.cycle = cycle_from_vertices(g, arc);
        res.faces.push_back(ac.cycle);
        res.added.push_back(std::move(ac));
        rim = std::move(rest);
    }

    // chords off the rim: split a face holding both ends
    std::vector<int> inner = res.interior_chords;
    inner.insert(inner.end(), fallback.begin(), fallback.end());
    std::sort(inner.begin(), inner.end());
    for (int e : inner) {
        const Edge& ed = g.edge(e);
        bool placed = false;
        for (std::size_t f = 0; f < res.faces.size() && !placed; ++f) {
            const auto& vs = res.faces[f].vertices;
            auto ia = std::find(vs.begin(), vs.end(), ed.u), ib = std::find(vs.begin(), vs.end(), ed.v);
            if (ia == vs.end() || ib == vs.end()) continue;
            auto i = static_cast<std::size_t>(ia - vs.begin()), j = static_cast<std::size_t>(ib - vs.begin());
            if (i > j) std::swap(i, j);
            std::vector<int> p1(vs.begin() + static_cast<std::ptrdiff_t>(i), vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            std::vector<int> p2(vs.begin() + static_cast<std::ptrdiff_t>(j), vs.end());
            p2.insert(p2.end(), vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            res.faces[f] = cycle_from_vertices(g, p1);
            AddedCycle ac;
            ac.chord = e;
            ac.cycle = cycle_from_vertices(g, p2);
            ac.split_face = static_cast<int>(f);
            res.faces.push_back(ac.cycle);
            res.added.push_back(std::move(ac));
            placed = true;
        }
        if (!placed) res.still_deleted.push_back(e);
    }
    for (int e : res.selection.discarded) res.still_deleted.push_back(e);
    std::sort(res.still_deleted.begin(), res.still_deleted.end());

    std::vector<const EdgeSet*> sets;
    EdgeSet all(g.m());
    for (const auto& f : res.faces) {
        sets.push_back(&f.edges);
        all |= f.edges;
    }
    res.f_cubic = f_cubic(edge_load(sets, g.m()));
    res.surviving_edges = all.count();
    res.rim_after = compute_rim(g, sets);
    if (res.rim_after.simple) {
        RotationSystem rot = rotation_system(g, res.faces, res.rim_after);
        res.rotation_closed = check_embedding(g, res.faces, res.rim_after, rot).ok();
    }
    return res;
}

std::string format_rotation(const RotationSystem& rot) {
    std::string out;
    for (std::size_t v = 0; v < rot.order.size(); ++v) {
        if (rot.order[v].empty()) continue;
        out += "σ(v" + std::to_string(v + 1) + "):";
        for (int w : rot.order[v]) out += " v" + std::to_string(w + 1);
        out += "\n";
    }
    return out;
}

std::string to_dot(const Graph& g, const std::vector<Cycle>& faces, const RotationSystem& rot) {
    std::ostringstream os;
    EdgeSet all(g.m());
    for (const auto& f : faces) all |= f.edges;
    os << "graph topodraw {\n";
    for (std::size_t v = 0; v < rot.order.size(); ++v) {
        if (rot.order[v].empty()) continue;
        os << "  v" << v + 1 << ";  // rotation:";
        for (int w : rot.order[v]) os << " v" << w + 1;
        os << "\n";
    }
    for (int e : all.indices())
        os << "  v" << g.edge(e).u + 1 << " -- v" << g.edge(e).v + 1 << " [label=\"e" << e + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace topo
