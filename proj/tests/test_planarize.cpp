#include "doctest.h"

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "topodraw/basis.hpp"
#include "topodraw/isometric.hpp"
#include "topodraw/maclane.hpp"
#include "topodraw/planarize.hpp"

using namespace topo;

namespace {

std::vector<int> zero_based(const std::vector<int>& ids) {
    std::vector<int> out;
    for (int i : ids) out.push_back(i - 1);
    return out;
}

// replays the steps on a load vector and checks each one
void replay(const Graph& g, const std::vector<Cycle>& C, const std::vector<int>& basis, const PlaneConfiguration& pc,
            bool paths) {
    std::vector<int> cur = basis;
    for (const auto& st : pc.steps) {
        auto p = edge_load(C, cur, g.m());
        CHECK(st.f_before == f_cubic(p));
        std::vector<int> priv;
        for (int e : C[static_cast<std::size_t>(st.cycle)].edges.indices())
            if (p[static_cast<std::size_t>(e)] == 1) priv.push_back(e);
        auto sorted = st.edges;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == priv);
        if (!paths) CHECK(st.edges.size() == 1);
        cur.erase(std::find(cur.begin(), cur.end(), st.cycle));
        auto q = edge_load(C, cur, g.m());
        CHECK(st.f_after == f_cubic(q));
        CHECK(st.f_after <= st.f_before);
        for (int e : st.edges) CHECK(q[static_cast<std::size_t>(e)] == 0);
        // every vertex still on some cycle
        auto pv = vertex_load(g, C, cur);
        auto pv0 = vertex_load(g, C, basis);
        for (int v = 0; v < g.n(); ++v)
            if (pv0[static_cast<std::size_t>(v)] > 0) CHECK(pv[static_cast<std::size_t>(v)] > 0);
    }
    std::sort(cur.begin(), cur.end());
    CHECK(cur == pc.cycles);
    CHECK(pc.f_cubic == f_cubic(edge_load(C, cur, g.m())));
}

}  // namespace

TEST_CASE("euler_deletable on the G1 basis") {
    Graph g = fx::load("g1");
    auto C = fx::cycles(g, fx::G1);
    auto basis = zero_based(fx::G1_BASIS);
    CHECK(euler_deletable(g, C, basis, 0) == 1);   // c1 -> e2
    CHECK(euler_deletable(g, C, basis, 1) == 2);   // c2 -> e3
    CHECK(euler_deletable(g, C, basis, 2) == 3);   // c3 -> e4
    CHECK_FALSE(euler_deletable(g, C, basis, 6).has_value());  // c7 has no private edge
    CHECK_THROWS_AS(euler_deletable(g, C, basis, 3), Error);
}

TEST_CASE("euler_deletable: all loads 2 or two private edges give nothing") {
    Graph k4 = fx::load("k4");
    auto T = enumerate_isometric_cycles(k4).cycles;
    for (int c = 0; c < 4; ++c) CHECK_FALSE(euler_deletable(k4, T, {0, 1, 2, 3}, c).has_value());
    Graph d(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto D = enumerate_isometric_cycles(d).cycles;
    CHECK_FALSE(euler_deletable(d, D, {0, 1}, 0).has_value());
}

TEST_CASE("G1 basis reduces to F 0 in three removals, first deleting e2") {
    Graph g = fx::load("g1");
    auto C = fx::cycles(g, fx::G1);
    auto basis = zero_based(fx::G1_BASIS);
    auto pc = reduce_to_plane(g, C, basis);
    REQUIRE(pc.steps.size() == 3);
    CHECK(pc.steps[0].cycle == 0);
    CHECK(pc.steps[0].edges == std::vector<int>{1});
    CHECK(pc.f_cubic == 0);
    CHECK(pc.planar);
    CHECK(pc.n_u() == 3);
    CHECK(pc.checks.ok());
    replay(g, C, basis, pc, false);
}

TEST_CASE("G5 descent basis finishes at F 0") {
    Graph g = fx::load("g5");
    auto C = fx::cycles(g, fx::G5);
    auto sd = steepest_descent_basis(g, C);
    auto pc = reduce_to_plane(g, C, sd.basis.cycles);
    CHECK(pc.f_cubic == 0);
    REQUIRE_FALSE(pc.steps.empty());
    CHECK(pc.steps.front().f_before == 6);
    replay(g, C, sd.basis.cycles, pc, false);
}

TEST_CASE("an F 0 basis needs no removal") {
    Graph g = fx::load("g2");
    auto C = enumerate_isometric_cycles(g).cycles;
    auto mc = monte_carlo_basis(g, C, 1000, 1);
    REQUIRE(mc.best.f_cubic == 0);
    auto pc = reduce_to_plane(g, C, mc.best.cycles);
    CHECK(pc.steps.empty());
    CHECK(pc.n_u() == 0);
    CHECK(pc.cycles.size() == 10);
    CHECK(pc.checks.ok());
}

TEST_CASE("audit: the eight-cycle G2 subgraph has an articulation point") {
    Graph g = fx::load("g2");
    auto C = fx::cycles(g, fx::G2, {1, 3, 9, 11, 12, 14, 16, 17});
    auto p = edge_load(C, {0, 1, 2, 3, 4, 5, 6, 7}, g.m());
    CHECK(p == std::vector<int>{2, 2, 2, 0, 2, 0, 2, 2, 1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 1});
    auto ck = audit_plane(g, C);
    CHECK_FALSE(ck.no_articulation);
    CHECK_FALSE(ck.ok());

    // the same verdict from the removal oracle on the covered edges
    EdgeSet all(g.m());
    for (const auto& c : C) all |= c.edges;
    std::vector<std::pair<int, int>> es;
    for (int e : all.indices()) es.emplace_back(g.edge(e).u, g.edge(e).v);
    auto sep = oracle::separability(Graph(g.n(), es));
    CHECK(ck.articulation_points == sep.cut_vertices);
}

TEST_CASE("audit: a triangle passes, a bowtie does not") {
    Graph k3 = fx::load("k3");
    auto T = enumerate_isometric_cycles(k3).cycles;
    CHECK(audit_plane(k3, T).ok());
    Graph bow(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto B = enumerate_isometric_cycles(bow).cycles;
    auto ck = audit_plane(bow, B);
    CHECK(ck.connected);
    CHECK(ck.articulation_points == std::vector<int>{2});
    CHECK_FALSE(ck.rotation_closed);
}

TEST_CASE("reduction invariants over Monte Carlo bases") {
    for (const char* name : {"g1", "g2", "g3", "g5", "dodecahedron", "petersen"}) {
        CAPTURE(name);
        Graph g = fx::load(name);
        auto C = enumerate_isometric_cycles(g).cycles;
        auto mc = monte_carlo_basis(g, C, 40, 7);
        std::set<std::vector<int>> seen;
        for (const auto& t : mc.log) {
            if (!seen.insert(t.cycles).second) continue;
            auto pc = reduce_to_plane(g, C, t.cycles);
            replay(g, C, t.cycles, pc, false);
            if (pc.planar) {
                // zero functional means every surviving edge is on at most two cycles
                for (int x : edge_load(C, pc.cycles, g.m())) CHECK(x <= 2);
            }
        }
    }
}

TEST_CASE("rim counted as a cycle deletes whole private paths") {
    Graph g = fx::load("g2");
    auto C = enumerate_isometric_cycles(g).cycles;
    auto mc = monte_carlo_basis(g, C, 300, 1);
    std::set<std::vector<int>> seen;
    int multi = 0;
    for (const auto& t : mc.log) {
        if (!seen.insert(t.cycles).second) continue;
        auto pc = reduce_to_plane(g, C, t.cycles, {true});
        replay(g, C, t.cycles, pc, true);
        for (const auto& st : pc.steps)
            if (st.edges.size() > 1) {
                ++multi;
                // the deleted edges form one path
                std::map<int, int> deg;
                for (int e : st.edges) {
                    ++deg[g.edge(e).u];
                    ++deg[g.edge(e).v];
                }
                int ends = 0;
                for (auto [v, k] : deg) {
                    CHECK(k <= 2);
                    ends += k == 1;
                }
                CHECK(ends == 2);
                CHECK(deg.size() == st.edges.size() + 1);
            }
    }
    CHECK(multi > 0);
}

TEST_CASE("Petersen: no basis gets below two deleted edges") {
    Graph g = fx::load("petersen");
    auto C = enumerate_isometric_cycles(g).cycles;
    auto mc = monte_carlo_basis(g, C, 300, 1);
    std::set<std::vector<int>> seen;
    for (const auto& t : mc.log) {
        if (!seen.insert(t.cycles).second) continue;
        auto pc = reduce_to_plane(g, C, t.cycles);
        if (pc.planar) CHECK(pc.n_u() >= 2);
    }
}

TEST_CASE("G3 unit cycles without the two longest reduce with two deleted edges") {
    Graph g = fx::load("g3");
    auto C = fx::cycles(g, fx::G3);
    auto full = reduce_to_plane(g, C, steepest_descent_basis(g, C).basis.cycles);
    CHECK(full.n_u() == 3);
    for (auto ex : {seed_exclusions(g, C, 2), std::vector<int>{4, 17}}) {
        auto d = steepest_descent_basis(g, C, ex);
        CHECK(d.complete);
        auto pc = reduce_to_plane(g, C, d.basis.cycles);
        CHECK(pc.planar);
        CHECK(pc.n_u() == 2);
        CHECK(pc.checks.ok());
        replay(g, C, d.basis.cycles, pc, false);
    }
}
