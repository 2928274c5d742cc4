#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "topodraw/isometric.hpp"
#include "topodraw/maclane.hpp"

using namespace topo;

namespace {

std::vector<int> all_ids(std::size_t k) {
    std::vector<int> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<int>(i);
    return v;
}

// direct sums over a load vector, written out independently of the library
int64_t quad(const LoadVector& p) {
    int64_t s = 0;
    for (int x : p) s += static_cast<int64_t>(x) * x - 3 * x + 2;
    return s;
}
int64_t cube(const LoadVector& p) {
    int64_t s = 0;
    for (int x : p) s += static_cast<int64_t>(x) * (x - 1) * (x - 2);
    return s;
}

}  // namespace

TEST_CASE("G1 isometric cycles: F2 = 40, F3 = 132") {
    Graph g = fx::load("g1");
    auto C = fx::cycles(g, fx::G1);
    auto p = edge_load(C, all_ids(C.size()), g.m());
    CHECK(f_quadratic(p) == 40);
    CHECK(f_cubic(p) == 132);
}

TEST_CASE("G1 basis edge loads") {
    Graph g = fx::load("g1");
    auto C = fx::cycles(g, fx::G1);
    std::vector<int> ids;
    for (int i : fx::G1_BASIS) ids.push_back(i - 1);
    CHECK(edge_load(C, ids, g.m()) == fx::G1_BASIS_LOAD);
    CHECK(format_load(edge_load(C, ids, g.m())).rfind("<3, 1, 1, 1, 3,", 0) == 0);
}

TEST_CASE("G2 isometric cycles: loads, F3 = 426 and removal values") {
    Graph g = fx::load("g2");
    auto C = fx::cycles(g, fx::G2);
    auto ids = all_ids(C.size());
    auto p = edge_load(C, ids, g.m());
    CHECK(p == fx::G2_LOAD);
    CHECK(f_cubic(p) == 426);
    CHECK(f_quadratic(p) == quad(p));
    const std::vector<int64_t> drop = {354, 366, 390, 354, 312, 312, 270, 336, 408,
                                       408, 372, 300, 258, 336, 360, 408, 420};
    for (int c = 0; c < 17; ++c) CHECK(removal_value(C, ids, c, g.m()) == drop[static_cast<std::size_t>(c)]);
    CHECK_THROWS_AS(removal_value(C, {0, 1}, 5, g.m()), Error);
}

TEST_CASE("loads of nothing, of one cycle, and vertex loads") {
    Graph g = fx::load("g1");
    auto C = fx::cycles(g, fx::G1);
    auto z = edge_load(C, {}, g.m());
    CHECK(z == LoadVector(20, 0));
    CHECK(f_quadratic(z) == 40);  // 2 per uncovered edge
    CHECK(f_cubic(z) == 0);
    CHECK(removal_value(C, {4}, 4, g.m()) == 0);
    auto pv = vertex_load(g, C, {0, 2});
    CHECK(pv == std::vector<int>{2, 2, 1, 0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("all loads 2 give zero for both functionals") {
    LoadVector p(12, 2);
    CHECK(f_quadratic(p) == 0);
    CHECK(f_cubic(p) == 0);
    CHECK(cubic_term(1) == 0);
    CHECK(cubic_term(3) == 6);
}

TEST_CASE("LoadTracker matches recomputation") {
    Graph g = fx::load("g31");
    auto C = enumerate_isometric_cycles(g).cycles;
    std::mt19937_64 rng(5);
    LoadTracker t(g.m());
    std::vector<int> in;
    for (int step = 0; step < 2000; ++step) {
        int c = static_cast<int>(rng() % C.size());
        auto it = std::find(in.begin(), in.end(), c);
        if (it == in.end()) {
            t.add(C[static_cast<std::size_t>(c)].edges);
            in.push_back(c);
        } else {
            int64_t predicted = t.value_without(C[static_cast<std::size_t>(c)].edges);
            t.remove(C[static_cast<std::size_t>(c)].edges);
            in.erase(it);
            CHECK(t.cubic() == predicted);
        }
        auto p = edge_load(C, in, g.m());
        REQUIRE(t.loads() == p);
        CHECK(t.cubic() == cube(p));
    }
    for (int c : in) {
        auto priv = t.private_edges(C[static_cast<std::size_t>(c)].edges);
        for (int e : C[static_cast<std::size_t>(c)].edges.indices())
            CHECK((std::find(priv.begin(), priv.end(), e) != priv.end()) == (t.load(e) == 1));
    }
}
