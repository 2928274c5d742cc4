#include "doctest.h"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "topodraw/isometric.hpp"
#include "topodraw/kernels.hpp"
#include "topodraw/maclane.hpp"

using namespace topo;
namespace K = topo::kernels;

namespace {

std::vector<std::uint64_t> words(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng();
    return w;
}

// plain loop, no library code
std::size_t count_naive(const std::vector<std::uint64_t>& a) {
    std::size_t s = 0;
    for (auto x : a)
        for (int b = 0; b < 64; ++b) s += (x >> b) & 1u;
    return s;
}

}  // namespace

TEST_CASE("scalar kernels against a bit loop") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 0; n < 40; ++n) {
        auto a = words(rng, n), b = words(rng, n);
        CHECK(K::scalar::popcount(a.data(), n) == count_naive(a));
        std::vector<std::uint64_t> ab(n);
        for (std::size_t i = 0; i < n; ++i) ab[i] = a[i] & b[i];
        CHECK(K::scalar::and_popcount(a.data(), b.data(), n) == count_naive(ab));
        auto x = a;
        K::scalar::xor_into(x.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == (a[i] ^ b[i]));
    }
}

TEST_CASE("avx2 kernels equal scalar ones") {
    if (!K::avx2_supported()) {
        MESSAGE("no AVX2 on this machine");
        return;
    }
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 500; ++rep) {
        std::size_t n = rng() % 70;
        auto a = words(rng, n), b = words(rng, n);
        if (rep % 5 == 0)
            for (auto& w : b) w = 0;
        REQUIRE(K::avx2::popcount(a.data(), n) == K::scalar::popcount(a.data(), n));
        REQUIRE(K::avx2::and_popcount(a.data(), b.data(), n) == K::scalar::and_popcount(a.data(), b.data(), n));
        auto x = a, y = a;
        K::avx2::xor_into(x.data(), b.data(), n);
        K::scalar::xor_into(y.data(), b.data(), n);
        REQUIRE(x == y);
    }
    // unaligned tails
    std::vector<std::uint64_t> big = words(rng, 67);
    for (std::size_t off = 0; off < 4; ++off)
        CHECK(K::avx2::popcount(big.data() + off, 63) == K::scalar::popcount(big.data() + off, 63));
}

TEST_CASE("dispatch and override") {
    const K::Isa start = K::active_isa();
    const char* env = std::getenv("TOPODRAW_ISA");
    if (env && std::strcmp(env, "scalar") == 0) CHECK(start == K::Isa::scalar);
    else CHECK(start == (K::avx2_supported() ? K::Isa::avx2 : K::Isa::scalar));
    CHECK(K::set_isa(K::Isa::scalar));
    CHECK(K::active_isa() == K::Isa::scalar);
    CHECK(K::set_isa(K::Isa::avx2) == K::avx2_supported());
    CHECK(std::string(K::isa_name(K::Isa::scalar)) == "scalar");
    CHECK(std::string(K::isa_name(K::Isa::avx2)) == "avx2");
    K::set_isa(start);
}

TEST_CASE("library results do not depend on the kernel") {
    Graph g = fx::load("g31");
    const K::Isa start = K::active_isa();
    std::vector<std::vector<std::vector<int>>> runs;
    std::vector<int64_t> f;
    for (K::Isa isa : {K::Isa::scalar, K::Isa::avx2}) {
        if (!K::set_isa(isa)) continue;
        auto C = enumerate_isometric_cycles(g).cycles;
        std::vector<std::vector<int>> sets;
        std::vector<int> ids;
        for (std::size_t i = 0; i < C.size(); ++i) {
            sets.push_back(C[i].edges.indices());
            ids.push_back(static_cast<int>(i));
        }
        runs.push_back(sets);
        f.push_back(f_cubic(edge_load(C, ids, g.m())));
    }
    K::set_isa(start);
    for (std::size_t i = 1; i < runs.size(); ++i) {
        CHECK(runs[i] == runs[0]);
        CHECK(f[i] == f[0]);
    }
}
