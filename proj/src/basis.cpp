#include "topodraw/basis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "topodraw/gf2.hpp"
#include "topodraw/maclane.hpp"

namespace topo {

namespace {

bool covers_all_vertices(const Graph& g, const LoadVector& p) {
    std::vector<char> hit(static_cast<std::size_t>(g.n()), 0);
    for (int e = 0; e < g.m(); ++e)
        if (p[static_cast<std::size_t>(e)] > 0) {
            hit[static_cast<std::size_t>(g.edge(e).u)] = 1;
            hit[static_cast<std::size_t>(g.edge(e).v)] = 1;
        }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

uint64_t bounded(std::mt19937_64& rng, uint64_t bound) {
    // unbiased draw in [0, bound)
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

}  // namespace

BasisCandidate evaluate_basis(const Graph& g, const std::vector<Cycle>& cycles, std::vector<int> ids,
                              std::string method) {
    std::sort(ids.begin(), ids.end());
    BasisCandidate b;
    b.cycles = std::move(ids);
    b.method = std::move(method);
    LoadVector p = edge_load(cycles, b.cycles, g.m());
    b.f_cubic = f_cubic(p);
    b.f_quadratic = f_quadratic(p);
    std::vector<const EdgeSet*> sets;
    for (int i : b.cycles) {
        sets.push_back(&cycles[static_cast<std::size_t>(i)].edges);
        b.sum_of_lengths += cycles[static_cast<std::size_t>(i)].length();
    }
    b.independent = is_independent(sets);
    b.covers_edges = std::all_of(p.begin(), p.end(), [](int x) { return x > 0; });
    b.covers_vertices = covers_all_vertices(g, p);
    return b;
}

bool basis_better(const BasisCandidate& a, const BasisCandidate& b) {
    if (a.f_cubic != b.f_cubic) return a.f_cubic < b.f_cubic;
    if (a.sum_of_lengths != b.sum_of_lengths) return a.sum_of_lengths < b.sum_of_lengths;
    return a.cycles < b.cycles;
}

uint64_t mix_seed(uint64_t seed, uint64_t trial) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<int> trial_order(int k, uint64_t seed, uint64_t trial) {
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(mix_seed(seed, trial));
    for (int i = k - 1; i > 0; --i) {
        auto j = static_cast<int>(bounded(rng, static_cast<uint64_t>(i) + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    return order;
}

MonteCarloResult monte_carlo_basis(const Graph& g, const std::vector<Cycle>& cycles, int64_t trials,
                                   uint64_t seed, int threads) {
    if (trials < 1) throw Error("trials must be >= 1");
    const int target = cyclomatic_number(g);
    const int k = static_cast<int>(cycles.size());
    MonteCarloResult res;
    res.log.resize(static_cast<std::size_t>(trials));

    auto run = [&](int64_t t) {
        auto order = trial_order(k, seed, static_cast<uint64_t>(t));
        Extraction x = extract_independent(cycles, order, target);
        if (x.rank_deficient)
            throw Error("isometric cycles have rank " + std::to_string(x.rank) + " < " + std::to_string(target));
        TrialRecord& r = res.log[static_cast<std::size_t>(t)];
        r.trial = t;
        r.cycles = x.selected;
        std::sort(r.cycles.begin(), r.cycles.end());
        r.f_cubic = f_cubic(edge_load(cycles, r.cycles, g.m()));
        for (int i : r.cycles) r.sum_of_lengths += cycles[static_cast<std::size_t>(i)].length();
    };

    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (threads == 1 || trials < 2) {
        for (int64_t t = 0; t < trials; ++t) run(t);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (int64_t t = w; t < trials; t += threads) run(t);
                } catch (...) {
                    errs[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    // first trial among equals wins, independent of thread count
    const TrialRecord* best = &res.log.front();
    for (const auto& r : res.log)
        if (r.f_cubic < best->f_cubic || (r.f_cubic == best->f_cubic && r.sum_of_lengths < best->sum_of_lengths))
            best = &r;
    res.best = evaluate_basis(g, cycles, best->cycles, "mc");
    res.best.trial = best->trial;
    return res;
}

std::vector<int> seed_exclusions(const Graph& g, const std::vector<Cycle>& cycles, int k) {
    const int target = cyclomatic_number(g);
    if (k < 0 || k > static_cast<int>(cycles.size()) - target)
        throw Error("cannot pre-exclude " + std::to_string(k) + " cycles");
    std::vector<int> ids(cycles.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        int la = cycles[static_cast<std::size_t>(a)].length(), lb = cycles[static_cast<std::size_t>(b)].length();
        if (la != lb) return la > lb;
        return a > b;
    });
    ids.resize(static_cast<std::size_t>(k));
    return ids;
}

DescentResult steepest_descent_basis(const Graph& g, const std::vector<Cycle>& cycles,
                                     const std::vector<int>& exclusions) {
    const int target = cyclomatic_number(g);
    DescentResult res;
    res.excluded = exclusions;
    std::vector<int> pool;
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
        if (std::find(exclusions.begin(), exclusions.end(), i) == exclusions.end()) pool.push_back(i);

    {
        std::vector<const EdgeSet*> sets;
        for (int i : pool) sets.push_back(&cycles[static_cast<std::size_t>(i)].edges);
        int r = gf2_rank(sets);
        if (r < target)
            throw Error("cycle pool has rank " + std::to_string(r) + " < " + std::to_string(target));
    }

    LoadTracker loads(g.m());
    for (int i : pool) loads.add(cycles[static_cast<std::size_t>(i)].edges);
    std::vector<int64_t> prev(cycles.size(), -1);
    while (static_cast<int>(pool.size()) > target) {
        const int64_t f0 = loads.cubic();
        std::vector<const EdgeSet*> sets;
        for (int i : pool) sets.push_back(&cycles[static_cast<std::size_t>(i)].edges);
        std::vector<char> keeps_rank = rank_preserving_removals(sets);

        struct Cand {
            int64_t f, rate;
            int len, id;
        };
        std::vector<Cand> cands;
        DescentRound round;
        round.f_before = f0;
        for (std::size_t pi = 0; pi < pool.size(); ++pi) {
            int c = pool[pi];
            const EdgeSet& es = cycles[static_cast<std::size_t>(c)].edges;
            ++res.evaluations;
            if (!keeps_rank[pi]) continue;
            if (!loads.private_edges(es).empty()) continue;  // would zero an edge
            int64_t f = loads.value_without(es);
            int64_t before = prev[static_cast<std::size_t>(c)] >= 0 ? prev[static_cast<std::size_t>(c)] : f0;
            cands.push_back({f, before - f, es.count(), c});
            round.values.emplace_back(c, f);
        }
        if (cands.empty()) break;
        auto best = std::min_element(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.f != b.f) return a.f < b.f;
            if (a.rate != b.rate) return a.rate > b.rate;
            if (a.len != b.len) return a.len > b.len;
            return a.id > b.id;
        });
        std::fill(prev.begin(), prev.end(), -1);
        for (const auto& c : cands) prev[static_cast<std::size_t>(c.id)] = c.f;

        round.removed = best->id;
        round.f_after = best->f;
        round.rate = best->rate;
        loads.remove(cycles[static_cast<std::size_t>(best->id)].edges);
        pool.erase(std::find(pool.begin(), pool.end(), best->id));
        res.rounds.push_back(std::move(round));
    }
    res.complete = static_cast<int>(pool.size()) == target;
    res.basis = evaluate_basis(g, cycles, pool, "sd");
    return res;
}

BasisCandidate best_contained_basis(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<int>& pool) {
    const int target = cyclomatic_number(g);
    const int k = static_cast<int>(pool.size());
    if (k < target) throw Error("pool smaller than the cyclomatic number");
    if (k - target > 4) throw Error("pool too large for exhaustive basis search");
    // choose which k-target members to drop
    const int drop = k - target;
    std::vector<int> idx(static_cast<std::size_t>(drop));
    std::iota(idx.begin(), idx.end(), 0);
    BasisCandidate best;
    bool have = false;
    while (true) {
        std::vector<int> ids;
        for (int i = 0, j = 0; i < k; ++i) {
            if (j < drop && idx[static_cast<std::size_t>(j)] == i) {
                ++j;
                continue;
            }
            ids.push_back(pool[static_cast<std::size_t>(i)]);
        }
        BasisCandidate b = evaluate_basis(g, cycles, ids, "contained");
        if (b.independent && (!have || basis_better(b, best))) {
            best = b;
            have = true;
        }
        int p = drop - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == k - drop + p) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < drop; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
    if (!have) throw Error("pool contains no basis");
    return best;
}

}  // namespace topo
