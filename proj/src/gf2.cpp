#include "topodraw/gf2.hpp"

namespace topo {

Gf2Eliminator::Gf2Eliminator(int universe)
    : rows_(static_cast<std::size_t>(universe)), has_(static_cast<std::size_t>(universe), 0) {}

EdgeSet Gf2Eliminator::reduce(EdgeSet v) const {
    for (int lo = v.lowest(); lo >= 0; lo = v.lowest()) {
        if (!has_[static_cast<std::size_t>(lo)]) break;
        v ^= rows_[static_cast<std::size_t>(lo)];
    }
    return v;
}

bool Gf2Eliminator::independent_of(const EdgeSet& s) const { return !reduce(s).empty(); }

bool Gf2Eliminator::insert(const EdgeSet& s) {
    EdgeSet v = reduce(s);
    int lo = v.lowest();
    if (lo < 0) return false;
    rows_[static_cast<std::size_t>(lo)] = std::move(v);
    has_[static_cast<std::size_t>(lo)] = 1;
    ++rank_;
    return true;
}

Extraction extract_independent(const std::vector<const EdgeSet*>& sets, int target_rank) {
    Extraction x;
    if (sets.empty()) {
        x.rank_deficient = target_rank > 0;
        return x;
    }
    Gf2Eliminator el(sets.front()->universe());
    for (std::size_t i = 0; i < sets.size() && el.rank() < target_rank; ++i)
        if (el.insert(*sets[i])) x.selected.push_back(static_cast<int>(i));
    x.rank = el.rank();
    x.rank_deficient = x.rank < target_rank;
    return x;
}

Extraction extract_independent(const std::vector<Cycle>& cycles, const std::vector<int>& order, int target_rank) {
    std::vector<const EdgeSet*> sets;
    sets.reserve(order.size());
    for (int i : order) sets.push_back(&cycles[static_cast<std::size_t>(i)].edges);
    Extraction x = extract_independent(sets, target_rank);
    for (int& s : x.selected) s = order[static_cast<std::size_t>(s)];
    return x;
}

std::vector<char> rank_preserving_removals(const std::vector<const EdgeSet*>& sets) {
    const int k = static_cast<int>(sets.size());
    std::vector<char> out(static_cast<std::size_t>(k), 0);
    if (k == 0) return out;
    const int m = sets.front()->universe();
    // rows carry the combination of inputs they came from; a row that reduces
    // to zero is a dependency and every member of it is removable
    std::vector<EdgeSet> row(static_cast<std::size_t>(m)), combo(static_cast<std::size_t>(m));
    std::vector<char> has(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < k; ++i) {
        EdgeSet v = *sets[static_cast<std::size_t>(i)];
        EdgeSet c(k);
        c.set(i);
        int lo = v.lowest();
        while (lo >= 0 && has[static_cast<std::size_t>(lo)]) {
            v ^= row[static_cast<std::size_t>(lo)];
            c ^= combo[static_cast<std::size_t>(lo)];
            lo = v.lowest();
        }
        if (lo >= 0) {
            row[static_cast<std::size_t>(lo)] = std::move(v);
            combo[static_cast<std::size_t>(lo)] = std::move(c);
            has[static_cast<std::size_t>(lo)] = 1;
        } else {
            for (int j : c.indices()) out[static_cast<std::size_t>(j)] = 1;
        }
    }
    return out;
}

int gf2_rank(const std::vector<const EdgeSet*>& sets) {
    if (sets.empty()) return 0;
    Gf2Eliminator el(sets.front()->universe());
    for (const EdgeSet* s : sets) el.insert(*s);
    return el.rank();
}

bool is_independent(const std::vector<const EdgeSet*>& sets) {
    return gf2_rank(sets) == static_cast<int>(sets.size());
}

}  // namespace topo
