#pragma once
// Gaussian elimination over GF(2) on edge sets, pivoting on the lowest edge.

#include <vector>

#include "topodraw/edgeset.hpp"

namespace topo {

class Gf2Eliminator {
public:
    explicit Gf2Eliminator(int universe);
    // reduces a copy of s; true and stores it if independent of what's stored
    bool insert(const EdgeSet& s);
    bool independent_of(const EdgeSet& s) const;
    int rank() const { return rank_; }

private:
    EdgeSet reduce(EdgeSet v) const;
    std::vector<EdgeSet> rows_;  // indexed by pivot edge
    std::vector<char> has_;
    int rank_ = 0;
};

struct Extraction {
    std::vector<int> selected;  // positions in the input list (table positions for the order overload)
    int rank = 0;
    bool rank_deficient = false;
};

// Left-to-right greedy, stopping once target_rank rows are taken.
Extraction extract_independent(const std::vector<const EdgeSet*>& sets, int target_rank);
Extraction extract_independent(const std::vector<Cycle>& cycles, const std::vector<int>& order, int target_rank);

// flags[i] true iff dropping sets[i] keeps the rank (i lies on some dependency)
std::vector<char> rank_preserving_removals(const std::vector<const EdgeSet*>& sets);

int gf2_rank(const std::vector<const EdgeSet*>& sets);
bool is_independent(const std::vector<const EdgeSet*>& sets);

}  // namespace topo
