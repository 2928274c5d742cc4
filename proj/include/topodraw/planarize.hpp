#pragma once
// Stage 2: Euler-rule cycle removals down to a zero cubic functional, and
// the structural audit of the result.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/embed.hpp"
#include "topodraw/graph.hpp"

namespace topo {

struct RemovalStep {
    int cycle = -1;
    std::vector<int> edges;  // deleted edges (one unless the rim counts as a cycle)
    int64_t f_before = 0;
    int64_t f_after = 0;
    int64_t rate = 0;
};

struct PlaneChecks {
    bool connected = false;
    bool no_articulation = false;
    bool rotation_closed = false;
    std::vector<int> articulation_points;
    std::string rotation_failure;
    bool ok() const { return connected && no_articulation && rotation_closed; }
};

struct PlaneConfiguration {
    std::vector<int> cycles;         // positions into the cycle table, ascending
    std::vector<int> removed_edges;  // in removal order
    int n_u() const { return static_cast<int>(removed_edges.size()); }
    int64_t f_cubic = 0;
    bool planar = false;             // F reached 0
    std::vector<RemovalStep> steps;
    Rim rim;
    RotationSystem rotation;
    PlaneChecks checks;
};

struct ReduceOptions {
    // a cycle whose load-1 edges form one path may go, deleting the whole path
    bool count_rim_as_cycle = false;
};

// The single load-1 edge of c, when exactly one exists and dropping c keeps
// every vertex covered.
std::optional<int> euler_deletable(const Graph& g, const std::vector<Cycle>& cycles,
                                   const std::vector<int>& subset, int c);
std::optional<std::vector<int>> deletable_edges(const Graph& g, const std::vector<Cycle>& cycles,
                                                const std::vector<int>& subset, int c,
                                                const ReduceOptions& opt = {});

PlaneConfiguration reduce_to_plane(const Graph& g, const std::vector<Cycle>& cycles,
                                   const std::vector<int>& basis, const ReduceOptions& opt = {});

// connectivity and articulation points of the covered subgraph, rotation closure
PlaneChecks audit_plane(const Graph& g, const std::vector<Cycle>& faces, Rim* rim_out = nullptr,
                        RotationSystem* rot_out = nullptr);
void audit_configuration(const Graph& g, const std::vector<Cycle>& cycles, PlaneConfiguration& config);

std::vector<Cycle> select_cycles(const std::vector<Cycle>& cycles, const std::vector<int>& ids);

}  // namespace topo
