#pragma once
// Rims, rotation systems, face tracing and chord re-insertion over the rim.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

namespace topo {

struct Rim {
    EdgeSet edges;                          // ring sum of the faces
    std::vector<std::vector<int>> loops;    // vertex order per disjoint simple loop, by lowest edge
    bool simple = false;                    // exactly one simple loop
    bool decomposable = false;              // every rim vertex has rim degree 2
    std::vector<int> vertices;              // order of loops[0] when simple
    std::vector<int> arcs;                  // edge ids along vertices, arcs[i] joins vertices[i], vertices[i+1]
};

Rim compute_rim(const Graph& g, const std::vector<const EdgeSet*>& faces);
Rim compute_rim(const Graph& g, const std::vector<Cycle>& faces);

struct RotationSystem {
    // per vertex, cyclic neighbor order starting at the smallest neighbor;
    // empty for vertices outside the configuration
    std::vector<std::vector<int>> order;
    bool closed = false;
    std::string failure;
};

// faces are the inner cycles; the rim must be simple
RotationSystem rotation_system(const Graph& g, const std::vector<Cycle>& faces, const Rim& rim);

// Orbits of darts under u->v => v->sigma_v(u), as edge sets.
std::vector<EdgeSet> trace_faces(const Graph& g, const RotationSystem& rot);

struct EmbeddingCheck {
    bool closed = false;
    bool faces_match = false;  // traced faces == faces + rim
    bool euler = false;        // n' - m' + f == 2
    int traced = 0;
    bool ok() const { return closed && faces_match && euler; }
};
EmbeddingCheck check_embedding(const Graph& g, const std::vector<Cycle>& faces, const Rim& rim,
                               const RotationSystem& rot);

struct ChordProjection {
    int edge = -1;
    int a = -1, b = -1;          // a comes first along the rim traversal
    std::vector<int> arc1, arc2;  // edge ids; arc1 runs forward from a to b
    std::vector<int> arc1_vertices, arc2_vertices;
    int shorter() const { return static_cast<int>(std::min(arc1.size(), arc2.size())); }
};

// throws GraphError when an endpoint is off the rim or the rim is not simple
ChordProjection project_chord(const Rim& rim, int a, int b, int edge = -1);
// shared endpoint -> false
bool chords_cross(const ChordProjection& x, const ChordProjection& y);

struct ChordSelection {
    std::vector<int> chords;          // edge ids considered
    std::vector<int> crossings;       // initial crossing count per chord
    std::vector<int> kept;            // ascending edge ids
    std::vector<int> discarded;       // greedy: in discard order
    bool exact = false;
};

// greedy: drop the chord with the most crossings, ties by higher edge id;
// exact: maximum non-crossing subset via interval DP
ChordSelection select_noncrossing(const std::vector<ChordProjection>& chords, bool exact = false);

struct AddedCycle {
    int chord = -1;
    Cycle cycle;
    int split_face = -1;  // index into the final face list that was split, -1 for rim chords
};

struct Stage3Result {
    Rim rim_before;
    std::vector<ChordProjection> projections;  // chords with both ends on the rim
    ChordSelection selection;
    std::vector<int> interior_chords;          // unused edges with an end off the rim
    std::vector<AddedCycle> added;
    std::vector<int> still_deleted;
    std::vector<Cycle> faces;                  // final inner faces
    Rim rim_after;
    int64_t f_cubic = 0;
    bool rotation_closed = false;
    int surviving_edges = 0;
};

Stage3Result reinsert_chords(const Graph& g, const std::vector<Cycle>& faces, bool exact = false);

std::string format_rotation(const RotationSystem& rot);
std::string to_dot(const Graph& g, const std::vector<Cycle>& faces, const RotationSystem& rot);

}  // namespace topo
