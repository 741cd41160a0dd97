#pragma once

#include "obstra/arrangement.hpp"

namespace obstra {

// The face-cover instance behind obs(D): every non-edge of the graph must be
// stabbed by a chosen face of the planarization.
struct CoverInstance {
    Arrangement arr;
    std::vector<Edge> nonedges;
    std::vector<std::vector<int>> hits; // per non-edge: stabbing face ids, ascending
};

CoverInstance build_cover_instance(const Drawing& d);

struct CoverResult {
    int size = 0;
    std::vector<int> faces; // chosen face ids, ascending
    bool optimal = true;    // false when the node budget cut the search short
    long nodes = 0;         // branch-and-bound nodes visited
};

// Minimum hitting set over faces. Exact mode runs branch and bound (greedy
// upper bound, disjoint-non-edge lower bound, branching on the uncovered
// non-edge with the fewest candidates, faces in index order); with a
// nonnegative budget it may stop early and report optimal = false. Greedy
// mode returns the greedy cover directly.
CoverResult min_face_cover(const CoverInstance& inst, bool exact, long budget = -1);

// Materialize chosen faces as obstacle polygons strictly inside them, each
// hitting every non-edge assigned to its face; the result passes
// is_obstacle_representation against the drawing's graph.
Scene faces_to_obstacles(const CoverInstance& inst, const std::vector<int>& chosen);

// One polygon strictly inside face f of the arrangement that intersects every
// segment in targets and stays clear of all arcs and nodes.
Polygon materialize_face(const Arrangement& arr, int f, const std::vector<Segment>& targets);

} // namespace obstra
