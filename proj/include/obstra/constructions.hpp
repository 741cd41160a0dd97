#pragma once

#include "obstra/arrangement.hpp"
#include "obstra/drawing.hpp"

#include <optional>

namespace obstra {

// A vertex cover plus the partition of the remaining vertices into types: two
// outside vertices share a type iff they have the same neighborhood (always a
// subset of the cover, since the cover meets every edge).
struct VcDecomposition {
    std::vector<int> cover;                  // ascending
    std::vector<std::vector<int>> types;     // members ascending, one entry per nonempty type
    std::vector<std::vector<int>> type_nbhd; // per type: its neighborhood, ascending
};

// Bounded search tree branching on an endpoint of an uncovered edge; returns
// a cover of size <= k, or nullopt when none exists.
std::optional<std::vector<int>> vertex_cover(const Graph& g, int k);

// Exact minimum cover by increasing k.
std::vector<int> minimum_vertex_cover(const Graph& g);

// Groups the vertices outside the cover by neighborhood. Types are ordered by
// their neighborhood vectors. Rejects inputs where cover misses an edge.
VcDecomposition decompose_by_cover(const Graph& g, std::vector<int> cover);

// Scene whose visibility graph is exactly g, using at most
// 1 + C(k,2) + k*2^k obstacles for a cover of size k: cover vertices on a
// short circular arc high above, the rest in per-type slots on a shallow
// convex curve, one comb obstacle blocking every sight line along the curve,
// a tiny blocker per non-adjacent cover pair, and a near-point blocker per
// (type, non-adjacent cover vertex). All separations are certified by the
// exact visibility checker; scales shrink geometrically until it passes.
Scene vc_representation(const Graph& g, const std::vector<int>& cover);

// One obstacle per face of the planarization of a straight-line drawing of g
// (each face shrunk to clear its boundary), so every non-edge is blocked
// inside each face it crosses while drawn edges stay unobstructed. Positions
// are sampled as random general-position integers when not supplied. Total
// obstacle corners stay within 32*(m^2+n) for connected graphs.
Scene planarization_representation(const Graph& g, std::vector<Point> positions = {},
                                   unsigned long seed = 1);

// Quadratic-lower-bound drawing: m = n/2 points p_1..p_m form a cup with
// x(p_i) = i, each y chosen by a doubling search so that (1) crossings among
// the earlier segments lie left of the new segment to p_i exactly when left
// of the vertical through p_i, (2) no point sits below the leftmost top edge
// of any face whose upper chain has two edges, and (3) no crossing lies on a
// vertical through a point. Shadow points q_i sit epsilon below p_i; all
// segments are drawn except those between even-indexed shadows, and epsilon
// halves until the order type is stable and both face claims verify.
struct LowerBoundDrawing {
    int m = 0;
    std::vector<Point> p; // drawing ids 0..m-1
    std::vector<Rat> y;   // y(p_i)
    std::vector<Point> q; // drawing ids m..2m-1
    Rat epsilon;
    Drawing drawing;
    std::vector<Edge> X; // omitted even-even shadow pairs, drawing ids
};

// n >= 4; odd n extends the n-1 drawing with one far isolated vertex.
LowerBoundDrawing lower_bound_drawing(int n);

// Complete-graph drawing on the cup points alone.
Drawing cup_complete_drawing(const std::vector<Point>& p);

// Every bounded face is a convex polygon bounded from above by at most two
// segments (collinear walk corners merged first).
bool verify_cap_claim(const Arrangement& cup_arr);

// Every face of the full drawing meets at most two of the X segments.
bool verify_nonedge_claim(const LowerBoundDrawing& L);

} // namespace obstra
