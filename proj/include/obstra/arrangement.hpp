#pragma once

#include "obstra/drawing.hpp"

namespace obstra {

// Maximal crossing-free piece of a drawing edge, between two nodes.
struct Arc {
    int a, b;  // node ids
    int edge;  // index into drawing.graph.edges
};

// One face of the planarization. Bounded faces have a counterclockwise outer
// walk; the unbounded face has an empty outer walk. Holes are the clockwise
// (or zero-area, for tree-like components) walks of components enclosed by
// this face. Walks may repeat nodes where the boundary pinches.
struct Face {
    std::vector<int> outer;
    std::vector<std::vector<int>> holes;
    std::vector<int> isolated; // degree-0 nodes strictly inside
    bool bounded = true;
    std::vector<int> nodes_sorted; // unique boundary node ids, ascending
    std::vector<int> arcs_sorted;  // boundary arc ids with multiplicity, ascending
};

// Planarization of a straight-line drawing: drawing vertices plus pairwise
// edge crossings as nodes, split edges as arcs, and the induced faces.
struct Arrangement {
    Drawing drawing;
    std::vector<Point> nodes;     // sorted lexicographically
    std::vector<int> vertex_node; // drawing vertex -> node id
    std::vector<Arc> arcs;
    std::vector<std::pair<int, int>> arc_faces; // per arc: face left of a->b, of b->a
    std::vector<Face> faces;                    // deterministic order
    int unbounded = -1;                         // index into faces
    int components = 0;                         // of the segment union, isolated nodes included

    Polygon walk_polygon(const std::vector<int>& walk) const;
    Segment arc_segment(int arc) const;
    bool point_on_union(const Point& p) const; // on any arc or node
    // Face whose open region contains p, or -1 if p lies on the union.
    int face_of_point(const Point& p) const;
    // Faces whose open region meets the open segment s.
    std::vector<int> stabbed_faces(const Segment& s) const;
};

// Rejects degenerate drawings (collinear positions, overlapping edges, three
// or more edges through a common point) with ErrorKind::invariant.
Arrangement planarize(const Drawing& d);

} // namespace obstra
