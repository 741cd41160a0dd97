#pragma once

#include "obstra/geometry.hpp"
#include "obstra/graph.hpp"

namespace obstra {

// Straight-line drawing: graph plus one point per vertex.
struct Drawing {
    Graph graph;
    std::vector<Point> points;

    Drawing() = default;
    Drawing(Graph g, std::vector<Point> pts); // validates counts and distinctness

    Segment edge_segment(const Edge& e) const {
        return {points[e.first], points[e.second]};
    }
};

// Labeled points, an intended graph, and disjoint simple polygonal obstacles.
//
// Default visibility is free-space: u,v see each other when the closed segment
// uv meets no obstacle (boundary contact blocks). When enclosure > 0 the first
// `enclosure` obstacles are walls: visibility additionally requires the closed
// segment to lie strictly inside a wall's interior, and such scenes may place
// points collinearly (the wall kills the spare sight lines general position
// would otherwise guard).
struct Scene {
    Drawing drawing; // the graph records the intended visibility graph
    std::vector<Polygon> obstacles;
    int enclosure = 0;

    Scene() = default;
    Scene(Drawing d, std::vector<Polygon> obs, int enclosure_ = 0);

    const std::vector<Point>& points() const { return drawing.points; }
};

// Validates polygon simplicity, pairwise disjointness (boundary contact
// counts as overlap), that no point lies in or on an obstacle, and general
// position of the points. Enclosure scenes instead require every point
// strictly inside an enclosure obstacle (blockers may nest inside walls) and
// skip the general position check. Throws ErrorKind::invariant on violation.
void validate_scene(const Scene& s);

} // namespace obstra
