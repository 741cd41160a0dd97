#include "obstra/drawing.hpp"

#include "obstra/error.hpp"

#include <set>

namespace obstra {

Drawing::Drawing(Graph g, std::vector<Point> pts)
    : graph(std::move(g)), points(std::move(pts)) {
    if (int(points.size()) != graph.n)
        fail(ErrorKind::invariant, "drawing: point count differs from vertex count");
    std::set<Point> seen(points.begin(), points.end());
    if (int(seen.size()) != graph.n)
        fail(ErrorKind::invariant, "drawing: positions pairwise distinct violated");
}

Scene::Scene(Drawing d, std::vector<Polygon> obs, int enclosure_)
    : drawing(std::move(d)), obstacles(std::move(obs)), enclosure(enclosure_) {
    if (enclosure < 0 || enclosure > int(obstacles.size()))
        fail(ErrorKind::invariant, "scene: enclosure count out of range");
}

namespace {

bool boundaries_touch(const Polygon& a, const Polygon& b) {
    size_t n = a.size(), m = b.size();
    for (size_t i = 0; i < n; ++i) {
        Segment ea{a[i], a[(i + 1) % n]};
        for (size_t j = 0; j < m; ++j) {
            Segment eb{b[j], b[(j + 1) % m]};
            if (segments_intersect(ea, eb).kind != SegIntersection::Kind::empty) return true;
        }
    }
    return false;
}

// With non-touching boundaries, containment is decided by any single vertex.
bool polygon_inside(const Polygon& inner, const Polygon& outer) {
    return point_in_polygon(inner[0], outer) == Containment::inside;
}

} // namespace

void validate_scene(const Scene& s) {
    for (const auto& poly : s.obstacles) {
        if (poly.size() < 3) fail(ErrorKind::invariant, "scene: obstacle with fewer than 3 vertices");
        if (!polygon_is_simple(poly)) fail(ErrorKind::invariant, "scene: obstacle polygon not simple");
    }
    if (s.enclosure == 0 && !is_general_position(s.points()))
        fail(ErrorKind::invariant, "scene: points not in general position");

    int k = s.enclosure;
    int h = int(s.obstacles.size());
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            if (boundaries_touch(s.obstacles[i], s.obstacles[j]))
                fail(ErrorKind::invariant, "scene: obstacle boundaries intersect");
            bool i_enc = i < k, j_enc = j < k;
            if (i_enc && !j_enc) {
                // blockers may sit inside an enclosure obstacle
                if (polygon_inside(s.obstacles[i], s.obstacles[j]))
                    fail(ErrorKind::invariant, "scene: enclosure obstacle nested in blocker");
            } else if (polygon_inside(s.obstacles[i], s.obstacles[j]) ||
                       polygon_inside(s.obstacles[j], s.obstacles[i])) {
                fail(ErrorKind::invariant, "scene: nested obstacles");
            }
        }

    for (const auto& p : s.points()) {
        for (int i = k; i < h; ++i)
            if (point_in_polygon(p, s.obstacles[i]) != Containment::outside)
                fail(ErrorKind::invariant, "scene: point inside or on an obstacle");
        if (k > 0) {
            bool enclosed = false;
            for (int i = 0; i < k && !enclosed; ++i)
                enclosed = point_in_polygon(p, s.obstacles[i]) == Containment::inside;
            if (!enclosed)
                fail(ErrorKind::invariant, "scene: point outside the enclosure");
        }
    }
}

} // namespace obstra
