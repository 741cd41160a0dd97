#pragma once

#include "obstra/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace obstra {

struct Point {
    Rat x, y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic (x, then y); used for canonical node ordering.
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

struct Segment {
    Point a, b;
};

// Vertices in order; simple polygons are stored counterclockwise.
using Polygon = std::vector<Point>;

// Sign of the turn a->b->c: +1 left (counterclockwise), 0 collinear, -1 right.
int orient(const Point& a, const Point& b, const Point& c);

// cross(b - a, c - a) as an exact scalar.
Rat cross3(const Point& a, const Point& b, const Point& c);

// True if p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

struct SegIntersection {
    enum class Kind { empty, point, overlap } kind = Kind::empty;
    Point p;     // the point, or overlap start
    Point q;     // overlap end (kind == overlap only)
};

// Exact intersection of two closed segments.
SegIntersection segments_intersect(const Segment& s, const Segment& t);

// Intersection point of the supporting lines of s and t; empty if parallel.
std::optional<Point> line_intersection(const Segment& s, const Segment& t);

enum class Containment { inside, boundary, outside };

// Point vs. closed simple polygon (even-odd rule; works for the degenerate
// zero-area walk polygons produced by tree-like arrangement cycles).
Containment point_in_polygon(const Point& p, const Polygon& poly);

// True iff the closed segment meets the closed region bounded by the polygon.
// Touching the boundary counts as a hit.
bool segment_hits_polygon(const Segment& s, const Polygon& poly);

// True iff both endpoints are strictly interior and the segment does not meet
// the boundary at all (used for visibility inside an enclosing polygon).
bool segment_strictly_inside(const Segment& s, const Polygon& poly);

Rat polygon_area2(const Polygon& poly); // signed doubled area, CCW positive

bool polygon_is_simple(const Polygon& poly);
bool polygon_is_convex(const Polygon& poly); // strictly convex, no collinear triples

// True iff no three points coincide or are collinear.
bool is_general_position(const std::vector<Point>& pts);

// Counterclockwise hull of >= 3 points in general position; collinear inputs rejected.
Polygon convex_hull(const std::vector<Point>& pts);

// Number of edges on the chain from the leftmost to the rightmost vertex going
// over the top of a strictly convex polygon. P is k-cap-free iff this is <= k-2.
int upper_chain_edge_count(const Polygon& poly);

// Indices of the upper chain, left to right. Leftmost vertex = min x (tie: max y),
// rightmost = max x (tie: max y).
std::vector<int> upper_chain_indices(const Polygon& poly);
std::vector<int> lower_chain_indices(const Polygon& poly);

// Audit helper: counts of (convex, reflex) vertices of a simple polygon.
std::pair<int, int> polygon_vertex_classes(const Polygon& poly);

// True iff ray from origin through dir (dir != 0) meets the closed segment.
bool ray_hits_segment(const Point& origin, const Point& dir, const Segment& s);

struct BBox {
    Rat xmin, ymin, xmax, ymax;
    void expand(const Point& p);
    bool disjoint(const BBox& o) const;
};

BBox bbox_of(const std::vector<Point>& pts);

} // namespace obstra
