#include "obstra/geometry.hpp"

#include "obstra/error.hpp"

#include <algorithm>

namespace obstra {

Rat cross3(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient(const Point& a, const Point& b, const Point& c) {
    return cross3(a, b, c).sign();
}

bool on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
           min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

std::optional<Point> line_intersection(const Segment& s, const Segment& t) {
    Point r = s.b - s.a, d = t.b - t.a;
    Rat denom = r.x * d.y - r.y * d.x;
    if (denom.sign() == 0) return std::nullopt;
    Point w = t.a - s.a;
    Rat u = (w.x * d.y - w.y * d.x) / denom;
    return Point{s.a.x + u * r.x, s.a.y + u * r.y};
}

SegIntersection segments_intersect(const Segment& s, const Segment& t) {
    int d1 = orient(s.a, s.b, t.a);
    int d2 = orient(s.a, s.b, t.b);
    int d3 = orient(t.a, t.b, s.a);
    int d4 = orient(t.a, t.b, s.b);

    if (d1 == 0 && d2 == 0) {
        // Collinear: intersect as intervals along the dominant axis.
        bool by_x = s.a.x != s.b.x;
        auto key = [&](const Point& p) { return by_x ? p.x : p.y; };
        Point slo = s.a, shi = s.b, tlo = t.a, thi = t.b;
        if (key(shi) < key(slo)) std::swap(slo, shi);
        if (key(thi) < key(tlo)) std::swap(tlo, thi);
        Point lo = key(slo) < key(tlo) ? tlo : slo;
        Point hi = key(shi) < key(thi) ? shi : thi;
        if (key(hi) < key(lo)) return {};
        if (!on_segment(lo, s) || !on_segment(hi, s) || !on_segment(lo, t) || !on_segment(hi, t))
            return {}; // degenerate operand off the other's line
        if (lo == hi) return {SegIntersection::Kind::point, lo, lo};
        return {SegIntersection::Kind::overlap, lo, hi};
    }

    if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0)) return {};
    if ((d3 > 0 && d4 > 0) || (d3 < 0 && d4 < 0)) return {};

    // Not collinear and the closed segments meet: the point is unique.
    if (d1 == 0) return {SegIntersection::Kind::point, t.a, t.a};
    if (d2 == 0) return {SegIntersection::Kind::point, t.b, t.b};
    if (d3 == 0) return {SegIntersection::Kind::point, s.a, s.a};
    if (d4 == 0) return {SegIntersection::Kind::point, s.b, s.b};
    auto p = line_intersection(s, t);
    return {SegIntersection::Kind::point, *p, *p};
}

Containment point_in_polygon(const Point& p, const Polygon& poly) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e{poly[i], poly[(i + 1) % n]};
        if (e.a == e.b ? p == e.a : on_segment(p, e)) return Containment::boundary;
    }
    // Even-odd rule with a rightward ray; the (u.y > p.y) != (v.y > p.y) filter
    // makes vertices on the ray count once per proper crossing.
    bool in = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& u = poly[i];
        const Point& v = poly[(i + 1) % n];
        if ((u.y > p.y) != (v.y > p.y)) {
            Rat xint = u.x + (p.y - u.y) * (v.x - u.x) / (v.y - u.y);
            if (xint > p.x) in = !in;
        }
    }
    return in ? Containment::inside : Containment::outside;
}

bool segment_hits_polygon(const Segment& s, const Polygon& poly) {
    if (point_in_polygon(s.a, poly) != Containment::outside) return true;
    if (point_in_polygon(s.b, poly) != Containment::outside) return true;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e{poly[i], poly[(i + 1) % n]};
        if (segments_intersect(s, e).kind != SegIntersection::Kind::empty) return true;
    }
    return false;
}

bool segment_strictly_inside(const Segment& s, const Polygon& poly) {
    if (point_in_polygon(s.a, poly) != Containment::inside) return false;
    if (point_in_polygon(s.b, poly) != Containment::inside) return false;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e{poly[i], poly[(i + 1) % n]};
        if (segments_intersect(s, e).kind != SegIntersection::Kind::empty) return false;
    }
    return true;
}

Rat polygon_area2(const Polygon& poly) {
    Rat s(0);
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

bool polygon_is_simple(const Polygon& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i)
        if (poly[i] == poly[(i + 1) % n]) return false;
    for (size_t i = 0; i < n; ++i) {
        Segment ei{poly[i], poly[(i + 1) % n]};
        for (size_t j = i + 1; j < n; ++j) {
            Segment ej{poly[j], poly[(j + 1) % n]};
            auto r = segments_intersect(ei, ej);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges may share exactly their common endpoint.
                if (r.kind != SegIntersection::Kind::point) return false;
                Point shared = (j == i + 1) ? poly[j] : poly[0];
                if (r.p != shared) return false;
            } else if (r.kind != SegIntersection::Kind::empty) {
                return false;
            }
        }
    }
    return true;
}

bool polygon_is_convex(const Polygon& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    int want = 0;
    for (size_t i = 0; i < n; ++i) {
        int o = orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
        if (o == 0) return false;
        if (want == 0) want = o;
        else if (o != want) return false;
    }
    return true;
}

bool is_general_position(const std::vector<Point>& pts) {
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) return false;
            for (size_t k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

Polygon convex_hull(const std::vector<Point>& pts) {
    if (pts.size() < 3) fail(ErrorKind::invariant, "convex hull needs at least 3 points");
    std::vector<Point> p = pts;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    size_t n = p.size();
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (size_t i = n - 1, lo = k + 1; i-- > 0;) { // upper chain
        while (k >= lo && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) fail(ErrorKind::invariant, "points are collinear, hull degenerate");
    return h;
}

namespace {

// Leftmost: min x, tie max y. Rightmost: max x, tie max y. The ties make the
// chain skip vertical extreme edges, so a unit square has a one-edge top chain.
size_t top_leftmost(const Polygon& poly) {
    size_t best = 0;
    for (size_t i = 1; i < poly.size(); ++i) {
        if (poly[i].x < poly[best].x ||
            (poly[i].x == poly[best].x && poly[i].y > poly[best].y))
            best = i;
    }
    return best;
}

size_t top_rightmost(const Polygon& poly) {
    size_t best = 0;
    for (size_t i = 1; i < poly.size(); ++i) {
        if (poly[i].x > poly[best].x ||
            (poly[i].x == poly[best].x && poly[i].y > poly[best].y))
            best = i;
    }
    return best;
}

Polygon ccw_copy(const Polygon& poly) {
    if (!polygon_is_convex(poly)) fail(ErrorKind::invariant, "polygon not strictly convex");
    Polygon p = poly;
    if (polygon_area2(p).sign() < 0) std::reverse(p.begin(), p.end());
    return p;
}

} // namespace

std::vector<int> upper_chain_indices(const Polygon& poly) {
    Polygon p = ccw_copy(poly);
    size_t n = p.size();
    size_t l = top_leftmost(p), r = top_rightmost(p);
    std::vector<int> idx;
    for (size_t i = r;; i = (i + 1) % n) { // CCW from rightmost goes over the top
        idx.push_back(int(i));
        if (i == l) break;
    }
    std::reverse(idx.begin(), idx.end()); // report left to right
    return idx;
}

std::vector<int> lower_chain_indices(const Polygon& poly) {
    Polygon p = ccw_copy(poly);
    size_t n = p.size();
    // Bottom chain: leftmost = min x tie min y, rightmost = max x tie min y.
    size_t l = 0, r = 0;
    for (size_t i = 1; i < n; ++i) {
        if (p[i].x < p[l].x || (p[i].x == p[l].x && p[i].y < p[l].y)) l = i;
        if (p[i].x > p[r].x || (p[i].x == p[r].x && p[i].y < p[r].y)) r = i;
    }
    std::vector<int> idx;
    for (size_t i = l;; i = (i + 1) % n) { // CCW from leftmost goes under the bottom
        idx.push_back(int(i));
        if (i == r) break;
    }
    return idx;
}

int upper_chain_edge_count(const Polygon& poly) {
    return int(upper_chain_indices(poly).size()) - 1;
}

std::pair<int, int> polygon_vertex_classes(const Polygon& poly) {
    size_t n = poly.size();
    int ccw = polygon_area2(poly).sign() >= 0 ? 1 : -1;
    int convex = 0, reflex = 0;
    for (size_t i = 0; i < n; ++i) {
        int o = orient(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
        (o * ccw >= 0 ? convex : reflex) += 1;
    }
    return {convex, reflex};
}

bool ray_hits_segment(const Point& origin, const Point& dir, const Segment& s) {
    // Solve origin + t*dir = s.a + u*(s.b - s.a), t >= 0, 0 <= u <= 1.
    Point d = s.b - s.a;
    Rat denom = dir.x * d.y - dir.y * d.x;
    Point w = s.a - origin;
    if (denom.sign() == 0) {
        // Parallel: hit only if collinear and some endpoint lies ahead.
        if ((w.x * dir.y - w.y * dir.x).sign() != 0) return false;
        auto ahead = [&](const Point& p) {
            Point q = p - origin;
            return (q.x * dir.x + q.y * dir.y).sign() >= 0;
        };
        return ahead(s.a) || ahead(s.b);
    }
    Rat u = (w.x * dir.y - w.y * dir.x) / denom;
    if (u < Rat(0) || u > Rat(1)) return false;
    Rat t = (w.x * d.y - w.y * d.x) / denom;
    return t >= Rat(0);
}

void BBox::expand(const Point& p) {
    xmin = min(xmin, p.x);
    ymin = min(ymin, p.y);
    xmax = max(xmax, p.x);
    ymax = max(ymax, p.y);
}

bool BBox::disjoint(const BBox& o) const {
    return xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin;
}

BBox bbox_of(const std::vector<Point>& pts) {
    if (pts.empty()) fail(ErrorKind::invariant, "bbox of empty point set");
    BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const auto& p : pts) b.expand(p);
    return b;
}

} // namespace obstra
