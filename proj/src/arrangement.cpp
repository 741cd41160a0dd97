#include "obstra/arrangement.hpp"

#include "obstra/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace obstra {

namespace {

// 0 for directions in the upper half plane (including +x), 1 below.
int half_of(const Point& d) {
    if (d.y.sign() != 0) return d.y.sign() > 0 ? 0 : 1;
    return d.x.sign() > 0 ? 0 : 1;
}

bool ccw_less(const Point& u, const Point& v) {
    int hu = half_of(u), hv = half_of(v);
    if (hu != hv) return hu < hv;
    return (u.x * v.y - u.y * v.x).sign() > 0;
}

Rat walk_area2(const std::vector<int>& walk, const std::vector<Point>& nodes) {
    Rat s(0);
    size_t n = walk.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = nodes[walk[i]];
        const Point& b = nodes[walk[(i + 1) % n]];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

// Rotate a cycle to its lexicographically smallest rotation, for stable output.
void canonicalize_cycle(std::vector<int>& cyc) {
    size_t n = cyc.size(), best = 0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            int a = cyc[(i + k) % n], b = cyc[(best + k) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

Polygon Arrangement::walk_polygon(const std::vector<int>& walk) const {
    Polygon poly;
    poly.reserve(walk.size());
    for (int id : walk) poly.push_back(nodes[id]);
    return poly;
}

Segment Arrangement::arc_segment(int arc) const {
    return {nodes[arcs[arc].a], nodes[arcs[arc].b]};
}

bool Arrangement::point_on_union(const Point& p) const {
    for (const auto& arc : arcs)
        if (on_segment(p, {nodes[arc.a], nodes[arc.b]})) return true;
    for (const auto& q : nodes)
        if (p == q) return true;
    return false;
}

int Arrangement::face_of_point(const Point& p) const {
    if (point_on_union(p)) return -1;
    // The face is the one whose outer walk is the smallest positive cycle
    // strictly containing p; nesting is laminar so minimal area is immediate.
    int best = unbounded;
    Rat best_area;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (!faces[f].bounded) continue;
        Polygon poly = walk_polygon(faces[f].outer);
        if (point_in_polygon(p, poly) != Containment::inside) continue;
        Rat area = polygon_area2(poly);
        if (best == unbounded || area < best_area) {
            best = int(f);
            best_area = area;
        }
    }
    return best;
}

std::vector<int> Arrangement::stabbed_faces(const Segment& s) const {
    if (s.a == s.b) return {};
    bool by_x = s.a.x != s.b.x;
    auto param = [&](const Point& p) {
        return by_x ? (p.x - s.a.x) / (s.b.x - s.a.x) : (p.y - s.a.y) / (s.b.y - s.a.y);
    };
    std::set<Rat> events{Rat(0), Rat(1)};
    for (const auto& arc : arcs) {
        auto r = segments_intersect(s, {nodes[arc.a], nodes[arc.b]});
        if (r.kind == SegIntersection::Kind::empty) continue;
        Rat t = param(r.p);
        if (Rat(0) < t && t < Rat(1)) events.insert(t);
        if (r.kind == SegIntersection::Kind::overlap) {
            Rat t2 = param(r.q);
            if (Rat(0) < t2 && t2 < Rat(1)) events.insert(t2);
        }
    }
    std::vector<Rat> ts(events.begin(), events.end());
    std::set<int> result;
    Point dir = s.b - s.a;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat mid = (ts[i] + ts[i + 1]) / Rat(2);
        Point m = s.a + mid * dir;
        int f = face_of_point(m);
        if (f >= 0) result.insert(f);
    }
    return std::vector<int>(result.begin(), result.end());
}

Arrangement planarize(const Drawing& d) {
    if (!is_general_position(d.points))
        fail(ErrorKind::invariant, "planarize: positions in general position violated");

    const auto& edges = d.graph.edges;
    int m = int(edges.size());
    auto seg_of = [&](int e) { return d.edge_segment(edges[e]); };

    // Pairwise crossings. General position already excludes a vertex interior
    // to a foreign edge and collinear edges through a shared endpoint.
    std::map<Point, std::set<int>> crossings; // point -> edges through it
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = edges[i].first == edges[j].first ||
                            edges[i].first == edges[j].second ||
                            edges[i].second == edges[j].first ||
                            edges[i].second == edges[j].second;
            auto r = segments_intersect(seg_of(i), seg_of(j));
            if (r.kind == SegIntersection::Kind::overlap)
                fail(ErrorKind::invariant, "planarize: overlapping collinear edges");
            if (r.kind == SegIntersection::Kind::empty) continue;
            if (adjacent) continue; // meeting point is the shared vertex
            auto& through = crossings[r.p];
            through.insert(i);
            through.insert(j);
            if (through.size() > 2)
                fail(ErrorKind::invariant, "planarize: three edges through one point");
        }

    Arrangement A;
    A.drawing = d;
    A.nodes = d.points;
    for (const auto& [p, through] : crossings) A.nodes.push_back(p);
    std::sort(A.nodes.begin(), A.nodes.end());
    auto node_id = [&](const Point& p) {
        auto it = std::lower_bound(A.nodes.begin(), A.nodes.end(), p);
        return int(it - A.nodes.begin());
    };
    A.vertex_node.resize(d.graph.n);
    for (int v = 0; v < d.graph.n; ++v) A.vertex_node[v] = node_id(d.points[v]);

    // Split edges into arcs at their crossing nodes.
    for (int e = 0; e < m; ++e) {
        Segment s = seg_of(e);
        bool by_x = s.a.x != s.b.x;
        std::vector<Point> cuts{s.a, s.b};
        for (const auto& [p, through] : crossings)
            if (through.count(e)) cuts.push_back(p);
        std::sort(cuts.begin(), cuts.end(), [&](const Point& p, const Point& q) {
            return by_x ? p.x < q.x : p.y < q.y;
        });
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            A.arcs.push_back({node_id(cuts[i]), node_id(cuts[i + 1]), e});
    }
    int na = int(A.arcs.size());

    // Half-edge rings: half-edge 2k runs a->b of arc k, 2k+1 runs b->a.
    auto origin = [&](int h) { return h % 2 == 0 ? A.arcs[h / 2].a : A.arcs[h / 2].b; };
    auto target = [&](int h) { return h % 2 == 0 ? A.arcs[h / 2].b : A.arcs[h / 2].a; };
    std::vector<std::vector<int>> ring(A.nodes.size());
    for (int h = 0; h < 2 * na; ++h) ring[origin(h)].push_back(h);
    for (auto& r : ring)
        std::sort(r.begin(), r.end(), [&](int h1, int h2) {
            Point d1 = A.nodes[target(h1)] - A.nodes[origin(h1)];
            Point d2 = A.nodes[target(h2)] - A.nodes[origin(h2)];
            return ccw_less(d1, d2);
        });
    std::vector<int> ring_pos(2 * na);
    for (const auto& r : ring)
        for (size_t i = 0; i < r.size(); ++i) ring_pos[r[i]] = int(i);

    // Trace face walks: successor of h at node v is the clockwise neighbor of
    // the reversed half-edge, which keeps the face on the left.
    std::vector<int> cycle_of(2 * na, -1);
    std::vector<std::vector<int>> cycles; // node walks
    std::vector<std::vector<int>> cycle_arcs;
    for (int h0 = 0; h0 < 2 * na; ++h0) {
        if (cycle_of[h0] != -1) continue;
        int id = int(cycles.size());
        std::vector<int> walk, warcs;
        int h = h0;
        do {
            cycle_of[h] = id;
            walk.push_back(origin(h));
            warcs.push_back(h / 2);
            int rev = h ^ 1;
            const auto& r = ring[target(h)];
            int idx = ring_pos[rev];
            h = r[(idx - 1 + int(r.size())) % int(r.size())];
        } while (h != h0);
        cycles.push_back(std::move(walk));
        cycle_arcs.push_back(std::move(warcs));
    }

    // Classify cycles; positive area = outer walk of a bounded face.
    int nc = int(cycles.size());
    std::vector<Rat> areas(nc);
    std::vector<int> face_of_cycle(nc, -1);
    std::vector<std::pair<Rat, int>> positive; // (area, cycle)
    for (int c = 0; c < nc; ++c) {
        areas[c] = walk_area2(cycles[c], A.nodes);
        if (areas[c].sign() > 0) positive.push_back({areas[c], c});
    }

    // Smallest positive cycle strictly containing a point (or -1).
    auto container = [&](const Point& p) {
        int best = -1;
        for (const auto& [area, c] : positive) {
            if (best != -1 && areas[best] <= area) continue;
            if (point_in_polygon(p, A.walk_polygon(cycles[c])) == Containment::inside) best = c;
        }
        return best;
    };

    struct ProtoFace {
        std::vector<int> outer;
        std::vector<std::vector<int>> holes;
        std::vector<int> isolated;
        bool bounded;
        std::vector<int> outer_arcs;
        std::vector<std::vector<int>> hole_arcs;
    };
    std::vector<ProtoFace> proto;
    std::vector<int> proto_of_cycle(nc, -1);
    for (const auto& [area, c] : positive) {
        proto_of_cycle[c] = int(proto.size());
        proto.push_back({cycles[c], {}, {}, true, cycle_arcs[c], {}});
    }
    ProtoFace outer_face{{}, {}, {}, false, {}, {}};
    for (int c = 0; c < nc; ++c) {
        if (areas[c].sign() > 0) continue;
        int host = container(A.nodes[cycles[c][0]]);
        ProtoFace& f = host == -1 ? outer_face : proto[proto_of_cycle[host]];
        f.holes.push_back(cycles[c]);
        f.hole_arcs.push_back(cycle_arcs[c]);
        proto_of_cycle[c] = host == -1 ? -2 : proto_of_cycle[host];
    }
    std::vector<char> isolated_node(A.nodes.size(), 1);
    for (const auto& arc : A.arcs) isolated_node[arc.a] = isolated_node[arc.b] = 0;
    for (size_t v = 0; v < A.nodes.size(); ++v) {
        if (!isolated_node[v]) continue;
        int host = container(A.nodes[v]);
        (host == -1 ? outer_face : proto[proto_of_cycle[host]]).isolated.push_back(int(v));
    }
    proto.push_back(std::move(outer_face));

    // Freeze deterministic face order and the arc incidences.
    for (auto& f : proto) {
        canonicalize_cycle(f.outer);
        for (auto& h : f.holes) canonicalize_cycle(h);
        std::sort(f.holes.begin(), f.holes.end());
    }
    std::vector<int> order(proto.size());
    std::iota(order.begin(), order.end(), 0);
    auto face_key = [&](const ProtoFace& f) {
        std::set<int> ns(f.outer.begin(), f.outer.end());
        std::vector<int> as = f.outer_arcs;
        for (const auto& h : f.holes) ns.insert(h.begin(), h.end());
        for (const auto& ha : f.hole_arcs) as.insert(as.end(), ha.begin(), ha.end());
        std::sort(as.begin(), as.end());
        return std::tuple<std::vector<int>, std::vector<int>, int>(
            std::vector<int>(ns.begin(), ns.end()), as, f.bounded ? 0 : 1);
    };
    std::vector<decltype(face_key(proto[0]))> keys;
    for (const auto& f : proto) keys.push_back(face_key(f));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (keys[order[i]] == keys[order[i + 1]])
            fail(ErrorKind::internal, "planarize: ambiguous face ordering");

    std::vector<int> face_index(proto.size());
    for (size_t i = 0; i < order.size(); ++i) face_index[order[i]] = int(i);
    for (size_t i = 0; i < order.size(); ++i) {
        const ProtoFace& f = proto[order[i]];
        auto [ns, as, unb] = keys[order[i]];
        Face out;
        out.outer = f.outer;
        out.holes = f.holes;
        out.isolated = f.isolated;
        std::sort(out.isolated.begin(), out.isolated.end());
        out.bounded = f.bounded;
        out.nodes_sorted = ns;
        out.arcs_sorted = as;
        A.faces.push_back(std::move(out));
        if (!f.bounded) A.unbounded = int(i);
    }
    A.arc_faces.resize(na);
    for (int h = 0; h < 2 * na; ++h) {
        // A hole walk belongs to its host face; an outer walk to its own.
        int pf = proto_of_cycle[cycle_of[h]];
        int f = face_index[pf == -2 ? int(proto.size()) - 1 : pf];
        (h % 2 == 0 ? A.arc_faces[h / 2].first : A.arc_faces[h / 2].second) = f;
    }

    // Structural self-checks.
    DSU dsu(int(A.nodes.size()));
    for (const auto& arc : A.arcs) dsu.join(arc.a, arc.b);
    std::set<int> roots;
    for (size_t v = 0; v < A.nodes.size(); ++v) roots.insert(dsu.find(int(v)));
    A.components = int(roots.size());
    long v = long(A.nodes.size()), e = na, f = long(A.faces.size());
    if (v - e + f != 1 + A.components)
        fail(ErrorKind::internal, "planarize: Euler relation violated");
    long boundary_sum = 0;
    for (const auto& face : A.faces) boundary_sum += long(face.arcs_sorted.size());
    if (boundary_sum != 2 * e)
        fail(ErrorKind::internal, "planarize: arc incidence count violated");
    return A;
}

} // namespace obstra
