#include "obstra/constructions.hpp"

#include "obstra/cover.hpp"
#include "obstra/error.hpp"
#include "obstra/visibility.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace obstra {

namespace {

bool covers_all(const Graph& g, const std::vector<bool>& in) {
    for (const Edge& e : g.edges)
        if (!in[e.first] && !in[e.second]) return false;
    return true;
}

bool vc_search(const Graph& g, int k, std::vector<bool>& in, std::vector<int>& out) {
    const Edge* open = nullptr;
    for (const Edge& e : g.edges)
        if (!in[e.first] && !in[e.second]) { open = &e; break; }
    if (!open) {
        out.clear();
        for (int v = 0; v < g.n; ++v)
            if (in[v]) out.push_back(v);
        return true;
    }
    if (k == 0) return false;
    for (int v : {open->first, open->second}) {
        in[v] = true;
        if (vc_search(g, k - 1, in, out)) { in[v] = false; return true; }
        in[v] = false;
    }
    return false;
}

Polygon ccw(Polygon p) {
    if (polygon_area2(p).sign() < 0) std::reverse(p.begin(), p.end());
    return p;
}

} // namespace

std::optional<std::vector<int>> vertex_cover(const Graph& g, int k) {
    if (k < 0) fail(ErrorKind::invariant, "vertex_cover: negative budget");
    std::vector<bool> in(g.n, false);
    std::vector<int> out;
    if (vc_search(g, k, in, out)) return out;
    return std::nullopt;
}

std::vector<int> minimum_vertex_cover(const Graph& g) {
    for (int k = 0; k <= g.n; ++k)
        if (auto c = vertex_cover(g, k)) return *c;
    fail(ErrorKind::internal, "minimum_vertex_cover: no cover up to n");
}

VcDecomposition decompose_by_cover(const Graph& g, std::vector<int> cover) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    std::vector<bool> in(g.n, false);
    for (int v : cover) {
        if (v < 0 || v >= g.n) fail(ErrorKind::invariant, "decompose_by_cover: vertex out of range");
        in[v] = true;
    }
    if (!covers_all(g, in)) fail(ErrorKind::invariant, "decompose_by_cover: set is not a vertex cover");
    auto adj = g.adjacency();
    std::map<std::vector<int>, std::vector<int>> by_nbhd;
    for (int v = 0; v < g.n; ++v) {
        if (in[v]) continue;
        std::vector<int> nb = adj[v];
        std::sort(nb.begin(), nb.end());
        by_nbhd[nb].push_back(v);
    }
    VcDecomposition d;
    d.cover = cover;
    for (auto& [nb, members] : by_nbhd) {
        d.type_nbhd.push_back(nb);
        d.types.push_back(members);
    }
    return d;
}

Scene vc_representation(const Graph& g, const std::vector<int>& cover) {
    VcDecomposition dec = decompose_by_cover(g, cover);
    int k = int(dec.cover.size());
    int t = int(dec.types.size());

    Rat R0(512 * (t + 2));
    Rat scale(1);
    for (int round = 0; round < 40; ++round, scale = scale / Rat(4)) {
        Rat R = R0 / scale;              // doubles faster than blockers shrink
        Rat eta = Rat(1, 64) * scale;    // curvature of the slot curve
        Rat delta = Rat(1, 64) * scale;  // blocker pull-back toward its host

        std::vector<Point> pts(g.n, Point{Rat(0), Rat(0)});
        // Cover vertices on a short arc at the top of the circle x^2+y^2=R^2,
        // exactly on it via the rational parametrization.
        for (int i = 0; i < k; ++i) {
            Rat u(2 * i - (k - 1), 64 * (k + 2));
            Rat den = Rat(1) + u * u;
            pts[dec.cover[i]] = {R * Rat(2) * u / den, R * (Rat(1) - u * u) / den};
        }
        // Type members in per-type slots on the shallow curve y = eta x^2.
        for (int ty = 0; ty < t; ++ty) {
            int c = int(dec.types[ty].size());
            Rat a(2 * ty - (t - 1));
            for (int j = 0; j < c; ++j) {
                Rat x = a + Rat(2 * j + 1 - c, 4 * c);
                pts[dec.types[ty][j]] = {x, eta * x * x};
            }
        }
        if (!is_general_position(pts)) continue;

        std::vector<Polygon> obstacles;
        // The comb: a zig-zag whose teeth rise between consecutive curve
        // vertices above every chord of the curve, closed by a bottom edge.
        std::vector<Rat> xs;
        for (int ty = 0; ty < t; ++ty)
            for (int v : dec.types[ty]) xs.push_back(pts[v].x);
        std::sort(xs.begin(), xs.end());
        if (xs.size() >= 2) {
            Rat xm = std::max(xs.front().abs(), xs.back().abs());
            Rat tip = eta * xm * xm + Rat(1, 8);
            Polygon comb;
            comb.push_back({xs.front() - Rat(1, 2), tip});
            for (size_t i = 0; i < xs.size(); ++i) {
                comb.push_back({xs[i], -Rat(1, 4)});
                if (i + 1 < xs.size())
                    comb.push_back({(xs[i] + xs[i + 1]) / Rat(2), tip});
            }
            comb.push_back({xs.back() + Rat(1, 2), tip});
            comb.push_back({xs.back() + Rat(1, 2), -Rat(1)});
            comb.push_back({xs.front() - Rat(1, 2), -Rat(1)});
            obstacles.push_back(ccw(std::move(comb)));
        }
        // Per-host shrinking pull-backs keep the blockers at one cover vertex
        // on disjoint shells around it.
        std::vector<int> shell(g.n, 0);
        auto pull = [&](int host) {
            Rat d = delta;
            for (int s = shell[host]++; s > 0; --s) d = d / Rat(2);
            return d;
        };
        // One tiny blocker per non-adjacent cover pair, near the lower vertex
        // and centered on the sight line so the pair is provably blocked.
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int u = dec.cover[i], v = dec.cover[j];
                if (g.has_edge(u, v)) continue;
                Rat d = pull(u);
                Point b = pts[u] + d * (pts[v] - pts[u]);
                Rat s = d / Rat(8);
                obstacles.push_back(
                    {{b.x + s, b.y}, {b.x - s, b.y + s}, {b.x - s, b.y - s}});
            }
        // One near-point blocker per (type, non-adjacent cover vertex): the
        // slot's margin box scaled toward the cover vertex, so every sight
        // line from it into the slot passes through the copy.
        for (int ty = 0; ty < t; ++ty) {
            BBox bb = bbox_of([&] {
                std::vector<Point> sp;
                for (int v : dec.types[ty]) sp.push_back(pts[v]);
                return sp;
            }());
            Rat gm(1, 64);
            Polygon box = {{bb.xmin - gm, bb.ymin - gm},
                           {bb.xmax + gm, bb.ymin - gm},
                           {bb.xmax + gm, bb.ymax + gm},
                           {bb.xmin - gm, bb.ymax + gm}};
            for (int i = 0; i < k; ++i) {
                int u = dec.cover[i];
                if (std::binary_search(dec.type_nbhd[ty].begin(), dec.type_nbhd[ty].end(), u))
                    continue;
                Rat d = pull(u);
                Polygon copy;
                for (const Point& c : box) copy.push_back(pts[u] + d * (c - pts[u]));
                obstacles.push_back(copy);
            }
        }

        try {
            Scene s(Drawing(g, pts), std::move(obstacles));
            if (is_obstacle_representation(s, g).yes) return s;
        } catch (const Error&) {
        }
    }
    fail(ErrorKind::internal, "vc_representation: no scale certified");
}

Scene planarization_representation(const Graph& g, std::vector<Point> positions,
                                   unsigned long seed) {
    if (g.n <= 0) fail(ErrorKind::invariant, "planarization_representation: empty graph");
    Drawing d;
    if (!positions.empty()) {
        d = Drawing(g, std::move(positions));
    } else {
        std::mt19937_64 rng(seed);
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            std::vector<Point> pts;
            for (int i = 0; i < g.n; ++i) {
                Rat x(long(rng() % (1ul << 24)));
                Rat y(long(rng() % (1ul << 24)));
                pts.push_back({x, y});
            }
            try {
                Drawing cand(g, pts);
                planarize(cand);
                d = std::move(cand);
                ok = true;
            } catch (const Error&) {
            }
        }
        if (!ok)
            fail(ErrorKind::internal,
                 "planarization_representation: no general-position drawing sampled");
    }
    CoverInstance inst = build_cover_instance(d);
    std::vector<std::vector<Segment>> targets(inst.arr.faces.size());
    for (size_t e = 0; e < inst.nonedges.size(); ++e) {
        Segment s = d.edge_segment(inst.nonedges[e]);
        for (int f : inst.hits[e]) targets[f].push_back(s);
    }
    std::vector<Polygon> obstacles;
    for (size_t f = 0; f < inst.arr.faces.size(); ++f)
        obstacles.push_back(materialize_face(inst.arr, int(f), targets[f]));
    Scene s(std::move(d), std::move(obstacles));
    if (!is_obstacle_representation(s, g).yes)
        fail(ErrorKind::internal, "planarization_representation: verification failed");
    return s;
}

namespace {

Polygon merge_collinear(const Polygon& p) {
    int n = int(p.size());
    Polygon out;
    for (int i = 0; i < n; ++i) {
        const Point& a = p[(i + n - 1) % n];
        const Point& b = p[i];
        const Point& c = p[(i + 1) % n];
        if (a == b || orient(a, b, c) != 0) out.push_back(b);
    }
    return out;
}

std::vector<int> crossing_nodes(const Arrangement& arr) {
    std::set<int> vtx(arr.vertex_node.begin(), arr.vertex_node.end());
    std::vector<int> out;
    for (int i = 0; i < int(arr.nodes.size()); ++i)
        if (!vtx.count(i)) out.push_back(i);
    return out;
}

// The three exact conditions on a candidate top point pm over the cup so far.
bool cup_conditions_hold(const std::vector<Point>& cup, const Arrangement& prev,
                         const Point& pm) {
    for (int z : crossing_nodes(prev)) {
        const Point& c = prev.nodes[z];
        for (const Point& pi : cup) {
            if (c.x == pi.x) return false;
            int o = orient(pi, pm, c);
            if (o == 0) return false;
            if ((o > 0) != (c.x < pi.x)) return false;
        }
    }
    std::vector<Point> next = cup;
    next.push_back(pm);
    Arrangement arr;
    try {
        arr = planarize(cup_complete_drawing(next));
    } catch (const Error&) {
        return false;
    }
    for (int z : crossing_nodes(arr))
        for (const Point& pi : next)
            if (arr.nodes[z].x == pi.x) return false;
    for (const Face& face : arr.faces) {
        if (!face.bounded) continue;
        Polygon poly = merge_collinear(arr.walk_polygon(face.outer));
        if (poly.size() < 3 || !polygon_is_convex(poly)) return false;
        std::vector<int> up = upper_chain_indices(poly);
        if (int(up.size()) > 3) return false;  // upper chain longer than two edges
        if (int(up.size()) != 3) continue;     // only two-edge upper chains constrain
        const Point& a = poly[up[0]];
        const Point& b = poly[up[1]];
        for (const Point& pi : next)
            if (a.x < pi.x && pi.x < b.x && orient(a, b, pi) < 0) return false;
    }
    return true;
}

// Incidence structure of the drawing's planarization: per edge, the crossings
// along it in order, each recorded as the sorted set of edges through it;
// plus the face count.
using ArrSig = std::pair<std::vector<std::vector<std::vector<int>>>, size_t>;

ArrSig incidence_signature(const Arrangement& arr) {
    std::vector<std::set<int>> at(arr.nodes.size());
    for (const Arc& a : arr.arcs) {
        at[a.a].insert(a.edge);
        at[a.b].insert(a.edge);
    }
    int ne = arr.drawing.graph.m();
    std::vector<std::vector<std::vector<int>>> per(ne);
    for (int e = 0; e < ne; ++e) {
        Edge ed = arr.drawing.graph.edges[e];
        int va = arr.vertex_node[ed.first], vb = arr.vertex_node[ed.second];
        std::set<int> on;
        for (const Arc& a : arr.arcs)
            if (a.edge == e) {
                on.insert(a.a);
                on.insert(a.b);
            }
        on.erase(va);
        on.erase(vb);
        std::vector<int> order(on.begin(), on.end());
        std::sort(order.begin(), order.end(),
                  [&](int i, int j) { return arr.nodes[i] < arr.nodes[j]; });
        for (int nd : order) per[e].push_back({at[nd].begin(), at[nd].end()});
    }
    return {per, arr.faces.size()};
}

bool nonedge_claim_on(const Arrangement& arr, const std::vector<Edge>& X) {
    std::map<int, int> count;
    for (const Edge& e : X) {
        Segment s{arr.drawing.points[e.first], arr.drawing.points[e.second]};
        for (int f : arr.stabbed_faces(s))
            if (++count[f] > 2) return false;
    }
    return true;
}

} // namespace

Drawing cup_complete_drawing(const std::vector<Point>& p) {
    return Drawing(Graph::complete(int(p.size())), p);
}

bool verify_cap_claim(const Arrangement& cup_arr) {
    for (const Face& face : cup_arr.faces) {
        if (!face.bounded) continue;
        Polygon poly = merge_collinear(cup_arr.walk_polygon(face.outer));
        if (poly.size() < 3 || !polygon_is_convex(poly)) return false;
        if (upper_chain_edge_count(poly) > 2) return false;
    }
    return true;
}

bool verify_nonedge_claim(const LowerBoundDrawing& L) {
    return nonedge_claim_on(planarize(L.drawing), L.X);
}

LowerBoundDrawing lower_bound_drawing(int n) {
    if (n < 4) fail(ErrorKind::invariant, "lower_bound_drawing: need n >= 4");
    if (n % 2 == 1) {
        LowerBoundDrawing L = lower_bound_drawing(n - 1);
        Graph g2(L.drawing.graph.n + 1, L.drawing.graph.edges);
        for (int j = 0; j < 64; ++j) {
            std::vector<Point> pts = L.drawing.points;
            pts.push_back({Rat(L.m + 2 + j), Rat(-1 - 2 * j)});
            try {
                Drawing d2(g2, pts);
                planarize(d2);
                L.drawing = std::move(d2);
                return L;
            } catch (const Error&) {
            }
        }
        fail(ErrorKind::internal, "lower_bound_drawing: no spot for the isolated vertex");
    }
    int m = n / 2;
    LowerBoundDrawing L;
    L.m = m;
    std::vector<Point> cup = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
    L.y = {Rat(0), Rat(0)};
    for (int mm = 3; mm <= m; ++mm) {
        Arrangement prev = planarize(cup_complete_drawing(cup));
        Rat yc = L.y.back() * Rat(4) + Rat(4);
        int it = 0;
        while (!cup_conditions_hold(cup, prev, {Rat(mm), yc})) {
            if (++it > 96) fail(ErrorKind::internal, "lower_bound_drawing: height search stuck");
            yc = yc * Rat(2);
        }
        cup.push_back({Rat(mm), yc});
        L.y.push_back(yc);
    }
    L.p = cup;
    if (!verify_cap_claim(planarize(cup_complete_drawing(cup))))
        fail(ErrorKind::internal, "lower_bound_drawing: cap claim failed on the cup");

    auto at_eps = [&](const Rat& e) {
        std::vector<Point> pts = cup;
        for (int i = 0; i < m; ++i) pts.push_back({Rat(i + 1), L.y[i] - e});
        return pts;
    };
    std::vector<Edge> edges;
    std::vector<Edge> X;
    for (int a = 0; a < 2 * m; ++a)
        for (int b = a + 1; b < 2 * m; ++b) {
            bool sa = a >= m, sb = b >= m; // shadow points
            if (sa && sb && (a - m + 1) % 2 == 0 && (b - m + 1) % 2 == 0)
                X.push_back({a, b});
            else
                edges.push_back({a, b});
        }
    L.X = X;

    Rat eps(1, 2);
    bool have_next = false;
    ArrSig next_sig;
    for (int it = 0; it < 64; ++it, eps = eps / Rat(2)) {
        Drawing cand;
        Arrangement arr;
        ArrSig sig;
        try {
            if (have_next) {
                sig = next_sig;
            } else {
                cand = Drawing(Graph(2 * m, edges), at_eps(eps));
                arr = planarize(cand);
                sig = incidence_signature(arr);
            }
            Drawing half(Graph(2 * m, edges), at_eps(eps / Rat(2)));
            Arrangement harr = planarize(half);
            next_sig = incidence_signature(harr);
            have_next = true;
            if (sig == next_sig) {
                if (cand.points.empty()) {
                    cand = Drawing(Graph(2 * m, edges), at_eps(eps));
                    arr = planarize(cand);
                }
                if (nonedge_claim_on(arr, X)) {
                    L.epsilon = eps;
                    L.q.clear();
                    for (int i = 0; i < m; ++i) L.q.push_back({Rat(i + 1), L.y[i] - eps});
                    L.drawing = std::move(cand);
                    return L;
                }
            }
        } catch (const Error&) {
            have_next = false;
        }
    }
    fail(ErrorKind::internal, "lower_bound_drawing: epsilon never stabilized");
}

} // namespace obstra
