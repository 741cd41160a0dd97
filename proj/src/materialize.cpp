#include "obstra/cover.hpp"

#include "obstra/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

// Turns a chosen face of an arrangement into one obstacle polygon strictly
// inside it. The primary route shrinks the face boundary toward an interior
// point; the robust route insets every boundary walk by a miter offset and
// splices holes (carved passages) and extra components (thin corridors) into
// a single simple polygon. Every candidate is accepted only after exact
// certification, with the offset halved between rounds.

namespace obstra {

namespace {

struct Curve {
    Polygon pts;
    std::vector<Point> anchor; // walk node each corner belongs to
};

Point left_offset(const Point& dir, const Rat& lam) {
    Rat m = max(dir.x.abs(), dir.y.abs());
    Rat s = lam / m;
    return {-(s * dir.y), s * dir.x};
}

// Miter offset of a face walk, pushed to the walk's left (the face side).
Curve offset_walk(const std::vector<Point>& nodes, const std::vector<int>& walk,
                  const Rat& lam) {
    int n = int(walk.size());
    Curve c;
    for (int i = 0; i < n; ++i) {
        const Point& u = nodes[walk[i]];
        const Point& v = nodes[walk[(i + 1) % n]];
        const Point& w = nodes[walk[(i + 2) % n]];
        Point d1 = v - u, d2 = w - v;
        Point o1 = left_offset(d1, lam), o2 = left_offset(d2, lam);
        if (w == u) {
            // U-turn cap at a leaf: two corners pushed past it.
            Rat m = max(d1.x.abs(), d1.y.abs());
            Point ext{lam * d1.x / m, lam * d1.y / m};
            c.pts.push_back(v + ext + o1);
            c.anchor.push_back(v);
            c.pts.push_back(v + ext + o2);
            c.anchor.push_back(v);
            continue;
        }
        auto corner = line_intersection({u + o1, v + o1}, {v + o2, w + o2});
        c.pts.push_back(corner ? *corner : v + o1);
        c.anchor.push_back(v);
    }
    return c;
}

// The same curve at twice the offset (miter corners scale linearly).
Polygon double_curve(const Curve& c) {
    Polygon out;
    for (size_t i = 0; i < c.pts.size(); ++i)
        out.push_back(c.anchor[i] + Rat(2) * (c.pts[i] - c.anchor[i]));
    return out;
}

Polygon square_at(const Point& c, const Rat& r) {
    return {{c.x - r, c.y - r}, {c.x + r, c.y - r}, {c.x + r, c.y + r}, {c.x - r, c.y + r}};
}

Polygon diamond_at(const Point& c, const Rat& r) {
    return {{c.x - r, c.y}, {c.x, c.y - r}, {c.x + r, c.y}, {c.x, c.y + r}};
}

Rat max_len(const Point& a, const Point& b) {
    return max((b.x - a.x).abs(), (b.y - a.y).abs());
}

// Every opening cut into loop material must keep its removed boundary pieces
// clear of the target segments. Then a chord that would hit one of the closed
// loops still hits the spliced composite: the hit point either survives or
// lies on a removed piece, and removed pieces never meet a target.
bool gaps_clear(const std::vector<Segment>& gaps, const std::vector<Segment>& targets) {
    for (const auto& g : gaps) {
        if (g.a == g.b) continue;
        for (const auto& t : targets)
            if (segments_intersect(t, g).kind != SegIntersection::Kind::empty) return false;
    }
    return true;
}

// Courtyard wall around an excluded node. The top edge carries an extra
// vertex at a per-courtyard horizontal jitter so vertically aligned nodes
// still find attach points whose upward rays miss each other's corners. The
// jitter keeps the carved passage mouth away from the node's own vertical,
// so a segment rising straight out of the node cannot thread the passage.
Polygon courtyard_at(const Point& c, const Rat& r, int jitter) {
    static const int nums[8] = {3, -3, 5, -5, 7, -7, 9, -9};
    Rat jit = r * Rat(nums[jitter % 8], 19);
    // Shift the whole yard sideways by a jitter-dependent amount so courtyards
    // of vertically aligned nodes never share exact x-coordinates; the carve
    // rays of one would otherwise graze the corners of the other forever. The
    // shift stays well under r/76 so the opening cut around the top jitter
    // vertex keeps to one side of the node, clear of vertical targets.
    Rat off = r * Rat(nums[(jitter + 3) % 8], 787);
    return {{c.x - r + off, c.y - r},
            {c.x + r + off, c.y - r},
            {c.x + r + off, c.y + r},
            {c.x + jit + off, c.y + r},
            {c.x - r + off, c.y + r}};
}

// Annulus between corner-parallel curves I (inner) and O (outer), opened by a
// slit through corner i; nu is the corner split parameter and cap bounds the
// setback distance so the slit stays thin on long edges. Returns empty when a
// target passes through the slit mouth.
Polygon band_with_slit(const Polygon& I, const Polygon& O, int i, const Rat& nu,
                       const Rat& cap, const std::vector<Segment>& targets) {
    int n = int(I.size());
    auto at = [&](int k) { return (k % n + n) % n; };
    auto stub = [&](const Polygon& P, int a, int b) {
        Rat len = max_len(P[a], P[b]);
        Rat u = len.sign() > 0 ? min(nu, cap / len) : nu;
        return P[a] + u * (P[b] - P[a]);
    };
    Point Im = stub(I, i, at(i - 1));
    Point Ip = stub(I, i, at(i + 1));
    Point Om = stub(O, i, at(i - 1));
    Point Op = stub(O, i, at(i + 1));
    if (!gaps_clear({{Im, I[i]}, {I[i], Ip}, {Om, O[i]}, {O[i], Op}}, targets)) return {};
    Polygon poly;
    poly.push_back(Ip);
    for (int k = 1; k < n; ++k) poly.push_back(I[at(i + k)]);
    poly.push_back(Im);
    poly.push_back(Om);
    for (int k = 1; k < n; ++k) poly.push_back(O[at(i - k)]);
    poly.push_back(Op);
    return poly;
}

bool wall_ok(const Segment& wall, const std::vector<const Polygon*>& avoid) {
    for (const auto* poly : avoid) {
        size_t n = poly->size();
        for (size_t j = 0; j < n; ++j) {
            auto r = segments_intersect(wall, {(*poly)[j], (*poly)[(j + 1) % n]});
            if (r.kind == SegIntersection::Kind::overlap) return false;
            if (r.kind == SegIntersection::Kind::point && r.p != wall.a && r.p != wall.b)
                return false;
        }
    }
    return true;
}

// Lowest strict crossing of the open upward ray from b with poly edges.
// Returns edge index -1 when the ray misses.
std::pair<int, Rat> ray_up_cut(const Point& b, const Polygon& poly) {
    Rat best;
    int edge = -1;
    size_t n = poly.size();
    for (size_t j = 0; j < n; ++j) {
        const Point& u = poly[j];
        const Point& v = poly[(j + 1) % n];
        if (!((u.x < b.x && b.x < v.x) || (v.x < b.x && b.x < u.x))) continue;
        Rat y = u.y + (b.x - u.x) * (v.y - u.y) / (v.x - u.x);
        if (y <= b.y) continue;
        if (edge == -1 || y < best) {
            best = y;
            edge = int(j);
        }
    }
    return {edge, edge == -1 ? Rat(0) : best};
}

// Carve a passage from polygon M (counterclockwise) out to hole loop B so the
// region of B is excluded; the passage runs vertically up from a top vertex
// of B to the first M edge above. Returns an empty polygon when no candidate
// works at this offset.
Polygon splice_remove(const Polygon& M, const Polygon& B, const Rat& nu,
                      const std::vector<const Polygon*>& pending, const Rat& cap,
                      const std::vector<Segment>& targets) {
    int nb = int(B.size()), nm = int(M.size());
    auto atB = [&](int k) { return (k % nb + nb) % nb; };
    auto atM = [&](int k) { return (k % nm + nm) % nm; };
    // Candidates: every vertex of B, plus the midpoint of every edge of B. A
    // vertex opening can sit exactly on a target ray out of the enclosed node
    // at every offset, while edge interiors offer windows between the rays.
    struct CandR {
        Point b;
        int k;
        bool mid;
    };
    std::vector<CandR> cand;
    for (int k = 0; k < nb; ++k) {
        cand.push_back({B[k], k, false});
        if (!(B[k] == B[atB(k + 1)]))
            cand.push_back({Rat(1, 2) * (B[k] + B[atB(k + 1)]), k, true});
    }
    std::sort(cand.begin(), cand.end(), [](const CandR& a, const CandR& b) {
        if (a.b.y != b.b.y) return b.b.y < a.b.y;
        if (a.b.x != b.b.x) return a.b.x < b.b.x;
        if (a.mid != b.mid) return !a.mid;
        return a.k < b.k;
    });
    Rat area_m = polygon_area2(M);
    for (size_t ci = 0; ci < cand.size() && ci < 24; ++ci) {
        int i = cand[ci].k;
        const Point& b = cand[ci].b;
        auto [mj, my] = ray_up_cut(b, M);
        if (mj == -1) continue;
        auto [bj, by] = ray_up_cut(b, B);
        if (bj != -1 && by < my) continue; // the ray exits through B first
        bool blocked = false;
        for (const auto* p : pending) {
            auto [pj, py] = ray_up_cut(b, *p);
            if (pj != -1 && py < my) blocked = true;
            for (const auto& q : *p)
                if (q.x == b.x && b.y < q.y && q.y <= my) blocked = true;
        }
        for (const auto& q : M)
            if (q.x == b.x && b.y < q.y && q.y <= my) blocked = true;
        for (const auto& q : B)
            if (q.x == b.x && b.y < q.y && q.y <= my) blocked = true;
        if (blocked) continue;

        const Point& u = M[mj];
        const Point& v = M[atM(mj + 1)];
        Rat t = (b.x - u.x) / (v.x - u.x);
        Rat s = min(min(t, Rat(1) - t), cap / max_len(u, v)) / Rat(4);
        Point qm = u + (t - s) * (v - u);
        Point qp = u + (t + s) * (v - u);
        Point bm, bp;
        if (cand[ci].mid) {
            const Point& e0 = B[i];
            const Point& e1 = B[atB(i + 1)];
            Rat w = min(Rat(1, 2), cap / max_len(e0, e1)) / Rat(4);
            bm = b + w * (e0 - b);
            bp = b + w * (e1 - b);
            // A straight opening admits only chords that cross it once, and
            // those must then leave through the straight mouth on M, also
            // crossable once; a target-free opening shuts the route entirely.
            if (!gaps_clear({{bm, bp}}, targets)) continue;
        } else {
            auto stub = [&](int k) {
                Rat len = max_len(b, B[k]);
                Rat w = len.sign() > 0 ? min(nu, cap / len) : nu;
                return b + w * (B[k] - b);
            };
            bm = stub(atB(i - 1));
            bp = stub(atB(i + 1));
            // The straight mouth on M cannot be crossed twice by one chord, so
            // a chord through it always ends on a wall or on B; only the bent
            // opening around b, the escape route out of the cavity, must stay
            // clear of the targets.
            if (!gaps_clear({{bm, b}, {b, bp}}, targets)) continue;
        }

        for (int combo = 0; combo < 2; ++combo) {
            Point first = combo == 0 ? bm : bp;
            Point last = combo == 0 ? bp : bm;
            Segment wall1{qm, first}, wall2{last, qp};
            std::vector<const Polygon*> avoid = pending;
            avoid.push_back(&M);
            avoid.push_back(&B);
            if (!wall_ok(wall1, avoid) || !wall_ok(wall2, avoid)) continue;
            Polygon out;
            out.push_back(qm);
            out.push_back(first);
            if (cand[ci].mid) {
                // bm sits on edge i of B; walk the whole ring back around.
                for (int k = 0; k < nb; ++k)
                    out.push_back(combo == 0 ? B[atB(i - k)] : B[atB(i + 1 + k)]);
            } else {
                for (int k = 1; k < nb; ++k)
                    out.push_back(combo == 0 ? B[atB(i - k)] : B[atB(i + k)]);
            }
            out.push_back(last);
            out.push_back(qp);
            for (int k = 1; k <= nm; ++k) out.push_back(M[atM(mj + k)]);
            if (polygon_is_simple(out) && polygon_area2(out) < area_m) return out;
        }
    }
    return {};
}

// Closest point of segment g to p: (squared distance, parameter on g).
std::pair<Rat, Rat> point_seg_closest(const Point& p, const Segment& g) {
    Point d = g.b - g.a;
    Rat len2 = d.x * d.x + d.y * d.y;
    Rat t = ((p.x - g.a.x) * d.x + (p.y - g.a.y) * d.y) / len2;
    if (t < Rat(0)) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    Point q = g.a + t * d;
    Point w = p - q;
    return {w.x * w.x + w.y * w.y, t};
}

// Closest pair of points between two disjoint segments: (d^2, param on e,
// param on f). For disjoint segments the minimum sits at an endpoint of one
// of them, so four point-to-segment cases cover it.
std::tuple<Rat, Rat, Rat> seg_seg_closest(const Segment& e, const Segment& f) {
    auto [d0, s0] = point_seg_closest(e.a, f);
    auto [d1, s1] = point_seg_closest(e.b, f);
    auto [d2, t2] = point_seg_closest(f.a, e);
    auto [d3, t3] = point_seg_closest(f.b, e);
    Rat best = d0;
    Rat t(0), s = s0;
    if (d1 < best) { best = d1; t = Rat(1); s = s1; }
    if (d2 < best) { best = d2; t = t2; s = Rat(0); }
    if (d3 < best) { best = d3; t = t3; s = Rat(1); }
    return {best, t, s};
}

// Boundary of P opened at parameter t of edge j, both gap flanks pulled back
// by scale with absolute size bounded by cap. Returns the walk from the gap
// end all the way around to the gap start; opening at a vertex (t = 0 or 1)
// removes a small corner cap. The removed pieces are appended to gaps.
std::vector<Point> opened(const Polygon& P, int j, const Rat& t, const Rat& scale,
                          const Rat& cap, std::vector<Segment>& gaps) {
    int n = int(P.size());
    auto at = [&](int k) { return (k % n + n) % n; };
    std::vector<Point> L;
    if (t == Rat(0) || t == Rat(1)) {
        int i = t == Rat(0) ? j : at(j + 1);
        const Point& a = P[i];
        auto stub = [&](int k) {
            Rat len = max_len(a, P[k]);
            Rat u = len.sign() > 0 ? min(Rat(1), cap / len) * scale : scale;
            return a + u * (P[k] - a);
        };
        Point fwd = stub(at(i + 1)), bwd = stub(at(i - 1));
        L.push_back(fwd);
        for (int k = 1; k < n; ++k) L.push_back(P[at(i + k)]);
        L.push_back(bwd);
        gaps.push_back({bwd, a});
        gaps.push_back({a, fwd});
    } else {
        const Point& u = P[j];
        Point d = P[at(j + 1)] - u;
        Rat s = min(min(t, Rat(1) - t), cap / max_len(u, P[at(j + 1)])) * scale;
        L.push_back(u + (t + s) * d);
        for (int k = 1; k <= n; ++k) L.push_back(P[at(j + k)]);
        L.push_back(u + (t - s) * d);
        gaps.push_back({u + (t - s) * d, u + (t + s) * d});
    }
    return L;
}

// Join polygon B to M (both counterclockwise) with a thin corridor so both
// become one obstacle. The corridor follows the closest pair of boundary
// points, which by minimality cannot cross either loop. Returns an empty
// polygon when no candidate works at this offset.
Polygon splice_add(const Polygon& M, const Polygon& B,
                   const std::vector<const Polygon*>& pending, const Rat& cap,
                   const std::vector<Segment>& targets) {
    int nm = int(M.size()), nb = int(B.size());
    struct Cand {
        Rat d2, t, s;
        int j, i;
    };
    std::vector<Cand> cands;
    for (int j = 0; j < nm; ++j)
        for (int i = 0; i < nb; ++i) {
            Segment e{M[j], M[(j + 1) % nm]}, f{B[i], B[(i + 1) % nb]};
            if (e.a == e.b || f.a == f.b) continue;
            if (segments_intersect(e, f).kind != SegIntersection::Kind::empty) continue;
            auto [d2, t, s] = seg_seg_closest(e, f);
            cands.push_back({d2, t, s, j, i});
            // Fallback attach points. A closest pair on a vertex can be
            // unusable there at every offset: a sharp corner only admits
            // corridors inside its wedge, and a target through the corner
            // blocks its gap forever. Backing off to an interior point of the
            // edge, or to its midpoint, sidesteps both.
            auto backoff = [](const Rat& x) {
                if (x.sign() == 0) return Rat(1, 8);
                if (x == Rat(1)) return Rat(7, 8);
                return x;
            };
            Rat tb = backoff(t), sb = backoff(s);
            if (tb != t || sb != s) {
                Point pe = e.a + tb * (e.b - e.a), pf = f.a + sb * (f.b - f.a);
                Point w = pf - pe;
                cands.push_back({w.x * w.x + w.y * w.y, tb, sb, j, i});
            }
            Point em = Rat(1, 2) * (e.a + e.b), fm = Rat(1, 2) * (f.a + f.b);
            Point w = fm - em;
            cands.push_back({w.x * w.x + w.y * w.y, Rat(1, 2), Rat(1, 2), j, i});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.d2 != b.d2) return a.d2 < b.d2;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });
    Rat area_m = polygon_area2(M);
    // Cap attempts per attach region on M, not just overall: candidates tie in
    // distance along a closest feature, and one unusable region (a sharp tip,
    // a slit wall) would otherwise flood the attempt budget with B-side
    // variants of the same doomed attach point.
    std::map<std::pair<int, int>, int> region_used;
    int attempted = 0;
    for (size_t c = 0; c < cands.size() && attempted < 128; ++c) {
        int tbucket = 0;
        for (int k = 1; k <= 8; ++k)
            if (!(cands[c].t < Rat(k, 8))) tbucket = k;
        if (++region_used[{cands[c].j, tbucket}] > 4) continue;
        ++attempted;
        for (const Rat& scale : {Rat(1, 4), Rat(1, 16), Rat(1, 64)}) {
            std::vector<Segment> gaps;
            auto LM = opened(M, cands[c].j, cands[c].t, scale, cap, gaps);
            auto LB = opened(B, cands[c].i, cands[c].s, scale, cap, gaps);
            if (!gaps_clear(gaps, targets)) continue;
            for (int combo = 0; combo < 2; ++combo) {
                std::vector<Point> lb = LB;
                if (combo == 1) std::reverse(lb.begin(), lb.end());
                Segment wall1{LM.back(), lb.front()}, wall2{lb.back(), LM.front()};
                // Remnants of M and B are edges of the composite, so crossings with
                // them are caught by the simplicity check; the walls may legally pass
                // through the corner wedges that opened() removed. Only loops not yet
                // spliced need an explicit test.
                if (!wall_ok(wall1, pending) || !wall_ok(wall2, pending)) continue;
                Polygon out = LM;
                out.insert(out.end(), lb.begin(), lb.end());
                if (!polygon_is_simple(out)) continue;
                if (!(polygon_area2(out) > area_m)) continue;
                return out;
            }
        }
    }
    return {};
}

bool certify(const Arrangement& arr, int f, const Polygon& obs,
             const std::vector<Segment>& targets) {
    if (obs.size() < 3 || !polygon_is_simple(obs)) return false;
    if (polygon_area2(obs).sign() == 0) return false;
    for (const auto& node : arr.nodes)
        if (point_in_polygon(node, obs) != Containment::outside) return false;
    size_t n = obs.size();
    for (size_t a = 0; a < arr.arcs.size(); ++a) {
        Segment s = arr.arc_segment(int(a));
        for (size_t j = 0; j < n; ++j)
            if (segments_intersect(s, {obs[j], obs[(j + 1) % n]}).kind !=
                SegIntersection::Kind::empty)
                return false;
    }
    for (const auto& v : obs)
        if (arr.face_of_point(v) != f) return false;
    for (const auto& t : targets)
        if (!segment_hits_polygon(t, obs)) return false;
    return true;
}

Polygon oriented_ccw(Polygon p) {
    if (polygon_area2(p).sign() < 0) std::reverse(p.begin(), p.end());
    return p;
}

Point loop_top(const Polygon& p) {
    Point best = p[0];
    for (const auto& q : p)
        if (q.y > best.y || (q.y == best.y && q.x < best.x)) best = q;
    return best;
}

// Splice every loop in rem out of main, highest loop first so each vertical
// passage only has to clear what is already part of main.
Polygon carve_all(Polygon main, std::vector<Polygon> rem, const Rat& nu, const Rat& cap,
                  const std::vector<Segment>& targets) {
    std::sort(rem.begin(), rem.end(), [](const Polygon& a, const Polygon& b) {
        Point ta = loop_top(a), tb = loop_top(b);
        if (ta.y != tb.y) return tb.y < ta.y;
        if (ta.x != tb.x) return ta.x < tb.x;
        return polygon_area2(a) < polygon_area2(b);
    });
    for (size_t k = 0; k < rem.size(); ++k) {
        std::vector<const Polygon*> pending;
        for (size_t r = k + 1; r < rem.size(); ++r) pending.push_back(&rem[r]);
        main = splice_remove(main, rem[k], nu, pending, cap, targets);
        if (main.empty()) return {};
    }
    return main;
}

// One inset round at a fixed offset; empty result means retry smaller.
Polygon assemble(const Arrangement& arr, int f, const Rat& lam,
                 const std::vector<Segment>& targets) {
    const Face& face = arr.faces[f];
    Rat nu(1, 8);

    if (face.bounded) {
        Polygon main = offset_walk(arr.nodes, face.outer, lam).pts;
        if (polygon_area2(main).sign() <= 0 || !polygon_is_simple(main)) return {};
        std::vector<Polygon> rem;
        for (const auto& h : face.holes) rem.push_back(offset_walk(arr.nodes, h, lam).pts);
        int jitter = 0;
        for (int v : face.isolated)
            rem.push_back(courtyard_at(arr.nodes[v], lam / Rat(2), jitter++));
        return carve_all(std::move(main), std::move(rem), nu, lam, targets);
    }

    // Unbounded face: a band with a slit around each enclosed component, a
    // small ring around each isolated node, all chained by corridors. With no
    // component walks at all, a box around everything with carved courtyards.
    if (face.holes.empty()) {
        BBox bb = bbox_of(arr.nodes);
        Rat pad = Rat(1) + lam;
        Polygon main = {{bb.xmin - pad, bb.ymin - pad},
                        {bb.xmax + pad, bb.ymin - pad},
                        {bb.xmax + pad, bb.ymax + pad},
                        {bb.xmin - pad, bb.ymax + pad}};
        std::vector<Polygon> rem;
        int jitter = 0;
        for (const auto& node : arr.nodes)
            rem.push_back(courtyard_at(node, lam / Rat(2), jitter++));
        return carve_all(std::move(main), std::move(rem), nu, lam, targets);
    }

    std::vector<Polygon> parts;
    for (const auto& h : face.holes) {
        Curve inner = offset_walk(arr.nodes, h, lam);
        Polygon outer = double_curve(inner);
        int n = int(inner.pts.size());
        std::vector<int> slit(n);
        std::iota(slit.begin(), slit.end(), 0);
        std::sort(slit.begin(), slit.end(), [&](int a, int b) {
            if (inner.pts[a].y != inner.pts[b].y) return inner.pts[a].y < inner.pts[b].y;
            if (inner.pts[a].x != inner.pts[b].x) return inner.pts[a].x < inner.pts[b].x;
            return a < b;
        });
        Polygon band;
        for (int c = 0; c < n; ++c) {
            Polygon trial = band_with_slit(inner.pts, outer, slit[c], nu, lam, targets);
            if (trial.empty() || !polygon_is_simple(trial)) continue;
            if (polygon_area2(trial).sign() == 0) continue;
            band = oriented_ccw(trial);
            break;
        }
        if (band.empty()) return {};
        parts.push_back(band);
    }
    for (int v : face.isolated) {
        Polygon ring;
        for (int shape = 0; shape < 2 && ring.empty(); ++shape) {
            Polygon I = shape == 0 ? square_at(arr.nodes[v], lam / Rat(2))
                                   : diamond_at(arr.nodes[v], lam / Rat(2));
            Polygon O = shape == 0 ? square_at(arr.nodes[v], lam)
                                   : diamond_at(arr.nodes[v], lam);
            std::reverse(I.begin(), I.end());
            std::reverse(O.begin(), O.end());
            for (int c = 0; c < 4; ++c) {
                Polygon trial = band_with_slit(I, O, c, nu, lam, targets);
                if (!trial.empty() && polygon_is_simple(trial) &&
                    polygon_area2(trial).sign() != 0) {
                    ring = oriented_ccw(trial);
                    break;
                }
            }
        }
        if (ring.empty()) return {};
        parts.push_back(ring);
    }

    Polygon main = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) {
        std::vector<const Polygon*> pending;
        for (size_t r = k + 1; r < parts.size(); ++r) pending.push_back(&parts[r]);
        main = splice_add(main, parts[k], pending, lam, targets);
        if (main.empty()) return {};
    }
    return main;
}

} // namespace

Polygon materialize_face(const Arrangement& arr, int f, const std::vector<Segment>& targets) {
    if (f < 0 || f >= int(arr.faces.size()))
        fail(ErrorKind::invariant, "materialize_face: face index out of range");
    const Face& face = arr.faces[f];

    // Primary: shrink a plain bounded face toward an interior point.
    if (face.bounded && face.holes.empty() && face.isolated.empty()) {
        Polygon walk = arr.walk_polygon(face.outer);
        Point z{Rat(0), Rat(0)};
        for (const auto& p : walk) z = z + p;
        z = Rat(1, long(walk.size())) * z;
        if (point_in_polygon(z, walk) == Containment::inside) {
            Rat sigma(1, 2);
            for (int k = 0; k < 24; ++k) {
                Polygon scaled;
                for (const auto& p : walk) scaled.push_back(z + sigma * (p - z));
                if (certify(arr, f, scaled, targets)) return oriented_ccw(scaled);
                sigma = (Rat(1) + sigma) / Rat(2);
            }
        }
    }

    // Robust route: miter inset with carved passages and corridors.
    std::vector<Point> ref;
    for (const auto& h : face.holes)
        for (int id : h) ref.push_back(arr.nodes[id]);
    if (face.bounded)
        for (int id : face.outer) ref.push_back(arr.nodes[id]);
    for (int v : face.isolated) ref.push_back(arr.nodes[v]);
    Rat lam(1, 4);
    if (!ref.empty()) {
        BBox bb = bbox_of(ref);
        Rat w = bb.xmax - bb.xmin, h = bb.ymax - bb.ymin;
        Rat span = (min(w, h).sign() > 0) ? min(w, h) : max(w, h);
        if (span.sign() > 0) lam = span / Rat(8);
    }
    for (int round = 0; round < 48; ++round) {
        Polygon obs = assemble(arr, f, lam, targets);
        if (!obs.empty() && certify(arr, f, obs, targets)) return oriented_ccw(obs);
        lam = lam / Rat(2);
    }
    fail(ErrorKind::internal, "materialize_face: no certifiable obstacle after refinement");
}

} // namespace obstra
