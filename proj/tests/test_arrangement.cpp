#include "obstra/arrangement.hpp"
#include "obstra/error.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace obstra;

namespace {

Drawing make_drawing(std::vector<std::pair<long, long>> pts, std::vector<Edge> edges) {
    std::vector<Point> v;
    for (auto [x, y] : pts) v.push_back({Rat(x), Rat(y)});
    int n = int(v.size());
    return Drawing(Graph(n, std::move(edges)), std::move(v));
}

} // namespace

TEST_CASE("two disjoint segments") {
    auto A = planarize(make_drawing({{0, 0}, {1, 0}, {0, 1}, {1, 2}}, {{0, 1}, {2, 3}}));
    CHECK(A.nodes.size() == 4);
    CHECK(A.arcs.size() == 2);
    CHECK(A.faces.size() == 1);
    CHECK(!A.faces[0].bounded);
    CHECK(A.unbounded == 0);
    CHECK(A.components == 2);
}

TEST_CASE("one crossing pair of segments") {
    auto A = planarize(make_drawing({{0, 0}, {4, 4}, {0, 4}, {4, 0}}, {{0, 1}, {2, 3}}));
    CHECK(A.nodes.size() == 5);
    CHECK(A.arcs.size() == 4);
    CHECK(A.faces.size() == 1);
    bool found = false;
    for (const auto& p : A.nodes)
        if (p == Point{Rat(2), Rat(2)}) found = true;
    CHECK(found);
}

TEST_CASE("triangle has two faces") {
    auto A = planarize(make_drawing({{0, 0}, {4, 0}, {0, 4}}, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(A.nodes.size() == 3);
    CHECK(A.arcs.size() == 3);
    CHECK(A.faces.size() == 2);
    CHECK(A.faces[0].bounded);       // bounded sorts before unbounded on ties
    CHECK(A.unbounded == 1);
    CHECK(A.faces[0].outer.size() == 3);
    CHECK(A.faces[1].holes.size() == 1);
    CHECK(polygon_area2(A.walk_polygon(A.faces[0].outer)) > Rat(0));
    CHECK(polygon_area2(A.walk_polygon(A.faces[1].holes[0])) < Rat(0));
}

TEST_CASE("convex K4") {
    auto A = planarize(make_drawing({{0, 0}, {2, 0}, {2, 2}, {0, 2}},
                                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(A.nodes.size() == 5);
    CHECK(A.arcs.size() == 8);
    CHECK(A.faces.size() == 5);
    int bounded = 0;
    for (const auto& f : A.faces) bounded += f.bounded ? 1 : 0;
    CHECK(bounded == 4);
    CHECK(A.components == 1);

    // An edge of the drawing stabs no face.
    CHECK(A.stabbed_faces({{Rat(0), Rat(0)}, {Rat(2), Rat(0)}}).empty());
    CHECK(A.stabbed_faces({{Rat(0), Rat(0)}, {Rat(2), Rat(2)}}).empty());
}

TEST_CASE("path on triangle corners stabs the single face") {
    auto A = planarize(make_drawing({{0, 0}, {2, 0}, {1, 1}}, {{0, 1}, {1, 2}}));
    CHECK(A.faces.size() == 1);
    auto st = A.stabbed_faces({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
    CHECK(st == std::vector<int>{0});
}

TEST_CASE("square cycle non-edge stabs the bounded face") {
    auto A = planarize(
        make_drawing({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(A.faces.size() == 2);
    int inner = A.faces[0].bounded ? 0 : 1;
    auto st = A.stabbed_faces({{Rat(0), Rat(0)}, {Rat(2), Rat(2)}});
    CHECK(st == std::vector<int>{inner});
}

TEST_CASE("nested components become holes") {
    auto A = planarize(make_drawing({{0, 0}, {10, 0}, {0, 10}, {1, 1}, {2, 1}, {1, 2}},
                                    {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
    CHECK(A.nodes.size() == 6);
    CHECK(A.arcs.size() == 6);
    CHECK(A.faces.size() == 3);
    CHECK(A.components == 2);

    int big = A.face_of_point({Rat(3), Rat(3)});
    int small = A.face_of_point({Rat(3, 2), Rat(5, 4)});
    int out = A.face_of_point({Rat(-1), Rat(-1)});
    REQUIRE(big >= 0);
    REQUIRE(small >= 0);
    CHECK(out == A.unbounded);
    CHECK(big != small);
    CHECK(A.faces[big].bounded);
    CHECK(A.faces[small].bounded);
    CHECK(A.faces[big].holes.size() == 1);
    CHECK(A.faces[small].holes.empty());

    // A segment across both triangles stabs both bounded faces.
    auto st = A.stabbed_faces({{Rat(1, 2), Rat(3, 2)}, {Rat(3), Rat(1)}});
    CHECK(st == std::vector<int>{std::min(big, small), std::max(big, small)});
}

TEST_CASE("isolated vertices are tracked per face") {
    auto A = planarize(make_drawing({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {9, 2}},
                                    {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(A.faces.size() == 2);
    int inner = A.faces[0].bounded ? 0 : 1;
    CHECK(A.faces[inner].isolated.size() == 1);
    CHECK(A.faces[A.unbounded].isolated.size() == 1);
    CHECK(A.nodes[A.faces[inner].isolated[0]] == Point{Rat(1), Rat(1)});
    // The open faces avoid the punctures, but stabbing ignores them.
    CHECK(A.face_of_point({Rat(1), Rat(1)}) == -1);
}

TEST_CASE("degenerate drawings are rejected") {
    CHECK_THROWS_AS(planarize(make_drawing({{0, 0}, {1, 1}, {2, 2}}, {{0, 1}})), Error);
    CHECK_THROWS_AS(
        planarize(make_drawing({{0, 0}, {4, 4}, {0, 4}, {4, 0}, {2, 1}, {2, 5}},
                               {{0, 1}, {2, 3}, {4, 5}})),
        Error);
}

TEST_CASE("random drawings satisfy Euler and tile the plane") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-12, 12);
    int accepted = 0;
    while (accepted < 40) {
        int n = std::uniform_int_distribution<int>(3, 7)(rng);
        std::set<Point> pts;
        while (int(pts.size()) < n) pts.insert({Rat(coord(rng)), Rat(coord(rng))});
        std::vector<Point> v(pts.begin(), pts.end());
        if (!is_general_position(v)) continue;
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) edges.push_back({a, b});
        Arrangement A;
        try {
            A = planarize(Drawing(Graph(n, edges), v));
        } catch (const Error&) {
            continue; // three concurrent edges in the sample
        }
        ++accepted;
        CHECK(long(A.nodes.size()) - long(A.arcs.size()) + long(A.faces.size()) ==
              1 + A.components);
        int unbounded_count = 0;
        for (const auto& f : A.faces) unbounded_count += f.bounded ? 0 : 1;
        CHECK(unbounded_count == 1);

        // Tiling: a random point off the union lies in exactly one face,
        // checked against the face regions read off outer and hole walks.
        for (int trial = 0; trial < 15; ++trial) {
            Point p{Rat(coord(rng), 7), Rat(coord(rng), 7)};
            if (A.point_on_union(p)) continue;
            int f = A.face_of_point(p);
            REQUIRE(f >= 0);
            int members = 0, hit = -1;
            for (size_t fi = 0; fi < A.faces.size(); ++fi) {
                const auto& face = A.faces[fi];
                bool in = !face.bounded ||
                          point_in_polygon(p, A.walk_polygon(face.outer)) == Containment::inside;
                for (const auto& hole : face.holes)
                    if (in && point_in_polygon(p, A.walk_polygon(hole)) != Containment::outside)
                        in = false;
                if (in) {
                    ++members;
                    hit = int(fi);
                }
            }
            CHECK(members == 1);
            CHECK(hit == f);
        }
    }
}
