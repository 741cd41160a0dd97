#include "obstra/error.hpp"
#include "obstra/io.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <string>

using namespace obstra;

TEST_CASE("graph parse and canonical serialization") {
    Graph g = io::parse_graph("graph 2 1\ne 0 1\n");
    CHECK(g.n == 2);
    CHECK(g.edges == std::vector<Edge>{{0, 1}});

    // Edge lines in any order serialize sorted.
    Graph h = io::parse_graph("graph 4 3\ne 2 3\ne 0 1\ne 1 3\n");
    CHECK(io::serialize_graph(h) == "graph 4 3\ne 0 1\ne 1 3\ne 2 3\n");
    CHECK(io::parse_graph(io::serialize_graph(h)) == h);

    CHECK_THROWS_AS(io::parse_graph("graph 2 1\ne 1 0\n"), Error); // u < v required
    CHECK_THROWS_AS(io::parse_graph("graph 2 1\ne 0 2\n"), Error);
    CHECK_THROWS_AS(io::parse_graph("graph 2 2\ne 0 1\n"), Error);
    CHECK_THROWS_AS(io::parse_graph("graph 2 0\nextra\n"), Error);
    try {
        io::parse_graph("graph 3 1\nq 0 1\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("drawing parse round trip and invariants") {
    std::string text = "drawing 3 2\nv 0 0 0\nv 1 1/2 2\nv 2 3 -1/3\ne 0 1\ne 1 2\n";
    Drawing d = io::parse_drawing(text);
    CHECK(d.points[1] == Point{Rat(1, 2), Rat(2)});
    CHECK(io::serialize_drawing(d) == text);

    // Vertex lines out of order are accepted and canonicalized.
    Drawing e = io::parse_drawing("drawing 2 0\nv 1 5 5\nv 0 0 0\n");
    CHECK(io::serialize_drawing(e) == "drawing 2 0\nv 0 0 0\nv 1 5 5\n");

    try {
        io::parse_drawing("drawing 2 0\nv 0 1 1\nv 1 1 1\n");
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind == ErrorKind::invariant);
        CHECK(std::string(err.what()).find("pairwise distinct") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_drawing("drawing 2 0\nv 0 0 0\nv 0 1 1\n"), Error);
    CHECK_THROWS_AS(io::parse_drawing("drawing 1 0\nv 0 0.5 1\n"), Error);
}

TEST_CASE("scene parse round trip") {
    std::string text =
        "drawing 2 1\nv 0 0 0\nv 1 10 0\ne 0 1\n"
        "obstacle 3\n1 1\n2 1\n2 2\n"
        "obstacle 4\n5 5\n6 5\n6 6\n5 6\n";
    Scene s = io::parse_scene(text);
    CHECK(s.points().size() == 2);
    CHECK(s.obstacles.size() == 2);
    CHECK(s.enclosure == 0);
    CHECK(io::serialize_scene(s) == text);

    std::string enc =
        "drawing 1 0\nv 0 1 1\nenclosure 1\nobstacle 4\n0 0\n4 0\n4 4\n0 4\n";
    Scene t = io::parse_scene(enc);
    CHECK(t.enclosure == 1);
    CHECK(io::serialize_scene(t) == enc);

    CHECK_THROWS_AS(io::parse_scene("drawing 1 0\nv 0 0 0\nobstacle 2\n0 0\n1 1\n"), Error);
    CHECK_THROWS_AS(io::parse_scene("drawing 1 0\nv 0 0 0\nenclosure 2\nobstacle 3\n1 1\n2 1\n2 2\n"),
                    Error);
}

TEST_CASE("polygon parse round trip") {
    std::string text = "polygon 3\n0 0\n1 0\n1/2 1/2\n";
    Polygon p = io::parse_polygon(text);
    CHECK(p.size() == 3);
    CHECK(io::serialize_polygon(p) == text);
    CHECK_THROWS_AS(io::parse_polygon("polygon 2\n0 0\n1 1\n"), Error);
}

TEST_CASE("scene round trip is byte identical on generated scenes") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<long> coord(-50, 50), den(1, 9);
    for (int iter = 0; iter < 100; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        std::set<Point> pts;
        while (int(pts.size()) < n)
            pts.insert({Rat(coord(rng), den(rng)), Rat(coord(rng), den(rng))});
        std::vector<Point> v(pts.begin(), pts.end());
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) edges.push_back({a, b});
        int h = std::uniform_int_distribution<int>(0, 3)(rng);
        std::vector<Polygon> obs;
        for (int o = 0; o < h; ++o) {
            long bx = coord(rng) + 200 * (o + 1), by = coord(rng);
            obs.push_back({{Rat(bx), Rat(by)},
                           {Rat(bx + 1), Rat(by)},
                           {Rat(bx + 1), Rat(by + 1)}});
        }
        Scene s(Drawing(Graph(n, edges), v), obs);
        std::string once = io::serialize_scene(s);
        std::string twice = io::serialize_scene(io::parse_scene(once));
        CHECK(once == twice);
    }
}
