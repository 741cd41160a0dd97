#include "obstra/error.hpp"
#include "obstra/visibility.hpp"

#include <doctest.h>
#include "oracles.hpp"

#include <random>
#include <set>

using namespace obstra;

namespace {

Scene make_scene(std::vector<Point> pts, std::vector<Polygon> obs, int enclosure = 0) {
    int n = int(pts.size());
    return Scene(Drawing(Graph(n, {}), std::move(pts)), std::move(obs), enclosure);
}

Polygon square(const Rat& cx, const Rat& cy, const Rat& half) {
    return {{cx - half, cy - half},
            {cx + half, cy - half},
            {cx + half, cy + half},
            {cx - half, cy + half}};
}

std::vector<Point> random_points(std::mt19937_64& rng, int n, long lo, long hi) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::set<Point> pts;
    int guard = 0;
    while (int(pts.size()) < n) {
        pts.insert({Rat(coord(rng)), Rat(coord(rng))});
        if (++guard > 10000) break;
    }
    return {pts.begin(), pts.end()};
}

} // namespace

TEST_CASE("no obstacles gives the complete graph") {
    Graph g = visibility_graph(make_scene({{Rat(0), Rat(0)}, {Rat(4), Rat(1)}, {Rat(2), Rat(3)}}, {}));
    CHECK(g == Graph::complete(3));
}

TEST_CASE("a square between two points blocks them") {
    Graph g = visibility_graph(
        make_scene({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}}, {square(Rat(2), Rat(0), Rat(1, 2))}));
    CHECK(g.m() == 0);
}

TEST_CASE("boundary contact blocks") {
    // The segment passes exactly through the square's top-right corner.
    Graph g = visibility_graph(make_scene({{Rat(0), Rat(1)}, {Rat(5), Rat(0)}},
                                          {square(Rat(2), Rat(0), Rat(1, 2))}));
    CHECK(g.m() == 0);
    // Running along the top edge blocks too.
    Graph e = visibility_graph(make_scene({{Rat(0), Rat(1, 2)}, {Rat(4), Rat(1, 2)}},
                                          {square(Rat(2), Rat(0), Rat(1, 2))}));
    CHECK(e.m() == 0);
    // Lifted clear of it, the pair sees each other.
    Graph h = visibility_graph(make_scene({{Rat(0), Rat(2, 3)}, {Rat(4), Rat(1, 2) + Rat(1, 3)}},
                                          {square(Rat(2), Rat(0), Rat(1, 2))}));
    CHECK(h.m() == 1);
}

TEST_CASE("representation verifier reports the offending pair") {
    std::vector<Point> two = {{Rat(0), Rat(0)}, {Rat(4), Rat(0)}};
    auto yes = is_obstacle_representation(make_scene(two, {}), Graph(2, {{0, 1}}));
    CHECK(yes.yes);

    auto no = is_obstacle_representation(make_scene(two, {square(Rat(2), Rat(0), Rat(1, 2))}),
                                         Graph(2, {{0, 1}}));
    CHECK(!no.yes);
    CHECK(no.witness == Edge{0, 1});
    CHECK(no.missing_edge);

    auto unblocked = is_obstacle_representation(make_scene(two, {}), Graph(2, {}));
    CHECK(!unblocked.yes);
    CHECK(unblocked.witness == Edge{0, 1});
    CHECK(!unblocked.missing_edge);

    CHECK_THROWS_AS(is_obstacle_representation(make_scene(two, {}), Graph(3, {})), Error);
}

TEST_CASE("scene invariants are enforced") {
    // Point on an obstacle boundary.
    CHECK_THROWS_AS(visibility_graph(make_scene({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}},
                                                {square(Rat(1, 2), Rat(0), Rat(1, 2))})),
                    Error);
    // Touching obstacles.
    CHECK_THROWS_AS(visibility_graph(make_scene({{Rat(9), Rat(9)}, {Rat(8), Rat(7)}},
                                                {square(Rat(0), Rat(0), Rat(1)),
                                                 square(Rat(2), Rat(0), Rat(1))})),
                    Error);
    // Nested obstacles.
    CHECK_THROWS_AS(visibility_graph(make_scene({{Rat(9), Rat(9)}, {Rat(8), Rat(7)}},
                                                {square(Rat(0), Rat(0), Rat(3)),
                                                 square(Rat(0), Rat(0), Rat(1))})),
                    Error);
    // Collinear points.
    CHECK_THROWS_AS(
        visibility_graph(make_scene({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {})),
        Error);
}

TEST_CASE("agrees with the brute oracle on random scenes") {
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 500) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto pts = random_points(rng, n, -30, 30);
        if (int(pts.size()) != n || !is_general_position(pts)) continue;
        int h = std::uniform_int_distribution<int>(0, 4)(rng);
        std::vector<Polygon> obs;
        for (int o = 0; o < h; ++o) {
            std::uniform_int_distribution<long> c(-28, 28);
            obs.push_back(square(Rat(c(rng)) + Rat(1, 3), Rat(c(rng)) + Rat(1, 3), Rat(1)));
        }
        Scene s = make_scene(pts, obs);
        Graph g;
        try {
            g = visibility_graph(s);
        } catch (const Error&) {
            continue; // scene invariant violated by the sample; resample
        }
        ++done;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool vis = true;
                for (const auto& poly : obs)
                    if (oracles::segment_hits({pts[i], pts[j]}, poly)) vis = false;
                CHECK(g.has_edge(i, j) == vis);
            }
    }
}

TEST_CASE("monotonicity and induced subscenes") {
    std::mt19937_64 rng(12);
    int done = 0;
    while (done < 60) {
        auto pts = random_points(rng, 6, -20, 20);
        if (pts.size() != 6 || !is_general_position(pts)) continue;
        std::uniform_int_distribution<long> c(-18, 18);
        Polygon first = square(Rat(c(rng)) + Rat(1, 2), Rat(c(rng)) + Rat(1, 2), Rat(3, 2));
        Polygon second = square(Rat(c(rng)) + Rat(1, 2), Rat(c(rng)) + Rat(1, 2), Rat(3, 2));
        Graph base, more;
        try {
            base = visibility_graph(make_scene(pts, {first}));
            more = visibility_graph(make_scene(pts, {first, second}));
        } catch (const Error&) {
            continue;
        }
        ++done;
        for (const auto& e : more.edges) CHECK(base.has_edge(e.first, e.second));

        // Deleting a point induces the visibility subgraph.
        std::vector<Point> fewer(pts.begin(), pts.end() - 1);
        Graph sub = visibility_graph(make_scene(fewer, {first}));
        std::vector<int> keep{0, 1, 2, 3, 4};
        CHECK(sub == induced_subgraph(base, keep));
    }
}

TEST_CASE("enclosure scenes use strict interior visibility") {
    // Inside a square room, two points see each other.
    Scene room = make_scene({{Rat(1), Rat(1)}, {Rat(3), Rat(3)}},
                            {square(Rat(2), Rat(2), Rat(2))}, 1);
    CHECK(visibility_graph(room).m() == 1);

    // A U-shaped room: sight lines over the notch leave the interior.
    Polygon U = {{Rat(0), Rat(0)}, {Rat(5), Rat(0)}, {Rat(5), Rat(3)}, {Rat(4), Rat(3)},
                 {Rat(4), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(3)}, {Rat(0), Rat(3)}};
    Scene u = make_scene({{Rat(1, 2), Rat(1, 2)}, {Rat(9, 2), Rat(2)}, {Rat(5, 2), Rat(1, 2)}},
                         {U}, 1);
    Graph g = visibility_graph(u);
    CHECK(!g.has_edge(0, 1)); // crosses the notch bottom
    CHECK(g.has_edge(0, 2));  // straight along the bottom strip
    CHECK(!g.has_edge(1, 2)); // crosses the right notch wall

    // Collinear points are allowed in enclosure scenes.
    Scene line = make_scene({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)}},
                            {square(Rat(2), Rat(1), Rat(2))}, 1);
    CHECK(visibility_graph(line).m() == 3);

    // A point outside the enclosure is rejected.
    CHECK_THROWS_AS(
        visibility_graph(make_scene({{Rat(1), Rat(1)}, {Rat(9), Rat(9)}},
                                    {square(Rat(2), Rat(2), Rat(2))}, 1)),
        Error);
}
