#include "obstra/visibility.hpp"

#include "obstra/error.hpp"

namespace obstra {

bool pair_visible(const Scene& s, int i, int j) {
    Segment seg{s.points()[i], s.points()[j]};
    if (s.enclosure > 0) {
        bool enclosed = false;
        for (int o = 0; o < s.enclosure && !enclosed; ++o)
            enclosed = segment_strictly_inside(seg, s.obstacles[o]);
        if (!enclosed) return false;
    }
    for (size_t o = s.enclosure; o < s.obstacles.size(); ++o)
        if (segment_hits_polygon(seg, s.obstacles[o])) return false;
    return true;
}

Graph visibility_graph(const Scene& s) {
    validate_scene(s);
    int n = int(s.points().size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pair_visible(s, i, j)) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

RepCheck is_obstacle_representation(const Scene& s, const Graph& g) {
    if (int(s.points().size()) != g.n)
        fail(ErrorKind::invariant, "representation check: label mismatch");
    Graph vis = visibility_graph(s);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            bool want = g.has_edge(i, j), got = vis.has_edge(i, j);
            if (want != got) return {false, {i, j}, want};
        }
    return {};
}

} // namespace obstra
