#include "obstra/cover.hpp"

#include "obstra/error.hpp"

#include <algorithm>
#include <set>

namespace obstra {

CoverInstance build_cover_instance(const Drawing& d) {
    CoverInstance inst;
    inst.arr = planarize(d);
    for (const auto& ne : d.graph.non_edges()) {
        Segment s{d.points[ne.first], d.points[ne.second]};
        auto faces = inst.arr.stabbed_faces(s);
        if (faces.empty())
            fail(ErrorKind::invariant,
                 "cover: non-edge lies on the drawing's edges, no face can block it");
        inst.nonedges.push_back(ne);
        inst.hits.push_back(std::move(faces));
    }
    return inst;
}

namespace {

std::vector<int> greedy_cover(const std::vector<std::vector<int>>& hits, int nfaces) {
    std::vector<char> covered(hits.size(), 0);
    std::vector<int> chosen;
    size_t left = hits.size();
    while (left > 0) {
        // Face covering the most uncovered non-edges; lowest index on ties.
        std::vector<long> gain(nfaces, 0);
        for (size_t e = 0; e < hits.size(); ++e)
            if (!covered[e])
                for (int f : hits[e]) ++gain[f];
        int best = int(std::max_element(gain.begin(), gain.end()) - gain.begin());
        if (gain[best] == 0) fail(ErrorKind::internal, "cover: uncoverable non-edge");
        chosen.push_back(best);
        for (size_t e = 0; e < hits.size(); ++e)
            if (!covered[e] && std::binary_search(hits[e].begin(), hits[e].end(), best)) {
                covered[e] = 1;
                --left;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Count of pairwise hit-disjoint uncovered non-edges: each needs its own face.
int disjoint_lower_bound(const std::vector<std::vector<int>>& hits,
                         const std::vector<char>& covered) {
    std::vector<size_t> order;
    for (size_t e = 0; e < hits.size(); ++e)
        if (!covered[e]) order.push_back(e);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (hits[a].size() != hits[b].size()) return hits[a].size() < hits[b].size();
        return a < b;
    });
    std::set<int> used;
    int bound = 0;
    for (size_t e : order) {
        bool disjoint = true;
        for (int f : hits[e])
            if (used.count(f)) {
                disjoint = false;
                break;
            }
        if (disjoint) {
            ++bound;
            used.insert(hits[e].begin(), hits[e].end());
        }
    }
    return bound;
}

struct Search {
    const std::vector<std::vector<int>>& hits;
    long budget;
    long nodes = 0;
    bool truncated = false;
    std::vector<int> best;
    std::vector<int> chosen;
    std::vector<char> covered;

    void run() {
        ++nodes;
        if (budget >= 0 && nodes > budget) {
            truncated = true;
            return;
        }
        int pick = -1;
        for (size_t e = 0; e < hits.size(); ++e)
            if (!covered[e] &&
                (pick == -1 || hits[e].size() < hits[size_t(pick)].size()))
                pick = int(e);
        if (pick == -1) {
            if (chosen.size() < best.size()) {
                best = chosen;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        if (chosen.size() + size_t(disjoint_lower_bound(hits, covered)) >= best.size()) return;
        for (int f : hits[size_t(pick)]) {
            std::vector<size_t> newly;
            for (size_t e = 0; e < hits.size(); ++e)
                if (!covered[e] && std::binary_search(hits[e].begin(), hits[e].end(), f)) {
                    covered[e] = 1;
                    newly.push_back(e);
                }
            chosen.push_back(f);
            run();
            chosen.pop_back();
            for (size_t e : newly) covered[e] = 0;
            if (truncated) return;
        }
    }
};

} // namespace

CoverResult min_face_cover(const CoverInstance& inst, bool exact, long budget) {
    for (const auto& h : inst.hits)
        if (h.empty()) fail(ErrorKind::invariant, "cover: empty hit set");
    int nfaces = int(inst.arr.faces.size());
    if (nfaces == 0 && !inst.hits.empty())
        fail(ErrorKind::invariant, "cover: non-edges without faces");

    CoverResult res;
    if (inst.hits.empty()) return res;

    std::vector<int> greedy = greedy_cover(inst.hits, nfaces);
    if (!exact) {
        res.size = int(greedy.size());
        res.faces = std::move(greedy);
        return res;
    }

    Search search{inst.hits, budget};
    search.best = greedy;
    search.covered.assign(inst.hits.size(), 0);
    search.run();
    res.size = int(search.best.size());
    res.faces = std::move(search.best);
    res.optimal = !search.truncated;
    res.nodes = search.nodes;
    return res;
}

Scene faces_to_obstacles(const CoverInstance& inst, const std::vector<int>& chosen) {
    // Feasibility first: every non-edge must be assigned somewhere.
    std::set<int> picked(chosen.begin(), chosen.end());
    std::vector<std::vector<Segment>> targets(inst.arr.faces.size());
    for (size_t e = 0; e < inst.nonedges.size(); ++e) {
        bool covered = false;
        Segment s{inst.arr.drawing.points[inst.nonedges[e].first],
                  inst.arr.drawing.points[inst.nonedges[e].second]};
        for (int f : inst.hits[e])
            if (picked.count(f)) {
                targets[f].push_back(s);
                covered = true;
            }
        if (!covered) fail(ErrorKind::invariant, "cover: chosen faces miss a non-edge");
    }
    std::vector<Polygon> obstacles;
    for (int f : picked) obstacles.push_back(materialize_face(inst.arr, f, targets[f]));
    return Scene(inst.arr.drawing, std::move(obstacles));
}

} // namespace obstra
