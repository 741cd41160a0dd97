#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace obstra {

using Edge = std::pair<int, int>; // normalized u < v

// Simple undirected graph on vertices 0..n-1 with a sorted edge set.
struct Graph {
    int n = 0;
    std::vector<Edge> edges; // sorted, unique, u < v

    Graph() = default;
    Graph(int n_, std::vector<Edge> es); // validates, normalizes, sorts

    bool has_edge(int u, int v) const;
    std::vector<Edge> non_edges() const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    bool connected() const; // true for n <= 1
    int m() const { return int(edges.size()); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n == b.n && a.edges == b.edges;
    }

    static Graph complete(int n);
};

// Subgraph induced on keep (sorted vertex ids); vertices are relabeled by rank.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

} // namespace obstra
