#include "obstra/graph.hpp"

#include "obstra/error.hpp"

#include <algorithm>

namespace obstra {

Graph::Graph(int n_, std::vector<Edge> es) : n(n_), edges(std::move(es)) {
    if (n < 0) fail(ErrorKind::invariant, "graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) fail(ErrorKind::invariant, "graph: self loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) fail(ErrorKind::invariant, "graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    auto it = std::unique(edges.begin(), edges.end());
    edges.erase(it, edges.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) out.push_back({u, v});
    return out;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> rank(g.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.n || rank[v] != -1)
            fail(ErrorKind::invariant, "induced_subgraph: bad vertex list");
        rank[v] = int(i);
    }
    std::vector<Edge> es;
    for (auto& [u, v] : g.edges)
        if (rank[u] != -1 && rank[v] != -1) es.push_back({rank[u], rank[v]});
    return Graph(int(keep.size()), std::move(es));
}

} // namespace obstra
