#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace latkit {

// Simple undirected graph on vertices 0..n-1. `vertex_ids` optionally maps
// graph vertices back to the domain objects they came from (lattice elements,
// doubling-step labels); structural operations ignore it.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized i<j, sorted
    std::vector<int> vertex_ids;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) { normalize(); }

    void normalize() {
        for (auto& [a, b] : edges)
            if (a > b) std::swap(a, b);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool adjacent(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (auto [a, b] : edges) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int degree(int v) const { return int(neighbors(v).size()); }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
std::string graph_canonical_form(const Graph& g);
bool graphs_isomorphic(const Graph& g1, const Graph& g2);

// True when g embeds as an induced subgraph of target (used to prune
// realization searches; brute force, intended for <= ~8 vertices).
bool is_induced_subgraph_of(const Graph& g, const Graph& target);

}  // namespace latkit
