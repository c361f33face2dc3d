#include <algorithm>
#include <cstring>
#include <map>
#include <tuple>
#include <vector>

#include "latkit/graph.hpp"
#include "latkit/poset.hpp"

namespace latkit {
namespace {

// Shared individualization-refinement core. `lower`/`upper` are the two
// adjacency directions used to build signatures (for graphs, `upper` is
// empty and `lower` holds neighbors). Equal canonical strings <=> isomorphic
// as (colored) structures, because the full branch set is explored.
struct Canonicalizer {
    int n;
    const std::vector<std::vector<int>>* lower;
    const std::vector<std::vector<int>>* upper;

    // Refines until the class count stops growing; colors end up dense.
    void refine(std::vector<int>& color) const {
        int classes = dense(color);
        while (true) {
            std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> lo, hi;
                for (int u : (*lower)[v]) lo.push_back(color[u]);
                for (int u : (*upper)[v]) hi.push_back(color[u]);
                std::sort(lo.begin(), lo.end());
                std::sort(hi.begin(), hi.end());
                sig[v] = {color[v], std::move(lo), std::move(hi)};
            }
            std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> rank;
            for (int v = 0; v < n; ++v) rank[sig[v]] = 0;
            int next = 0;
            for (auto& [k, r] : rank) r = next++;
            if (next == classes) break;
            classes = next;
            for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
        }
    }

    static int dense(std::vector<int>& color) {
        std::vector<int> vals(color);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (auto& c : color) c = int(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
        return int(vals.size());
    }

    template <class BuildString>
    void search(std::vector<int> color, std::string& best, bool& have, const BuildString& build) const {
        refine(color);
        int cell = -1;
        for (int c = 0; c < n && cell < 0; ++c) {
            int count = 0;
            for (int v = 0; v < n; ++v) count += (color[v] == c);
            if (count >= 2) cell = c;
            if (count == 0) break;  // colors dense: first empty value means discrete
        }
        if (cell < 0) {
            std::string s = build(color);
            if (!have || s < best) best = std::move(s), have = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell) continue;
            std::vector<int> child(color);
            child[v] = n;  // fresh maximal color; re-densified by refine
            search(std::move(child), best, have, build);
        }
    }
};

std::string pack_header(int n) {
    std::string s;
    s.push_back(char(n & 0xff));
    s.push_back(char((n >> 8) & 0xff));
    return s;
}

}  // namespace

std::string canonical_form(const Poset& p, const std::vector<int>& colors) {
    const int n = p.n;
    std::vector<std::vector<int>> lo(n), hi(n);
    for (auto [l, u] : cover_pairs(p)) {
        hi[l].push_back(u);
        lo[u].push_back(l);
    }
    std::vector<int> init(n);
    {
        std::vector<std::tuple<int, int, int, int, int>> key(n);
        for (int v = 0; v < n; ++v)
            key[v] = {colors.empty() ? 0 : colors[v], bits::popcount(p.down.row(v), p.down.words()),
                      bits::popcount(p.up.row(v), p.up.words()), int(lo[v].size()), int(hi[v].size())};
        std::vector<std::tuple<int, int, int, int, int>> sorted(key);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            init[v] = int(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
    }
    Canonicalizer cz{n, &lo, &hi};
    auto build = [&](const std::vector<int>& color) {
        std::vector<int> perm(n);  // perm[pos] = element
        for (int v = 0; v < n; ++v) perm[color[v]] = v;
        std::string s = pack_header(n);
        int acc = 0, nb = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                acc = (acc << 1) | int(p.leq(perm[i], perm[j]));
                if (++nb == 8) s.push_back(char(acc)), acc = 0, nb = 0;
            }
        if (nb) s.push_back(char(acc << (8 - nb)));
        if (!colors.empty())
            for (int i = 0; i < n; ++i) {
                s.push_back(char(colors[perm[i]] & 0xff));
                s.push_back(char((colors[perm[i]] >> 8) & 0xff));
            }
        return s;
    };
    std::string best;
    bool have = false;
    cz.search(init, best, have, build);
    return best;
}

std::string graph_canonical_form(const Graph& g) {
    const int n = g.n;
    std::vector<std::vector<int>> nbr(n), none(n);
    for (auto [a, b] : g.edges) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    std::vector<int> init(n);
    for (int v = 0; v < n; ++v) init[v] = int(nbr[v].size());
    Canonicalizer cz{n, &nbr, &none};
    auto build = [&](const std::vector<int>& color) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[color[v]] = v;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        std::string s = pack_header(n);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges) {
            int i = pos[a], j = pos[b];
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
        std::sort(edges.begin(), edges.end());
        for (auto [i, j] : edges) {
            s.push_back(char(i));
            s.push_back(char(j));
        }
        return s;
    };
    std::string best;
    bool have = false;
    cz.search(init, best, have, build);
    return best;
}

bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return false;
    std::vector<int> d1, d2;
    for (int v = 0; v < g1.n; ++v) d1.push_back(g1.degree(v)), d2.push_back(g2.degree(v));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
    return graph_canonical_form(g1) == graph_canonical_form(g2);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out;
    out.n = int(vertices.size());
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < out.n; ++i) pos[vertices[i]] = i;
    for (auto [a, b] : g.edges)
        if (pos[a] >= 0 && pos[b] >= 0) out.edges.emplace_back(pos[a], pos[b]);
    for (int v : vertices)
        out.vertex_ids.push_back(v < int(g.vertex_ids.size()) ? g.vertex_ids[v] : v);
    out.normalize();
    return out;
}

bool is_induced_subgraph_of(const Graph& g, const Graph& target) {
    if (g.n > target.n) return false;
    std::vector<int> map(g.n, -1);
    std::vector<char> used(target.n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.n) return true;
        for (int t = 0; t < target.n; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) != target.adjacent(map[u], t)) ok = false;
            if (!ok) continue;
            map[v] = t;
            used[t] = 1;
            if (rec(v + 1)) return true;
            used[t] = 0;
        }
        return false;
    };
    return rec(0);
}

}  // namespace latkit
