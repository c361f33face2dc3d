#include "latkit/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "latkit/complexes.hpp"

namespace latkit {
namespace {

// ---------------------------------------------------------------------------
// naturally labeled generation (ids form a linear extension)

Poset poset_from_down_masks(const std::vector<uint64_t>& down) {
    const int n = int(down.size());
    Poset p(n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (down[y] >> x & 1) p.up.set(x, y);
    p.sync_down();
    return p;
}

// Enumerates cover antichains over the current prefix and recurses. In
// lattice mode element 0 is the bottom, every pairwise meet must exist as
// soon as both elements are present, and candidates are emitted when the
// last element's down-set is full (the top arrives last in any linear
// extension).
template <class Emit>
void generate_natural(std::vector<uint64_t>& down, int max_n, bool lattice_mode, const Emit& emit) {
    const int i = int(down.size());
    if (i >= 1) {
        if (!lattice_mode)
            emit(down);
        else if (down[i - 1] == (i == 64 ? ~uint64_t(0) : (uint64_t(1) << i) - 1))
            emit(down);
    }
    if (i == max_n) return;

    auto leq = [&](int x, int y) { return bool(down[y] >> x & 1); };
    std::vector<int> anti;
    std::function<void(int)> choose = [&](int start) {
        const bool allow = lattice_mode ? !anti.empty() || i == 0 : true;
        if (allow) {
            uint64_t d = uint64_t(1) << i;
            for (int s : anti) d |= down[s];
            bool ok = true;
            if (lattice_mode) {
                // every finalized pair must have a greatest lower bound
                for (int j = 0; j < i && ok; ++j) {
                    uint64_t common = d & down[j];
                    bool has = false;
                    for (int z = 0; z < i && !has; ++z)
                        if ((common >> z & 1) && (common & ~down[z]) == 0) has = true;
                    if (!has && common) ok = false;
                    if (!common) ok = false;  // no common lower bound at all
                }
            }
            if (ok) {
                down.push_back(d);
                generate_natural(down, max_n, lattice_mode, emit);
                down.pop_back();
            }
        }
        for (int v = start; v < i; ++v) {
            bool incomp = true;
            for (int u : anti)
                if (leq(u, v) || leq(v, u)) { incomp = false; break; }
            if (!incomp) continue;
            anti.push_back(v);
            choose(v + 1);
            anti.pop_back();
        }
    };
    choose(0);
}

}  // namespace

std::vector<Poset> enumerate_posets(int max_n) {
    if (max_n < 1 || max_n > 7) throw GuardExceeded("enumerate_posets guard: 1 <= max_n <= 7");
    std::vector<std::set<std::string>> seen(max_n + 1);
    std::vector<std::vector<std::pair<std::string, std::vector<uint64_t>>>> kept(max_n + 1);
    std::vector<uint64_t> down;
    generate_natural(down, max_n, false, [&](const std::vector<uint64_t>& d) {
        Poset p = poset_from_down_masks(d);
        std::string key = canonical_form(p);
        if (seen[d.size()].insert(key).second) kept[d.size()].push_back({key, d});
    });
    std::vector<Poset> out;
    for (int n = 1; n <= max_n; ++n) {
        std::sort(kept[n].begin(), kept[n].end());
        for (auto& [key, d] : kept[n]) out.push_back(poset_from_down_masks(d));
    }
    return out;
}

std::vector<Lattice> enumerate_lattices(int max_n) {
    if (max_n < 1 || max_n > 8) throw GuardExceeded("enumerate_lattices guard: 1 <= max_n <= 8");
    std::vector<std::set<std::string>> seen(max_n + 1);
    std::vector<std::vector<std::pair<std::string, std::vector<uint64_t>>>> kept(max_n + 1);
    std::vector<uint64_t> down;
    generate_natural(down, max_n, true, [&](const std::vector<uint64_t>& d) {
        Poset p = poset_from_down_masks(d);
        std::string key = canonical_form(p);
        if (seen[d.size()].insert(key).second) kept[d.size()].push_back({key, d});
    });
    std::vector<Lattice> out;
    for (int n = 1; n <= max_n; ++n) {
        std::sort(kept[n].begin(), kept[n].end());
        for (auto& [key, d] : kept[n]) out.push_back(lattice_from_poset(poset_from_down_masks(d)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// congruence uniform enumeration over doubling sequences

namespace {

struct CuNode {
    int n = 1;
    std::vector<uint64_t> up;  // n rows * w words
    std::vector<int> ji;       // element added at step t
    DoublingTrace trace;
    std::string key;  // dedup/sort key of the level
};

CuNode cu_root() {
    CuNode r;
    r.n = 1;
    r.up = {1};
    return r;
}

Poset poset_from_up_rows(const std::vector<uint64_t>& up, int n) {
    const int w = bits::word_count(n);
    Poset p(n);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < w; ++i) p.up.row(x)[i] = up[size_t(x) * w + i];
    p.sync_down();
    return p;
}

// Doubling on raw rows; C is the interval [a,b]. Returns the new rows plus
// the fiber minima used to carry join-irreducible labels forward.
struct RowDouble {
    int n = 0;
    std::vector<uint64_t> up;
    std::vector<int> fiber_min;
    int new_ji = -1;
};

RowDouble double_rows(const std::vector<uint64_t>& up, int n, int a, int b) {
    const int w = bits::word_count(n);
    auto row = [&](int x) { return up.data() + size_t(x) * w; };
    std::vector<uint64_t> downb(w, 0);
    for (int x = 0; x < n; ++x)
        if (bits::get(row(x), b)) bits::set(downb.data(), x);
    std::vector<int> id0(n, -1), id1(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        bool in_x = bits::get(row(a), x);                       // x >= a
        bool in_c = in_x && bits::get(downb.data(), x);         // a <= x <= b
        if (!in_x || in_c) id0[x] = next++;
    }
    const int first1 = next;
    for (int x = 0; x < n; ++x)
        if (bits::get(row(a), x)) id1[x] = next++;

    RowDouble r;
    r.n = next;
    const int nw = bits::word_count(next);
    r.up.assign(size_t(next) * nw, 0);
    auto nrow = [&](int e) { return r.up.data() + size_t(e) * nw; };
    for (int x = 0; x < n; ++x) {
        if (id0[x] >= 0) {
            uint64_t* out = nrow(id0[x]);
            bits::for_each(row(x), w, [&](int y) {
                if (id0[y] >= 0) bits::set(out, id0[y]);
                if (id1[y] >= 0) bits::set(out, id1[y]);
            });
        }
        if (id1[x] >= 0) {
            uint64_t* out = nrow(id1[x]);
            bits::for_each(row(x), w, [&](int y) {
                if (id1[y] >= 0) bits::set(out, id1[y]);
            });
        }
    }
    r.fiber_min.resize(n);
    for (int x = 0; x < n; ++x) r.fiber_min[x] = id0[x] >= 0 ? id0[x] : id1[x];
    r.new_ji = id1[a];
    (void)first1;
    return r;
}

std::string cu_key(const CuNode& node, bool labeled) {
    Poset p = poset_from_up_rows(node.up, node.n);
    std::vector<int> colors;
    if (labeled) {
        colors.assign(node.n, 0);
        for (size_t t = 0; t < node.ji.size(); ++t) colors[node.ji[t]] = int(t) + 1;
    }
    return canonical_form(p, colors);
}

// Expands one BFS level: doubles every interval of every node. Dedups on the
// node key (labeled for the census, unlabeled for realization searches);
// optional filter runs after dedup. Output is sorted by key.
std::vector<CuNode> cu_expand(const std::vector<CuNode>& level, bool labeled, int jobs,
                              const std::function<bool(const CuNode&)>& keep) {
    std::mutex mtx;
    std::set<std::string> seen;
    std::vector<CuNode> out;
    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            size_t idx = cursor.fetch_add(1);
            if (idx >= level.size()) break;
            const CuNode& node = level[idx];
            const int n = node.n, w = bits::word_count(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (!bits::get(node.up.data() + size_t(a) * w, b)) continue;
                    RowDouble d = double_rows(node.up, n, a, b);
                    CuNode child;
                    child.n = d.n;
                    child.up = std::move(d.up);
                    child.ji.reserve(node.ji.size() + 1);
                    for (int j : node.ji) child.ji.push_back(d.fiber_min[j]);
                    child.ji.push_back(d.new_ji);
                    child.trace = node.trace;
                    child.trace.emplace_back(a, b);
                    child.key = cu_key(child, labeled);
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (!seen.insert(child.key).second) continue;
                    }
                    if (keep && !keep(child)) continue;
                    std::lock_guard<std::mutex> lock(mtx);
                    out.push_back(std::move(child));
                }
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::sort(out.begin(), out.end(), [](const CuNode& a, const CuNode& b) { return a.key < b.key; });
    return out;
}

Lattice cu_lattice(const CuNode& node) { return lattice_from_poset(poset_from_up_rows(node.up, node.n)); }

// Per-emission invariants: semidistributive, flag canonical join complex,
// exactly one new join-irreducible per doubling step.
CongruenceUniformEntry cu_finalize(const CuNode& node) {
    CongruenceUniformEntry e;
    e.lattice = cu_lattice(node);
    e.trace = node.trace;
    e.ji_by_step.assign(node.ji.begin(), node.ji.end());
    if (!is_semidistributive_bez(e.lattice))
        throw std::logic_error("congruence uniform emission is not semidistributive");
    auto cjc = canonical_join_complex(e.lattice);
    auto flag = is_flag(cjc.complex);
    if (!flag.flag) throw std::logic_error("congruence uniform emission has a non-flag complex");
    auto ji = join_irreducibles(e.lattice);
    std::vector<Elem> sorted_steps(e.ji_by_step);
    std::sort(sorted_steps.begin(), sorted_steps.end());
    if (ji != sorted_steps)
        throw std::logic_error("doubling steps do not account for the join-irreducibles");
    // labeled canonical join graph: vertex t <-> step t+1
    Graph g;
    g.n = int(e.ji_by_step.size());
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t) {
            uint64_t mask = cjc.complex.mask_of({e.ji_by_step[s], e.ji_by_step[t]});
            if (cjc.complex.has_face(mask)) g.edges.emplace_back(s, t);
        }
    g.normalize();
    for (int s = 0; s < g.n; ++s) g.vertex_ids.push_back(s + 1);
    e.labeled_cjg = g;
    return e;
}

}  // namespace

ReplayResult replay_doubling_trace(const DoublingTrace& trace) {
    CuNode node = cu_root();
    for (auto [a, b] : trace) {
        if (a < 0 || b < 0 || a >= node.n || b >= node.n)
            throw std::invalid_argument("trace endpoint out of range");
        const int w = bits::word_count(node.n);
        if (!bits::get(node.up.data() + size_t(a) * w, b)) throw NotComparable(a, b);
        RowDouble d = double_rows(node.up, node.n, a, b);
        std::vector<int> ji;
        for (int j : node.ji) ji.push_back(d.fiber_min[j]);
        ji.push_back(d.new_ji);
        node.n = d.n;
        node.up = std::move(d.up);
        node.ji = std::move(ji);
    }
    ReplayResult r;
    r.lattice = cu_lattice(node);
    r.ji_by_step.assign(node.ji.begin(), node.ji.end());
    return r;
}

std::vector<CongruenceUniformEntry> enumerate_congruence_uniform(int k, int jobs) {
    if (k < 1 || k > 6) throw GuardExceeded("enumerate_congruence_uniform guard: 1 <= k <= 6");
    std::vector<CuNode> level = {cu_root()};
    for (int step = 1; step <= k; ++step) level = cu_expand(level, true, jobs, nullptr);
    std::vector<CongruenceUniformEntry> out;
    out.reserve(level.size());
    for (const CuNode& node : level) out.push_back(cu_finalize(node));
    return out;
}

std::vector<std::vector<CensusRecord>> census_labeled_cjgs(int max_k, int jobs) {
    if (max_k < 1 || max_k > 6) throw GuardExceeded("census guard: 1 <= max_k <= 6");
    std::vector<std::vector<CensusRecord>> result(max_k + 1);
    std::vector<CuNode> level = {cu_root()};
    for (int step = 1; step <= max_k; ++step) {
        level = cu_expand(level, true, jobs, nullptr);
        // bucket by exact labeled edge set
        std::map<std::vector<std::pair<int, int>>, CensusRecord> buckets;
        std::map<std::vector<std::pair<int, int>>, std::set<std::string>> classes;
        for (const CuNode& node : level) {
            CongruenceUniformEntry e = cu_finalize(node);
            std::vector<std::pair<int, int>> edges;
            for (auto [s, t] : e.labeled_cjg.edges) edges.emplace_back(s + 1, t + 1);
            auto it = buckets.find(edges);
            if (it == buckets.end()) {
                CensusRecord rec;
                rec.n = step;
                rec.edges = edges;
                rec.witness_trace = node.trace;
                buckets.emplace(edges, std::move(rec));
            }
            classes[edges].insert(canonical_form(e.lattice.poset));
        }
        for (auto& [edges, rec] : buckets) {
            rec.lattice_count = (long long)classes[edges].size();
            result[step].push_back(std::move(rec));
        }
    }
    return result;
}

std::optional<Realization> realize_graph_as_cjg(const Graph& g, int max_steps, int jobs) {
    if (max_steps < 0 || max_steps > 7) throw GuardExceeded("realize guard: max_steps <= 7");
    if (g.n == 0) return Realization{cu_lattice(cu_root()), {}};
    if (g.n > max_steps) return std::nullopt;
    std::vector<CuNode> level = {cu_root()};
    for (int step = 1; step <= g.n; ++step) {
        const bool last = (step == g.n);
        auto keep = [&](const CuNode& node) {
            CongruenceUniformEntry e = cu_finalize(node);
            Graph cjg = e.labeled_cjg;  // labels irrelevant for the structural test
            return last ? graphs_isomorphic(cjg, g) : is_induced_subgraph_of(cjg, g);
        };
        level = cu_expand(level, false, jobs, keep);
        if (level.empty()) return std::nullopt;
        if (last) return Realization{cu_lattice(level.front()), level.front().trace};
    }
    return std::nullopt;
}

ChordalRealization realize_chordal(const Graph& g) {
    const int n = g.n;
    if (n < 1 || n > 7) throw GuardExceeded("realize_chordal guard: 1 <= vertices <= 7");
    // ordering v_n < ... < v_1: vertex i-1 (0-based) is v_i and is added at step i.
    // PEO: earlier-or-self neighbors of each vertex form a clique.
    for (int i = 0; i < n; ++i) {
        std::vector<int> earlier;
        for (int j = 0; j < i; ++j)
            if (g.adjacent(i, j)) earlier.push_back(j);
        for (size_t x = 0; x < earlier.size(); ++x)
            for (size_t y = x + 1; y < earlier.size(); ++y)
                if (!g.adjacent(earlier[x], earlier[y])) throw NotPEO(i + 1);
    }
    // nested neighborhoods: N(v_{i+1}) \ {v_i} inside N(v_i)
    for (int i = 0; i + 1 < n; ++i)
        for (int u : g.neighbors(i + 1))
            if (u != i && !g.adjacent(i, u)) throw NeighborhoodNotNested(i + 1);

    ChordalRealization r;
    Poset one(1);
    Lattice cur = lattice_from_poset(one);
    std::vector<Elem> ji_of;  // label t-1 -> element id in cur
    Elem a0_prev = 0, ji_prev = -1;
    for (int step = 1; step <= n; ++step) {
        Elem lo, hi;
        if (step == 1) {
            lo = hi = 0;
        } else {
            Elem y = ji_prev;
            for (int j = 0; j < step - 2; ++j)
                if (g.adjacent(step - 1, j)) y = cur.join(y, ji_of[j]);
            const bool adjacent_prev = g.adjacent(step - 1, step - 2);
            lo = adjacent_prev ? a0_prev : ji_prev;
            hi = y;
        }
        DoubleResult d = double_interval(cur, lo, hi);
        for (auto& j : ji_of) j = d.fiber_min[j];
        ji_of.push_back(d.new_irreducible);
        a0_prev = d.fiber_min[lo];
        ji_prev = d.new_irreducible;
        r.trace.emplace_back(lo, hi);
        cur = std::move(d.lattice);
    }
    r.lattice = std::move(cur);
    r.ji_by_step = ji_of;
    auto cjc = canonical_join_complex(r.lattice);
    Graph out;
    out.n = n;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (cjc.complex.has_face(cjc.complex.mask_of({ji_of[s], ji_of[t]}))) out.edges.emplace_back(s, t);
    out.normalize();
    for (int s = 0; s < n; ++s) out.vertex_ids.push_back(s + 1);
    r.labeled_cjg = out;
    if (!(r.labeled_cjg == g))
        throw std::logic_error("chordal realization produced a different labeled graph");
    return r;
}

ClosureReport census_subgraph_closure_report(int k, int jobs) {
    if (k < 1 || k > 6) throw GuardExceeded("closure report guard: 1 <= k <= 6");
    auto census = census_labeled_cjgs(k, jobs);
    std::set<std::vector<std::pair<int, int>>> at_k, below;
    for (const auto& rec : census[k]) at_k.insert(rec.edges);
    if (k >= 2)
        for (const auto& rec : census[k - 1]) below.insert(rec.edges);
    ClosureReport report;
    for (const auto& rec : census[k]) {
        for (auto [a, b] : rec.edges) {
            std::vector<std::pair<int, int>> del;
            for (auto e : rec.edges)
                if (e != std::make_pair(a, b)) del.push_back(e);
            ClosureRow row;
            row.n = k;
            row.edges = rec.edges;
            row.deleted = "edge " + std::to_string(a) + "-" + std::to_string(b);
            row.in_census = at_k.count(del) != 0;
            report.closed = report.closed && row.in_census;
            report.rows.push_back(std::move(row));
        }
        for (int v = 1; v <= k; ++v) {
            std::vector<std::pair<int, int>> del;
            for (auto [a, b] : rec.edges) {
                if (a == v || b == v) continue;
                del.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
            }
            std::sort(del.begin(), del.end());
            ClosureRow row;
            row.n = k;
            row.edges = rec.edges;
            row.deleted = "vertex " + std::to_string(v);
            row.in_census = (k == 1) ? del.empty() : below.count(del) != 0;
            report.closed = report.closed && row.in_census;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace latkit
