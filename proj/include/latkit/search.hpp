#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/constructions.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// One representative per isomorphism class, all sizes 1..max_n, ordered by
// (size, canonical form). Guard max_n <= 8.
std::vector<Lattice> enumerate_lattices(int max_n);

// All unlabeled posets with 1..max_n elements (guard max_n <= 7).
std::vector<Poset> enumerate_posets(int max_n);

// Interval endpoints in the successively built lattices, starting from the
// one-element lattice; replay is deterministic and id-exact.
using DoublingTrace = std::vector<std::pair<Elem, Elem>>;

struct ReplayResult {
    Lattice lattice;
    std::vector<Elem> ji_by_step;  // step t (0-based) -> the join-irreducible added
};
ReplayResult replay_doubling_trace(const DoublingTrace& trace);

struct CongruenceUniformEntry {
    Lattice lattice;
    DoublingTrace trace;
    std::vector<Elem> ji_by_step;
    Graph labeled_cjg;  // vertex t-1 <-> doubling step t
};

// All congruence uniform lattices reachable by exactly k interval doublings,
// one per label-preserving isomorphism class (guard k <= 6). Each emission is
// checked to be semidistributive with a flag canonical join complex and one
// new join-irreducible per step.
std::vector<CongruenceUniformEntry> enumerate_congruence_uniform(int k, int jobs = 1);

struct CensusRecord {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // labeled edges, 1-based labels
    long long lattice_count = 0;             // distinct unlabeled lattices sharing the graph
    DoublingTrace witness_trace;
};

// result[n] = sorted records for graphs on n labels, n = 1..max_k.
std::vector<std::vector<CensusRecord>> census_labeled_cjgs(int max_k, int jobs = 1);

struct Realization {
    Lattice lattice;
    DoublingTrace trace;
};

// First congruence uniform lattice (breadth-first over doubling sequences)
// whose unlabeled canonical join graph is isomorphic to g; frontier entries
// whose graph cannot embed into g are pruned. Guard max_steps <= 7.
std::optional<Realization> realize_graph_as_cjg(const Graph& g, int max_steps, int jobs = 1);

// Constructive realization of a labeled graph whose ordering v_n < ... < v_1
// is a perfect elimination ordering with nested neighborhoods
// N(v_{i+1}) \ {v_i} contained in N(v_i). Vertex i (0-based) carries label i+1.
struct ChordalRealization {
    Lattice lattice;
    DoublingTrace trace;
    std::vector<Elem> ji_by_step;
    Graph labeled_cjg;
};
ChordalRealization realize_chordal(const Graph& g);

struct ClosureRow {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::string deleted;  // "edge i-j" or "vertex v"
    bool in_census = false;
};
struct ClosureReport {
    std::vector<ClosureRow> rows;
    bool closed = true;
};

// For every labeled graph in G_k: does each one-edge deletion stay in G_k and
// each one-vertex deletion land in G_{k-1}? An observation report only.
ClosureReport census_subgraph_closure_report(int k, int jobs = 1);

}  // namespace latkit
