#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latkit/bits.hpp"
#include "latkit/errors.hpp"
#include "latkit/graph.hpp"

namespace latkit {

using Elem = int;

// Finite poset on dense ids 0..n-1. Both direction matrices are kept so that
// up-sets and down-sets are single row reads; labels are cosmetic only.
struct Poset {
    int n = 0;
    BitMatrix up;    // up.row(x)   = { y : x <= y }
    BitMatrix down;  // down.row(x) = { y : y <= x }
    std::vector<std::string> labels;

    Poset() = default;
    explicit Poset(int n_) : n(n_), up(n_), down(n_) {
        for (int i = 0; i < n; ++i) {
            up.set(i, i);
            down.set(i, i);
        }
    }

    bool leq(int x, int y) const { return up.get(x, y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }

    const std::string& label(int x) const { return labels[x]; }
    bool has_labels() const { return int(labels.size()) == n; }

    // Rebuilds `down` as the transpose of `up`.
    void sync_down();
    // Checks reflexivity/antisymmetry/transitivity; throws on violation.
    void validate() const;
};

struct Antichain {
    std::vector<Elem> elements;  // sorted ascending

    Antichain() = default;
    explicit Antichain(std::vector<Elem> e) : elements(std::move(e)) {
        std::sort(elements.begin(), elements.end());
    }
    bool operator==(const Antichain&) const = default;
    auto operator<=>(const Antichain&) const = default;
    size_t size() const { return elements.size(); }
};

Poset poset_from_covers(int n, const std::vector<std::pair<Elem, Elem>>& covers);

// Exactly the pairs x <. y of the transitive reduction, sorted (lower, upper).
std::vector<std::pair<Elem, Elem>> cover_pairs(const Poset& p);
std::vector<Elem> cov_down(const Poset& p, Elem w);
std::vector<Elem> cov_up(const Poset& p, Elem w);

bool is_antichain(const Poset& p, const std::vector<Elem>& elems);

long long mobius(const Poset& p, Elem x, Elem y);
// mu(x, y) for all y >= x; entries for y not above x are 0.
std::vector<long long> mobius_row(const Poset& p, Elem x);

// All antichains including the empty one, in lexicographic order.
std::vector<Antichain> antichains(const Poset& p);

// I_A: the order ideal generated by A (down-closure), sorted.
std::vector<Elem> ideal_of(const Poset& p, const Antichain& a);
// Minimal elements of the complement of an ideal (the antichain B with ideal = I^B).
std::vector<Elem> co_ideal_minimals(const Poset& p, const std::vector<Elem>& ideal);
// I^B: the ideal whose complement has minimal-element set B.
std::vector<Elem> co_ideal_of(const Poset& p, const Antichain& b);

Antichain rowmotion(const Poset& p, const Antichain& a);

Graph incomparability_graph(const Poset& p);

// Canonical byte string: equal iff isomorphic (color-preserving when colors
// are supplied). Degree/level refinement plus backtracking.
std::string canonical_form(const Poset& p, const std::vector<int>& colors = {});
bool posets_isomorphic(const Poset& a, const Poset& b);

Poset dual_poset(const Poset& p);

}  // namespace latkit
