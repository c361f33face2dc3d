#pragma once

#include <optional>
#include <vector>

#include "latkit/complexes.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Element ids of the product are row-major pairs: id = x1 * n2 + x2.
Lattice direct_product(const Lattice& l1, const Lattice& l2);

// Stacks l2 above l1; ids are l1 elements then l2 elements shifted by n1.
Lattice ordinal_sum(const Lattice& l1, const Lattice& l2);

// Identifies top(l1) with bottom(l2); l2 elements shift by n1 - 1 (the glued
// element keeps top(l1)'s id).
Lattice wedge_sum(const Lattice& l1, const Lattice& l2);

bool is_order_convex(const Lattice& l, const std::vector<Elem>& c);

// Day doubling of an order-convex set. Ids list (x,0) for x in (L\X)|C in
// ascending x, then (x,1) for x in X ascending.
struct DoubleResult {
    Lattice lattice;
    std::vector<Elem> pi;         // new element -> base element (the projection)
    std::vector<int> eps;         // new element -> 0/1 component
    std::vector<Elem> fiber_min;  // base element -> minimal element of its fiber
    Elem new_irreducible = 0;     // (a,1) for interval doublings, with a = min of C
};
DoubleResult double_lattice(const Lattice& l, const std::vector<Elem>& convex_set);
DoubleResult double_interval(const Lattice& l, Elem a, Elem b);

struct Congruence {
    std::vector<int> class_of;              // element -> class id
    std::vector<std::vector<Elem>> classes;  // sorted members; classes ordered by min element

    int num_classes() const { return int(classes.size()); }
    bool same(Elem x, Elem y) const { return class_of[x] == class_of[y]; }
};

Congruence congruence_from_partition(const Lattice& l, const std::vector<int>& class_of);

// Smallest lattice congruence identifying each listed join-irreducible with
// its unique lower cover (union-find closure of the vee/wedge compatibility
// obligations).
Congruence congruence_generated(const Lattice& l, const std::vector<Elem>& contracted);

// Checks the finite-lattice axioms (interval classes, order-preserving
// down/up projections); throws NotACongruence with the violated axiom.
void check_congruence(const Lattice& l, const Congruence& theta);
bool is_congruence(const Lattice& l, const Congruence& theta);

std::vector<Elem> contracted_join_irreducibles(const Lattice& l, const Congruence& theta);

struct QuotientResult {
    Lattice lattice;
    std::vector<Elem> pi_down;   // base element -> quotient element id
    std::vector<Elem> class_min;  // quotient element id -> base class minimum
};
QuotientResult quotient(const Lattice& l, const Congruence& theta);

// Both membership tests (x is its class minimum / no canonical joinand of x
// is contracted) are computed and asserted equal; requires SD-join.
bool element_in_pi_down_image(const Lattice& l, const Congruence& theta, Elem x);

// All lattice congruences of l, one per distinct partition, generated from
// subsets of contracted join-irreducibles.
std::vector<Congruence> all_congruences(const Lattice& l);

struct MultichainResult {
    Lattice lattice;
    std::vector<std::vector<Elem>> tuples;  // id -> weakly increasing m-tuple
    int m = 1;

    Elem index_of(const std::vector<Elem>& tuple) const;
    // (j)_k = (0,...,0,j,...,j) with j first appearing at position k (1-based).
    Elem ji_element(const Lattice& base, Elem j, int k) const;
};
MultichainResult multichain_lattice(const Lattice& l, int m);

// Edge set predicted from the base lattice alone (incomparable pairs (j)_i,
// (j')_k), to be compared against the directly computed canonical join graph.
// vertex_ids carry the multichain element ids of the (j)_k vertices.
Graph multichain_cjg_predicted(const Lattice& l, const MultichainResult& mc);
Graph multichain_cjg_predicted(const Lattice& l, int m);

}  // namespace latkit
