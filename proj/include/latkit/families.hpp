#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Subsets of [n] ordered by inclusion; ids are the subset bitmasks.
Lattice boolean_lattice(int n);
// Chain with n+1 elements 0 < 1 < ... < n.
Lattice chain_lattice(int n);

// J(P): order ideals by containment (join = union, meet = intersection).
// Ideals are ordered by (size, bitmask); the ideal masks are returned so the
// antichain dictionary can be used by callers.
struct DistributiveResult {
    Lattice lattice;
    std::vector<uint64_t> ideal_masks;  // element id -> ideal as bitmask over P
    Elem element_of(uint64_t mask) const;
};
DistributiveResult distributive_from_poset(const Poset& p);

// Divisors of n under divisibility; labels are the decimal divisor values.
struct DivisorResult {
    Lattice lattice;
    std::vector<long long> values;
    Elem element_of(long long v) const;
};
DivisorResult divisor_lattice(long long n);

// Weak order on S_n via inversion-set containment (guard n <= 5). The
// transitive-closure join formula is cross-checked against the bound scan
// from lattice_from_poset at build time.
struct PermutationLattice {
    Lattice lattice;
    std::vector<std::vector<int>> perms;  // one-line notation, values 1..n
    Elem element_of(const std::vector<int>& perm) const;
};
PermutationLattice weak_order(int n);

// Tamari T_n: 231-avoiding permutations of [n+1] with the induced weak order
// (guard n <= 5); verified to be a semidistributive lattice.
PermutationLattice tamari(int n);

bool avoids_231(const std::vector<int>& perm);

// Narayana number N(n,k) = C(n+1,k+1) C(n+1,k) / (n+1).
long long narayana(int n, int k);

struct Fixtures {
    Lattice fig1;  // join-SD, not meet-SD; canonical join complex is an empty triangle
    Lattice m3;    // diamond with three atoms
    Lattice n5;    // pentagon
};
Fixtures fixtures();

// Search replacements for the figures whose Hasse diagrams are not printed:
// smallest corpus lattice that is meet-SD but not join-SD with >= 2
// join-refinement-minimal irredundant representations of the top.
std::optional<Lattice> find_meet_sd_not_join_sd(std::span<const Lattice> corpus);
// Smallest corpus lattice that is crosscut-simplicial yet fails both SD laws.
std::optional<Lattice> find_crosscut_simplicial_not_sd(std::span<const Lattice> corpus);

}  // namespace latkit
