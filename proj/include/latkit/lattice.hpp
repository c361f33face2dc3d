#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit {

// Finite lattice: a poset plus total join/meet tables. Immutable after
// construction; all operations below are pure.
struct Lattice {
    Poset poset;
    std::vector<uint16_t> join_t, meet_t;  // n*n, row-major
    Elem bottom = 0, top = 0;

    int n() const { return poset.n; }
    Elem join(Elem x, Elem y) const { return join_t[size_t(x) * poset.n + y]; }
    Elem meet(Elem x, Elem y) const { return meet_t[size_t(x) * poset.n + y]; }
    bool leq(Elem x, Elem y) const { return poset.leq(x, y); }
};

// Fills the join/meet tables, locating bottom/top; throws NotALattice with the
// first witness pair that lacks a unique bound.
Lattice lattice_from_poset(const Poset& p);

Elem join_set(const Lattice& l, std::span<const Elem> elems);
Elem meet_set(const Lattice& l, std::span<const Elem> elems);

bool is_join_irreducible(const Lattice& l, Elem x);
bool is_meet_irreducible(const Lattice& l, Elem x);
std::vector<Elem> join_irreducibles(const Lattice& l);
std::vector<Elem> meet_irreducibles(const Lattice& l);
Elem lower_star(const Lattice& l, Elem j);  // unique lower cover of a join-irreducible
Elem upper_star(const Lattice& l, Elem m);  // unique upper cover of a meet-irreducible
std::vector<Elem> atoms(const Lattice& l);

// Minimal elements x with x v y = w, for a lower cover y of w. A unique
// minimum is the cover labeling eta(y); several minima witness an SD-join
// failure (the full set is returned as the certificate).
struct EtaResult {
    std::vector<Elem> minimal;
    bool unique() const { return minimal.size() == 1; }
    Elem value() const { return minimal.front(); }
};
EtaResult eta(const Lattice& l, Elem w, Elem y);

struct JoinRep {
    std::vector<Elem> joinands;  // sorted antichain of join-irreducibles
    Elem target = 0;
    bool operator==(const JoinRep&) const = default;
};

// Pass TrustJoinSd only after establishing SD-join for the whole lattice; it
// skips the local irredundancy validation that guards non-SD inputs.
enum class SdMode { Validate, TrustJoinSd };

std::optional<JoinRep> canonical_join_rep(const Lattice& l, Elem w, SdMode mode = SdMode::Validate);
std::optional<JoinRep> canonical_meet_rep(const Lattice& l, Elem w, SdMode mode = SdMode::Validate);

// Brute-force oracle: enumerates irredundant join-representations of w and
// returns the join-refinement minimum when one exists. Test-only companion of
// canonical_join_rep; throws TooLarge past ~2^20 enumerated candidates.
std::optional<JoinRep> canonical_join_rep_oracle(const Lattice& l, Elem w);

// Every a in A lies below some b in B.
bool join_refines(const Lattice& l, std::span<const Elem> a, std::span<const Elem> b);

struct SdWitness {
    Elem x, y, z;
};

std::optional<SdWitness> find_join_sd_violation(const Lattice& l);
std::optional<SdWitness> find_meet_sd_violation(const Lattice& l);
// Restricted scans over pairs sharing a cover; exact by the BEZ lemma.
std::optional<SdWitness> find_join_sd_violation_bez(const Lattice& l);
std::optional<SdWitness> find_meet_sd_violation_bez(const Lattice& l);

bool is_join_semidistributive(const Lattice& l);
bool is_meet_semidistributive(const Lattice& l);
bool is_semidistributive(const Lattice& l);
bool is_semidistributive_bez(const Lattice& l);

// kappa(j): unique maximal element above j_* but not above j, when it exists.
std::optional<Elem> kappa(const Lattice& l, Elem j);
// kappa_star(m): unique minimal element below m^* but not below m.
std::optional<Elem> kappa_star(const Lattice& l, Elem m);

// For semidistributive l: verifies kappa is a bijection from join- to
// meet-irreducibles with kappa_star as inverse.
bool kappa_bijection_check(const Lattice& l);

Lattice dual_lattice(const Lattice& l);

}  // namespace latkit
