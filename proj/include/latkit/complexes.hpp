#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Abstract simplicial complex over at most 64 vertices; faces are bitmasks
// over indices into `vertices`. The empty face, when present, is mask 0.
struct SimplicialComplex {
    std::vector<Elem> vertices;  // ascending element ids
    std::unordered_set<uint64_t> faces;
    std::vector<uint64_t> facets;  // ascending as integers

    bool has_face(uint64_t mask) const { return faces.count(mask) != 0; }
    int vertex_index(Elem id) const;
    uint64_t mask_of(const std::vector<Elem>& ids) const;  // throws NotAFace on unknown vertex
    std::vector<Elem> ids_of(uint64_t mask) const;

    void rebuild_facets();
    // f[k] = number of faces of cardinality k+1; the empty face is excluded
    // and reported by empty_face_count().
    std::vector<long long> f_vector() const;
    int empty_face_count() const { return faces.count(0) ? 1 : 0; }
    int max_facet_size() const;

    bool operator==(const SimplicialComplex& o) const {
        return vertices == o.vertices && faces == o.faces;
    }
};

struct FlagResult {
    bool flag = true;
    std::vector<Elem> witness;  // a minimal non-face (element ids), size >= 3
};

// Canonical join complex plus the recorded bijection w -> can(w).
struct CanonicalComplex {
    SimplicialComplex complex;
    std::vector<uint64_t> face_of_element;            // element id -> face mask
    std::unordered_map<uint64_t, Elem> element_of_face;
};

// Throws NotJoinSemidistributive (with witness triple) when the precondition
// fails; dually for the meet version.
CanonicalComplex canonical_join_complex(const Lattice& l);
CanonicalComplex canonical_meet_complex(const Lattice& l);

FlagResult is_flag(const SimplicialComplex& k);

Graph one_skeleton(const SimplicialComplex& k);

// Crosscut complex of the interval [x, y]: vertices are the atoms of the
// interval, faces the atom subsets joining strictly below y.
SimplicialComplex crosscut_complex(const Lattice& l, Elem x, Elem y);

struct CrosscutResult {
    bool simplicial = true;
    Elem x = 0, y = 0;
    std::vector<Elem> subset;  // proper atom subset of [x,y] joining to y
};
CrosscutResult is_crosscut_simplicial(const Lattice& l);

bool mobius_range_check(const Lattice& l);

// Image of a canonical join complex face under kappa; a face of the canonical
// meet complex when l is semidistributive. Throws NotAFace.
std::vector<Elem> kappa_face_map(const Lattice& l, const std::vector<Elem>& face);

// can( meet of kappa(face) ): the rowmotion-like permutation of the face set.
std::vector<Elem> kappa_complex_rotation(const Lattice& l, const std::vector<Elem>& face);

Graph canonical_join_graph(const Lattice& l);

}  // namespace latkit
