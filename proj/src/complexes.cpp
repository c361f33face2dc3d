#include "latkit/complexes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace latkit {

int SimplicialComplex::vertex_index(Elem id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id) return -1;
    return int(it - vertices.begin());
}

uint64_t SimplicialComplex::mask_of(const std::vector<Elem>& ids) const {
    uint64_t m = 0;
    for (Elem id : ids) {
        int i = vertex_index(id);
        if (i < 0) throw NotAFace("element " + std::to_string(id) + " is not a vertex");
        m |= uint64_t(1) << i;
    }
    return m;
}

std::vector<Elem> SimplicialComplex::ids_of(uint64_t mask) const {
    std::vector<Elem> out;
    while (mask) {
        int b = std::countr_zero(mask);
        out.push_back(vertices[b]);
        mask &= mask - 1;
    }
    return out;
}

void SimplicialComplex::rebuild_facets() {
    facets.clear();
    for (uint64_t f : faces) {
        bool maximal = true;
        for (uint64_t g : faces)
            if (g != f && (f & g) == f) { maximal = false; break; }
        if (maximal) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
}

std::vector<long long> SimplicialComplex::f_vector() const {
    int maxk = 0;
    for (uint64_t f : faces) maxk = std::max(maxk, std::popcount(f));
    std::vector<long long> f(maxk, 0);
    for (uint64_t m : faces)
        if (m) ++f[std::popcount(m) - 1];
    return f;
}

int SimplicialComplex::max_facet_size() const {
    int m = 0;
    for (uint64_t f : facets) m = std::max(m, std::popcount(f));
    return m;
}

namespace {

CanonicalComplex build_canonical(const Lattice& l) {
    // caller has already established SD-join (possibly of the dual)
    CanonicalComplex out;
    auto ji = join_irreducibles(l);
    if (ji.size() > 64) throw GuardExceeded("canonical complex limited to 64 vertices");
    out.complex.vertices = ji;
    out.face_of_element.assign(l.n(), 0);
    for (Elem w = 0; w < l.n(); ++w) {
        auto rep = canonical_join_rep(l, w, SdMode::TrustJoinSd);
        if (!rep) throw std::logic_error("canonical join rep missing in SD-join lattice");
        uint64_t mask = out.complex.mask_of(rep->joinands);
        out.face_of_element[w] = mask;
        out.element_of_face[mask] = w;
        out.complex.faces.insert(mask);
    }
    if (out.complex.faces.size() != size_t(l.n()))
        throw std::logic_error("w -> can(w) failed to be a bijection");
    out.complex.rebuild_facets();
    return out;
}

}  // namespace

CanonicalComplex canonical_join_complex(const Lattice& l) {
    if (auto v = find_join_sd_violation(l)) throw NotJoinSemidistributive(v->x, v->y, v->z);
    return build_canonical(l);
}

CanonicalComplex canonical_meet_complex(const Lattice& l) {
    Lattice d = dual_lattice(l);
    if (auto v = find_join_sd_violation(d)) throw NotJoinSemidistributive(v->x, v->y, v->z);
    return build_canonical(d);
}

FlagResult is_flag(const SimplicialComplex& k) {
    const int nv = int(k.vertices.size());
    // adjacency from the 2-element faces
    std::vector<uint64_t> adj(nv, 0);
    for (uint64_t f : k.faces)
        if (std::popcount(f) == 2) {
            int a = std::countr_zero(f);
            uint64_t rest = f & (f - 1);
            int b = std::countr_zero(rest);
            adj[a] |= uint64_t(1) << b;
            adj[b] |= uint64_t(1) << a;
        }
    const int bound = k.max_facet_size() + 1;
    // level sets: cliques whose proper subsets are all faces
    std::vector<uint64_t> level;
    for (uint64_t f : k.faces)
        if (std::popcount(f) == 2) level.push_back(f);
    std::sort(level.begin(), level.end());
    for (int size = 2; size < bound; ++size) {
        std::vector<uint64_t> next;
        for (uint64_t s : level) {
            if (!k.has_face(s)) continue;  // already reported at its own level
            // extend by a vertex beyond the highest used, adjacent to all of s
            uint64_t common = ~uint64_t(0);
            uint64_t tmp = s;
            int highest = 0;
            while (tmp) {
                int b = std::countr_zero(tmp);
                highest = b;
                common &= adj[b];
                tmp &= tmp - 1;
            }
            for (int v = highest + 1; v < nv; ++v) {
                if (!(common >> v & 1)) continue;
                uint64_t cand = s | (uint64_t(1) << v);
                // all subsets of size `size` must be faces
                bool subsets_ok = true;
                uint64_t t = cand;
                while (t && subsets_ok) {
                    int b = std::countr_zero(t);
                    if (!k.has_face(cand & ~(uint64_t(1) << b))) subsets_ok = false;
                    t &= t - 1;
                }
                if (!subsets_ok) continue;
                if (!k.has_face(cand)) {
                    FlagResult r;
                    r.flag = false;
                    r.witness = k.ids_of(cand);
                    return r;
                }
                next.push_back(cand);
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    return FlagResult{};
}

Graph one_skeleton(const SimplicialComplex& k) {
    Graph g;
    g.n = int(k.vertices.size());
    g.vertex_ids = k.vertices;
    for (uint64_t f : k.faces)
        if (std::popcount(f) == 2) {
            int a = std::countr_zero(f);
            int b = std::countr_zero(f & (f - 1));
            g.edges.emplace_back(a, b);
        }
    g.normalize();
    return g;
}

SimplicialComplex crosscut_complex(const Lattice& l, Elem x, Elem y) {
    if (!l.leq(x, y)) throw NotComparable(x, y);
    SimplicialComplex k;
    for (Elem a : cov_up(l.poset, x))
        if (l.leq(a, y)) k.vertices.push_back(a);
    std::sort(k.vertices.begin(), k.vertices.end());
    const int d = int(k.vertices.size());
    if (d > 20) throw GuardExceeded("crosscut complex limited to 20 atoms");
    for (uint64_t m = 0; m < (uint64_t(1) << d); ++m) {
        Elem j = x;
        for (int i = 0; i < d; ++i)
            if (m >> i & 1) j = l.join(j, k.vertices[i]);
        if (l.lt(j, y)) k.faces.insert(m);
    }
    k.rebuild_facets();
    return k;
}

CrosscutResult is_crosscut_simplicial(const Lattice& l) {
    const int n = l.n();
    std::vector<std::pair<int, std::pair<Elem, Elem>>> intervals;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (l.lt(x, y)) {
                int size = 0;
                for (int z = 0; z < n; ++z) size += (l.leq(x, z) && l.leq(z, y));
                intervals.push_back({size, {x, y}});
            }
    std::sort(intervals.begin(), intervals.end());
    for (auto& [size, xy] : intervals) {
        auto [x, y] = xy;
        std::vector<Elem> at;
        for (Elem a : cov_up(l.poset, x))
            if (l.leq(a, y)) at.push_back(a);
        const int d = int(at.size());
        // a proper subset joins to y iff some co-atom subset does
        for (int skip = 0; skip < d; ++skip) {
            Elem j = x;
            for (int i = 0; i < d; ++i)
                if (i != skip) j = l.join(j, at[i]);
            if (j != y) continue;
            // shrink to an inclusion-minimal witness
            std::vector<Elem> sub;
            for (int i = 0; i < d; ++i)
                if (i != skip) sub.push_back(at[i]);
            for (size_t i = 0; i < sub.size();) {
                Elem jj = x;
                for (size_t t = 0; t < sub.size(); ++t)
                    if (t != i) jj = l.join(jj, sub[t]);
                if (jj == y) sub.erase(sub.begin() + i);
                else ++i;
            }
            return CrosscutResult{false, x, y, sub};
        }
    }
    return CrosscutResult{};
}

bool mobius_range_check(const Lattice& l) {
    for (Elem x = 0; x < l.n(); ++x) {
        auto row = mobius_row(l.poset, x);
        for (Elem y = 0; y < l.n(); ++y)
            if (l.leq(x, y) && (row[y] < -1 || row[y] > 1)) return false;
    }
    return true;
}

namespace {

// Validates F as a CJC face via can(join F) == F; cheap and exact in SD-join
// lattices. Returns the sorted face.
std::vector<Elem> validated_face(const Lattice& l, std::vector<Elem> face) {
    std::sort(face.begin(), face.end());
    Elem w = join_set(l, face);
    auto rep = canonical_join_rep(l, w);
    if (!rep || rep->joinands != face) throw NotAFace("set is not a canonical join representation");
    return face;
}

}  // namespace

std::vector<Elem> kappa_face_map(const Lattice& l, const std::vector<Elem>& face) {
    auto f = validated_face(l, face);
    std::vector<Elem> out;
    for (Elem j : f) {
        auto k = kappa(l, j);
        if (!k) throw PreconditionViolated("kappa undefined; lattice is not meet-semidistributive");
        out.push_back(*k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> kappa_complex_rotation(const Lattice& l, const std::vector<Elem>& face) {
    auto image = kappa_face_map(l, face);
    Elem m = meet_set(l, image);
    auto rep = canonical_join_rep(l, m);
    if (!rep) throw PreconditionViolated("rotation target lacks a canonical join representation");
    return rep->joinands;
}

Graph canonical_join_graph(const Lattice& l) {
    return one_skeleton(canonical_join_complex(l).complex);
}

}  // namespace latkit
