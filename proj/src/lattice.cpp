#include "latkit/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace latkit {

Lattice lattice_from_poset(const Poset& p) {
    if (p.n == 0) throw std::invalid_argument("lattice must be nonempty");
    Lattice l;
    l.poset = p;
    const int n = p.n, w = p.up.words();
    l.join_t.assign(size_t(n) * n, 0);
    l.meet_t.assign(size_t(n) * n, 0);
    std::vector<uint64_t> bound(w);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            // least upper bound: the element of ub below every other member
            for (int i = 0; i < w; ++i) bound[i] = p.up.row(x)[i] & p.up.row(y)[i];
            int lub = -1;
            bits::for_each(bound.data(), w, [&](int z) {
                if (lub < 0 && bits::subset(bound.data(), p.up.row(z), w)) lub = z;
            });
            if (lub < 0) throw NotALattice(x, y, 0);
            for (int i = 0; i < w; ++i) bound[i] = p.down.row(x)[i] & p.down.row(y)[i];
            int glb = -1;
            bits::for_each(bound.data(), w, [&](int z) {
                if (glb < 0 && bits::subset(bound.data(), p.down.row(z), w)) glb = z;
            });
            if (glb < 0) throw NotALattice(x, y, 1);
            l.join_t[size_t(x) * n + y] = l.join_t[size_t(y) * n + x] = uint16_t(lub);
            l.meet_t[size_t(x) * n + y] = l.meet_t[size_t(y) * n + x] = uint16_t(glb);
        }
    }
    l.bottom = 0;
    l.top = 0;
    for (int x = 0; x < n; ++x) {
        l.bottom = l.meet(l.bottom, x);
        l.top = l.join(l.top, x);
    }
    return l;
}

Elem join_set(const Lattice& l, std::span<const Elem> elems) {
    Elem acc = l.bottom;
    for (Elem x : elems) acc = l.join(acc, x);
    return acc;
}

Elem meet_set(const Lattice& l, std::span<const Elem> elems) {
    Elem acc = l.top;
    for (Elem x : elems) acc = l.meet(acc, x);
    return acc;
}

bool is_join_irreducible(const Lattice& l, Elem x) { return cov_down(l.poset, x).size() == 1; }
bool is_meet_irreducible(const Lattice& l, Elem x) { return cov_up(l.poset, x).size() == 1; }

std::vector<Elem> join_irreducibles(const Lattice& l) {
    std::vector<Elem> out;
    for (int x = 0; x < l.n(); ++x)
        if (is_join_irreducible(l, x)) out.push_back(x);
    return out;
}

std::vector<Elem> meet_irreducibles(const Lattice& l) {
    std::vector<Elem> out;
    for (int x = 0; x < l.n(); ++x)
        if (is_meet_irreducible(l, x)) out.push_back(x);
    return out;
}

Elem lower_star(const Lattice& l, Elem j) {
    auto c = cov_down(l.poset, j);
    if (c.size() != 1) throw NotJoinIrreducible(j);
    return c.front();
}

Elem upper_star(const Lattice& l, Elem m) {
    auto c = cov_up(l.poset, m);
    if (c.size() != 1) throw NotMeetIrreducible(m);
    return c.front();
}

std::vector<Elem> atoms(const Lattice& l) { return cov_up(l.poset, l.bottom); }

EtaResult eta(const Lattice& l, Elem w, Elem y) {
    {
        auto c = cov_down(l.poset, w);
        if (std::find(c.begin(), c.end(), y) == c.end())
            throw std::invalid_argument("eta: y is not a lower cover of w");
    }
    const int n = l.n(), words = l.poset.up.words();
    std::vector<uint64_t> s(words, 0);
    for (int x = 0; x < n; ++x)
        if (l.join(x, y) == w) bits::set(s.data(), x);
    EtaResult r;
    std::vector<uint64_t> below(words);
    bits::for_each(s.data(), words, [&](int x) {
        for (int i = 0; i < words; ++i) below[i] = l.poset.down.row(x)[i] & s[i];
        bits::clear(below.data(), x);
        if (!bits::any(below.data(), words)) r.minimal.push_back(x);
    });
    return r;
}

std::optional<JoinRep> canonical_join_rep(const Lattice& l, Elem w, SdMode mode) {
    std::vector<Elem> joinands;
    for (Elem y : cov_down(l.poset, w)) {
        EtaResult e = eta(l, w, y);
        if (!e.unique()) return std::nullopt;
        joinands.push_back(e.value());
    }
    std::sort(joinands.begin(), joinands.end());
    joinands.erase(std::unique(joinands.begin(), joinands.end()), joinands.end());
    if (mode == SdMode::Validate) {
        // Without SD-join established the eta labeling is not the definition;
        // require at least that it is an irredundant join-representation.
        if (join_set(l, joinands) != w) return std::nullopt;
        for (size_t i = 0; i < joinands.size(); ++i) {
            Elem rest = l.bottom;
            for (size_t k = 0; k < joinands.size(); ++k)
                if (k != i) rest = l.join(rest, joinands[k]);
            if (rest == w) return std::nullopt;
        }
    }
    return JoinRep{std::move(joinands), w};
}

std::optional<JoinRep> canonical_meet_rep(const Lattice& l, Elem w, SdMode mode) {
    return canonical_join_rep(dual_lattice(l), w, mode);
}

bool join_refines(const Lattice& l, std::span<const Elem> a, std::span<const Elem> b) {
    for (Elem x : a) {
        bool ok = false;
        for (Elem y : b)
            if (l.leq(x, y)) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

std::optional<JoinRep> canonical_join_rep_oracle(const Lattice& l, Elem w) {
    std::vector<Elem> domain;
    for (int x = 0; x < l.n(); ++x)
        if (x != l.bottom && l.leq(x, w)) domain.push_back(x);

    long long budget = 1 << 20;
    std::vector<std::vector<Elem>> reps;
    std::vector<Elem> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (--budget < 0) throw TooLarge("oracle guard: more than 2^20 candidate subsets");
        Elem jv = join_set(l, cur);
        if (jv == w) {
            // any extension is redundant, so this branch ends here
            bool irredundant = true;
            for (size_t i = 0; i < cur.size() && irredundant; ++i) {
                Elem rest = l.bottom;
                for (size_t k = 0; k < cur.size(); ++k)
                    if (k != i) rest = l.join(rest, cur[k]);
                if (rest == w) irredundant = false;
            }
            if (irredundant) reps.push_back(cur);
            return;
        }
        for (size_t i = start; i < domain.size(); ++i) {
            Elem v = domain[i];
            bool anti = true;
            for (Elem u : cur)
                if (!l.poset.incomparable(u, v)) { anti = false; break; }
            if (!anti) continue;
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);

    // unique join-refinement minimum, if any
    for (const auto& a : reps) {
        bool min = true;
        for (const auto& b : reps)
            if (!join_refines(l, a, b)) { min = false; break; }
        if (min) return JoinRep{a, w};
    }
    return std::nullopt;
}

std::optional<SdWitness> find_join_sd_violation(const Lattice& l) {
    const int n = l.n();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = y + 1; z < n; ++z) {
                if (!l.poset.incomparable(y, z)) continue;
                if (l.join(x, y) != l.join(x, z)) continue;
                if (l.join(x, l.meet(y, z)) != l.join(x, y)) return SdWitness{x, y, z};
            }
    return std::nullopt;
}

std::optional<SdWitness> find_meet_sd_violation(const Lattice& l) {
    const int n = l.n();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = y + 1; z < n; ++z) {
                if (!l.poset.incomparable(y, z)) continue;
                if (l.meet(x, y) != l.meet(x, z)) continue;
                if (l.meet(x, l.join(y, z)) != l.meet(x, y)) return SdWitness{x, y, z};
            }
    return std::nullopt;
}

std::optional<SdWitness> find_meet_sd_violation_bez(const Lattice& l) {
    const int n = l.n();
    for (Elem a = 0; a < n; ++a) {
        auto ups = cov_up(l.poset, a);
        for (size_t i = 0; i < ups.size(); ++i)
            for (size_t k = i + 1; k < ups.size(); ++k) {
                Elem y = ups[i], z = ups[k];
                for (Elem x = 0; x < n; ++x)
                    if (l.meet(x, y) == l.meet(x, z) && l.meet(x, l.join(y, z)) != l.meet(x, y))
                        return SdWitness{x, y, z};
            }
    }
    return std::nullopt;
}

std::optional<SdWitness> find_join_sd_violation_bez(const Lattice& l) {
    const int n = l.n();
    for (Elem a = 0; a < n; ++a) {
        auto downs = cov_down(l.poset, a);
        for (size_t i = 0; i < downs.size(); ++i)
            for (size_t k = i + 1; k < downs.size(); ++k) {
                Elem y = downs[i], z = downs[k];
                for (Elem x = 0; x < n; ++x)
                    if (l.join(x, y) == l.join(x, z) && l.join(x, l.meet(y, z)) != l.join(x, y))
                        return SdWitness{x, y, z};
            }
    }
    return std::nullopt;
}

bool is_join_semidistributive(const Lattice& l) { return !find_join_sd_violation(l); }
bool is_meet_semidistributive(const Lattice& l) { return !find_meet_sd_violation(l); }
bool is_semidistributive(const Lattice& l) {
    return is_join_semidistributive(l) && is_meet_semidistributive(l);
}
bool is_semidistributive_bez(const Lattice& l) {
    return !find_join_sd_violation_bez(l) && !find_meet_sd_violation_bez(l);
}

std::optional<Elem> kappa(const Lattice& l, Elem j) {
    Elem js = lower_star(l, j);  // throws NotJoinIrreducible
    const int words = l.poset.up.words();
    std::vector<uint64_t> k(words);
    for (int i = 0; i < words; ++i)
        k[i] = l.poset.up.row(js)[i] & ~l.poset.up.row(j)[i];
    std::vector<Elem> maximal;
    std::vector<uint64_t> above(words);
    bits::for_each(k.data(), words, [&](int a) {
        for (int i = 0; i < words; ++i) above[i] = l.poset.up.row(a)[i] & k[i];
        bits::clear(above.data(), a);
        if (!bits::any(above.data(), words)) maximal.push_back(a);
    });
    if (maximal.size() == 1) return maximal.front();
    return std::nullopt;
}

std::optional<Elem> kappa_star(const Lattice& l, Elem m) {
    Elem ms = upper_star(l, m);  // throws NotMeetIrreducible
    const int words = l.poset.down.words();
    std::vector<uint64_t> k(words);
    for (int i = 0; i < words; ++i)
        k[i] = l.poset.down.row(ms)[i] & ~l.poset.down.row(m)[i];
    std::vector<Elem> minimal;
    std::vector<uint64_t> below(words);
    bits::for_each(k.data(), words, [&](int a) {
        for (int i = 0; i < words; ++i) below[i] = l.poset.down.row(a)[i] & k[i];
        bits::clear(below.data(), a);
        if (!bits::any(below.data(), words)) minimal.push_back(a);
    });
    if (minimal.size() == 1) return minimal.front();
    return std::nullopt;
}

bool kappa_bijection_check(const Lattice& l) {
    if (!is_semidistributive(l)) throw PreconditionViolated("kappa_bijection_check requires a semidistributive lattice");
    auto ji = join_irreducibles(l);
    auto mi = meet_irreducibles(l);
    if (ji.size() != mi.size()) return false;
    std::vector<Elem> image;
    for (Elem j : ji) {
        auto k = kappa(l, j);
        if (!k) return false;
        auto back = kappa_star(l, *k);
        if (!back || *back != j) return false;
        image.push_back(*k);
    }
    std::sort(image.begin(), image.end());
    return image == mi;
}

Lattice dual_lattice(const Lattice& l) {
    Lattice d = l;
    std::swap(d.poset.up, d.poset.down);
    std::swap(d.join_t, d.meet_t);
    std::swap(d.bottom, d.top);
    return d;
}

}  // namespace latkit
