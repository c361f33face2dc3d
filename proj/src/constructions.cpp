#include "latkit/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace latkit {

Lattice direct_product(const Lattice& l1, const Lattice& l2) {
    const int n1 = l1.n(), n2 = l2.n(), n = n1 * n2;
    Poset p(n);
    for (int x1 = 0; x1 < n1; ++x1)
        for (int x2 = 0; x2 < n2; ++x2)
            for (int y1 = 0; y1 < n1; ++y1)
                for (int y2 = 0; y2 < n2; ++y2)
                    if (l1.leq(x1, y1) && l2.leq(x2, y2)) p.up.set(x1 * n2 + x2, y1 * n2 + y2);
    p.sync_down();
    if (l1.poset.has_labels() && l2.poset.has_labels()) {
        p.labels.resize(n);
        for (int x1 = 0; x1 < n1; ++x1)
            for (int x2 = 0; x2 < n2; ++x2)
                p.labels[x1 * n2 + x2] = "(" + l1.poset.label(x1) + "," + l2.poset.label(x2) + ")";
    }
    return lattice_from_poset(p);
}

Lattice ordinal_sum(const Lattice& l1, const Lattice& l2) {
    const int n1 = l1.n(), n2 = l2.n(), n = n1 + n2;
    Poset p(n);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n1; ++y)
            if (l1.leq(x, y)) p.up.set(x, y);
    for (int x = 0; x < n2; ++x)
        for (int y = 0; y < n2; ++y)
            if (l2.leq(x, y)) p.up.set(n1 + x, n1 + y);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) p.up.set(x, n1 + y);
    p.sync_down();
    return lattice_from_poset(p);
}

Lattice wedge_sum(const Lattice& l1, const Lattice& l2) {
    const int n1 = l1.n(), n2 = l2.n(), n = n1 + n2 - 1;
    // l2's bottom is glued onto top(l1); remaining l2 elements are renumbered
    // in ascending id order after l1.
    std::vector<int> map2(n2);
    int next = n1;
    for (int x = 0; x < n2; ++x) map2[x] = (x == l2.bottom) ? l1.top : next++;
    Poset p(n);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n1; ++y)
            if (l1.leq(x, y)) p.up.set(x, y);
    for (int x = 0; x < n2; ++x)
        for (int y = 0; y < n2; ++y)
            if (l2.leq(x, y)) p.up.set(map2[x], map2[y]);
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y)
            if (y != l2.bottom) p.up.set(x, map2[y]);
    p.sync_down();
    return lattice_from_poset(p);
}

bool is_order_convex(const Lattice& l, const std::vector<Elem>& c) {
    std::vector<char> in(l.n(), 0);
    for (Elem x : c) in[x] = 1;
    for (Elem x : c)
        for (Elem y : c)
            if (l.lt(x, y))
                for (Elem z = 0; z < l.n(); ++z)
                    if (!in[z] && l.lt(x, z) && l.lt(z, y)) return false;
    return true;
}

DoubleResult double_lattice(const Lattice& l, const std::vector<Elem>& convex_set) {
    const int n = l.n(), w = l.poset.up.words();
    std::vector<char> in_c(n, 0);
    for (Elem x : convex_set) in_c[x] = 1;
    for (Elem x : convex_set)
        for (Elem y : convex_set)
            if (l.lt(x, y))
                for (Elem z = 0; z < n; ++z)
                    if (!in_c[z] && l.lt(x, z) && l.lt(z, y)) throw NotOrderConvex(x, z, y);

    std::vector<uint64_t> xmask(w, 0);
    for (Elem c : convex_set) bits::or_assign(xmask.data(), l.poset.up.row(c), w);
    std::vector<char> in_x(n, 0);
    bits::for_each(xmask.data(), w, [&](int v) { in_x[v] = 1; });

    DoubleResult r;
    std::vector<int> id0(n, -1), id1(n, -1);
    for (int x = 0; x < n; ++x)
        if (!in_x[x] || in_c[x]) {
            id0[x] = int(r.pi.size());
            r.pi.push_back(x);
            r.eps.push_back(0);
        }
    for (int x = 0; x < n; ++x)
        if (in_x[x]) {
            id1[x] = int(r.pi.size());
            r.pi.push_back(x);
            r.eps.push_back(1);
        }
    const int m = int(r.pi.size());
    Poset p(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (l.leq(r.pi[i], r.pi[j]) && r.eps[i] <= r.eps[j]) p.up.set(i, j);
    p.sync_down();
    if (l.poset.has_labels()) {
        p.labels.resize(m);
        for (int i = 0; i < m; ++i)
            p.labels[i] = "(" + l.poset.label(r.pi[i]) + "," + std::to_string(r.eps[i]) + ")";
    }
    r.lattice = lattice_from_poset(p);
    r.fiber_min.resize(n);
    for (int x = 0; x < n; ++x) r.fiber_min[x] = id0[x] >= 0 ? id0[x] : id1[x];
    r.new_irreducible = -1;
    if (!convex_set.empty()) {
        Elem a = convex_set.front();
        for (Elem c : convex_set) a = l.meet(a, c);
        if (in_c[a]) r.new_irreducible = id1[a];
    }
    return r;
}

DoubleResult double_interval(const Lattice& l, Elem a, Elem b) {
    if (!l.leq(a, b)) throw NotComparable(a, b);
    std::vector<Elem> c;
    for (Elem z = 0; z < l.n(); ++z)
        if (l.leq(a, z) && l.leq(z, b)) c.push_back(z);
    return double_lattice(l, c);
}

Congruence congruence_from_partition(const Lattice& l, const std::vector<int>& class_of) {
    std::map<int, std::vector<Elem>> groups;
    for (Elem x = 0; x < l.n(); ++x) groups[class_of[x]].push_back(x);
    std::vector<std::vector<Elem>> classes;
    for (auto& [k, v] : groups) classes.push_back(v);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Congruence th;
    th.classes = std::move(classes);
    th.class_of.assign(l.n(), 0);
    for (int c = 0; c < int(th.classes.size()); ++c)
        for (Elem x : th.classes[c]) th.class_of[x] = c;
    return th;
}

Congruence congruence_generated(const Lattice& l, const std::vector<Elem>& contracted) {
    const int n = l.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<Elem, Elem>> queue;
    auto unite = [&](Elem x, Elem y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return;
        parent[std::max(rx, ry)] = std::min(rx, ry);
        queue.emplace_back(x, y);
    };
    for (Elem j : contracted) unite(j, lower_star(l, j));
    // closure under join/meet compatibility; transitivity covers merged classes
    while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        for (Elem t = 0; t < n; ++t) {
            unite(l.join(x, t), l.join(y, t));
            unite(l.meet(x, t), l.meet(y, t));
        }
    }
    std::vector<int> cls(n);
    for (Elem x = 0; x < n; ++x) cls[x] = find(x);
    return congruence_from_partition(l, cls);
}

void check_congruence(const Lattice& l, const Congruence& theta) {
    const int n = l.n();
    if (int(theta.class_of.size()) != n)
        throw NotACongruence("partition size", {});
    std::vector<Elem> mins(theta.num_classes(), -1), maxs(theta.num_classes(), -1);
    for (int c = 0; c < theta.num_classes(); ++c) {
        Elem lo = theta.classes[c].front(), hi = theta.classes[c].front();
        for (Elem x : theta.classes[c]) {
            lo = l.meet(lo, x);
            hi = l.join(hi, x);
        }
        // interval class: its meet and join stay inside and everything between belongs
        if (theta.class_of[lo] != c) throw NotACongruence("interval class", {lo, theta.classes[c].front()});
        if (theta.class_of[hi] != c) throw NotACongruence("interval class", {hi, theta.classes[c].front()});
        for (Elem z = 0; z < n; ++z)
            if (l.leq(lo, z) && l.leq(z, hi) && theta.class_of[z] != c)
                throw NotACongruence("interval class", {lo, z, hi});
        mins[c] = lo;
        maxs[c] = hi;
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (l.leq(x, y)) {
                if (!l.leq(mins[theta.class_of[x]], mins[theta.class_of[y]]))
                    throw NotACongruence("pi_down order-preserving", {x, y});
                if (!l.leq(maxs[theta.class_of[x]], maxs[theta.class_of[y]]))
                    throw NotACongruence("pi_up order-preserving", {x, y});
            }
}

bool is_congruence(const Lattice& l, const Congruence& theta) {
    try {
        check_congruence(l, theta);
        return true;
    } catch (const NotACongruence&) {
        return false;
    }
}

std::vector<Elem> contracted_join_irreducibles(const Lattice& l, const Congruence& theta) {
    std::vector<Elem> out;
    for (Elem j : join_irreducibles(l))
        if (theta.same(j, lower_star(l, j))) out.push_back(j);
    return out;
}

QuotientResult quotient(const Lattice& l, const Congruence& theta) {
    check_congruence(l, theta);
    QuotientResult r;
    for (const auto& cls : theta.classes) {
        Elem lo = cls.front();
        for (Elem x : cls) lo = l.meet(lo, x);
        r.class_min.push_back(lo);
    }
    std::sort(r.class_min.begin(), r.class_min.end());
    const int m = int(r.class_min.size());
    Poset p(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (l.leq(r.class_min[i], r.class_min[j])) p.up.set(i, j);
    p.sync_down();
    if (l.poset.has_labels()) {
        p.labels.resize(m);
        for (int i = 0; i < m; ++i) p.labels[i] = l.poset.label(r.class_min[i]);
    }
    r.lattice = lattice_from_poset(p);
    std::vector<int> id_of_min(l.n(), -1);
    for (int i = 0; i < m; ++i) id_of_min[r.class_min[i]] = i;
    r.pi_down.resize(l.n());
    for (Elem x = 0; x < l.n(); ++x) {
        Elem lo = x;
        for (Elem y : theta.classes[theta.class_of[x]]) lo = l.meet(lo, y);
        r.pi_down[x] = id_of_min[lo];
    }
    // pi_down must be a surjective lattice homomorphism
    for (Elem x = 0; x < l.n(); ++x)
        for (Elem y = 0; y < l.n(); ++y) {
            if (r.pi_down[l.join(x, y)] != r.lattice.join(r.pi_down[x], r.pi_down[y]))
                throw std::logic_error("quotient: pi_down does not respect joins");
            if (r.pi_down[l.meet(x, y)] != r.lattice.meet(r.pi_down[x], r.pi_down[y]))
                throw std::logic_error("quotient: pi_down does not respect meets");
        }
    return r;
}

bool element_in_pi_down_image(const Lattice& l, const Congruence& theta, Elem x) {
    Elem lo = x;
    for (Elem y : theta.classes[theta.class_of[x]]) lo = l.meet(lo, y);
    bool direct = (lo == x);

    auto rep = canonical_join_rep(l, x);
    if (!rep) throw PreconditionViolated("element_in_pi_down_image requires SD-join");
    bool by_joinands = true;
    for (Elem j : rep->joinands)
        if (theta.same(j, lower_star(l, j))) { by_joinands = false; break; }

    if (direct != by_joinands)
        throw std::logic_error("pi_down membership tests disagree at element " + std::to_string(x));
    return direct;
}

std::vector<Congruence> all_congruences(const Lattice& l) {
    auto ji = join_irreducibles(l);
    if (ji.size() > 20) throw GuardExceeded("all_congruences limited to 20 join-irreducibles");
    std::vector<Congruence> out;
    std::vector<std::vector<int>> seen;
    for (uint64_t m = 0; m < (uint64_t(1) << ji.size()); ++m) {
        std::vector<Elem> sel;
        for (size_t i = 0; i < ji.size(); ++i)
            if (m >> i & 1) sel.push_back(ji[i]);
        Congruence th = congruence_generated(l, sel);
        if (std::find(seen.begin(), seen.end(), th.class_of) == seen.end()) {
            seen.push_back(th.class_of);
            out.push_back(std::move(th));
        }
    }
    return out;
}

Elem MultichainResult::index_of(const std::vector<Elem>& tuple) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
    if (it == tuples.end() || *it != tuple) throw std::invalid_argument("tuple is not a multichain");
    return Elem(it - tuples.begin());
}

Elem MultichainResult::ji_element(const Lattice& base, Elem j, int k) const {
    std::vector<Elem> t(m);
    for (int i = 0; i < m; ++i) t[i] = (i + 1 >= k) ? j : base.bottom;
    return index_of(t);
}

MultichainResult multichain_lattice(const Lattice& l, int m) {
    if (m < 1) throw std::invalid_argument("multichain length must be >= 1");
    MultichainResult r;
    r.m = m;
    std::vector<Elem> cur;
    std::function<void()> rec = [&]() {
        if (int(cur.size()) == m) {
            r.tuples.push_back(cur);
            return;
        }
        for (Elem x = 0; x < l.n(); ++x) {
            if (!cur.empty() && !l.leq(cur.back(), x)) continue;
            cur.push_back(x);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(r.tuples.begin(), r.tuples.end());
    const int n = int(r.tuples.size());
    Poset p(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (int t = 0; t < m && le; ++t)
                if (!l.leq(r.tuples[i][t], r.tuples[j][t])) le = false;
            if (le) p.up.set(i, j);
        }
    p.sync_down();
    if (l.poset.has_labels()) {
        p.labels.resize(n);
        for (int i = 0; i < n; ++i) {
            std::string s = "(";
            for (int t = 0; t < m; ++t) s += (t ? "," : "") + l.poset.label(r.tuples[i][t]);
            p.labels[i] = s + ")";
        }
    }
    r.lattice = lattice_from_poset(p);
    // sublattice of the m-fold product: joins and meets are componentwise
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Elem> jt(m), mt(m);
            for (int t = 0; t < m; ++t) {
                jt[t] = l.join(r.tuples[i][t], r.tuples[j][t]);
                mt[t] = l.meet(r.tuples[i][t], r.tuples[j][t]);
            }
            if (r.lattice.join(i, j) != r.index_of(jt) || r.lattice.meet(i, j) != r.index_of(mt))
                throw std::logic_error("multichain joins are not componentwise");
        }
    return r;
}

Graph multichain_cjg_predicted(const Lattice& l, const MultichainResult& mc) {
    auto ji = join_irreducibles(l);
    auto cjc = canonical_join_complex(l);
    const int m = mc.m;
    Graph g;
    struct V {
        Elem j;
        int k;
    };
    std::vector<V> verts;
    for (Elem j : ji)
        for (int k = 1; k <= m; ++k) verts.push_back({j, k});
    g.n = int(verts.size());
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b) {
            auto [j1, k1] = verts[a];
            auto [j2, k2] = verts[b];
            bool edge = false;
            if (k1 == k2) {
                if (j1 != j2) {
                    uint64_t mask = cjc.complex.mask_of({j1, j2});
                    edge = cjc.complex.has_face(mask);
                }
            } else {
                // orient as (j)_i with i < k and (j')_k; comparable pairs are skipped
                Elem j = (k1 < k2) ? j1 : j2;
                Elem jp = (k1 < k2) ? j2 : j1;
                if (!l.leq(jp, j)) {
                    auto rep = canonical_join_rep(l, l.join(j, jp), SdMode::TrustJoinSd);
                    edge = rep && std::binary_search(rep->joinands.begin(), rep->joinands.end(), jp);
                }
            }
            if (edge) g.edges.emplace_back(int(a), int(b));
        }
    g.normalize();
    for (auto& v : verts) g.vertex_ids.push_back(mc.ji_element(l, v.j, v.k));
    return g;
}

Graph multichain_cjg_predicted(const Lattice& l, int m) {
    return multichain_cjg_predicted(l, multichain_lattice(l, m));
}

}  // namespace latkit
