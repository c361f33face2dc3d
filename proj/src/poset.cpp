#include "latkit/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace latkit {

void Poset::sync_down() {
    down = BitMatrix(n);
    for (int x = 0; x < n; ++x)
        bits::for_each(up.row(x), up.words(), [&](int y) { down.set(y, x); });
}

void Poset::validate() const {
    const int w = up.words();
    for (int x = 0; x < n; ++x) {
        if (!up.get(x, x)) throw DomainError("InvalidPoset", "missing reflexivity at " + std::to_string(x));
        for (int y = 0; y < n; ++y) {
            if (x != y && up.get(x, y) && up.get(y, x)) throw CycleDetected(x, y);
            // transitivity: x <= y implies up(y) subset of up(x)
            if (up.get(x, y) && !bits::subset(up.row(y), up.row(x), w))
                throw DomainError("InvalidPoset", "transitivity fails through " + std::to_string(y));
        }
        if (!down.get(x, x)) throw DomainError("InvalidPoset", "down matrix out of sync");
    }
}

Poset poset_from_covers(int n, const std::vector<std::pair<Elem, Elem>>& covers) {
    Poset p(n);
    for (auto [l, u] : covers) {
        if (l < 0 || l >= n || u < 0 || u >= n)
            throw std::invalid_argument("cover endpoint out of range");
        p.up.set(l, u);
    }
    // reflexive-transitive closure, Warshall over bit rows
    const int w = p.up.words();
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (p.up.get(x, k)) bits::or_assign(p.up.row(x), p.up.row(k), w);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (p.up.get(x, y) && p.up.get(y, x)) throw CycleDetected(x, y);
    p.sync_down();
    return p;
}

std::vector<std::pair<Elem, Elem>> cover_pairs(const Poset& p) {
    std::vector<std::pair<Elem, Elem>> out;
    const int w = p.up.words();
    std::vector<uint64_t> between(w);
    for (int x = 0; x < p.n; ++x) {
        bits::for_each(p.up.row(x), w, [&](int y) {
            if (y == x) return;
            for (int i = 0; i < w; ++i) between[i] = p.up.row(x)[i] & p.down.row(y)[i];
            bits::clear(between.data(), x);
            bits::clear(between.data(), y);
            if (!bits::any(between.data(), w)) out.emplace_back(x, y);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> cov_down(const Poset& p, Elem w) {
    std::vector<Elem> out;
    const int words = p.up.words();
    std::vector<uint64_t> between(words);
    bits::for_each(p.down.row(w), words, [&](int y) {
        if (y == w) return;
        for (int i = 0; i < words; ++i) between[i] = p.up.row(y)[i] & p.down.row(w)[i];
        bits::clear(between.data(), y);
        bits::clear(between.data(), w);
        if (!bits::any(between.data(), words)) out.push_back(y);
    });
    return out;
}

std::vector<Elem> cov_up(const Poset& p, Elem w) {
    std::vector<Elem> out;
    const int words = p.up.words();
    std::vector<uint64_t> between(words);
    bits::for_each(p.up.row(w), words, [&](int y) {
        if (y == w) return;
        for (int i = 0; i < words; ++i) between[i] = p.up.row(w)[i] & p.down.row(y)[i];
        bits::clear(between.data(), y);
        bits::clear(between.data(), w);
        if (!bits::any(between.data(), words)) out.push_back(y);
    });
    return out;
}

bool is_antichain(const Poset& p, const std::vector<Elem>& elems) {
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (p.leq(elems[i], elems[j]) || p.leq(elems[j], elems[i])) return false;
    return true;
}

std::vector<long long> mobius_row(const Poset& p, Elem x) {
    std::vector<long long> mu(p.n, 0);
    std::vector<char> done(p.n, 0);
    std::function<long long(int)> eval = [&](int z) -> long long {
        if (done[z]) return mu[z];
        done[z] = 1;
        if (z == x) return mu[z] = 1;
        long long s = 0;
        bits::for_each(p.down.row(z), p.down.words(), [&](int t) {
            if (t != z && p.leq(x, t)) s += eval(t);
        });
        return mu[z] = -s;
    };
    bits::for_each(p.up.row(x), p.up.words(), [&](int y) { eval(y); });
    return mu;
}

long long mobius(const Poset& p, Elem x, Elem y) {
    if (!p.leq(x, y)) throw NotComparable(x, y);
    return mobius_row(p, x)[y];
}

std::vector<Antichain> antichains(const Poset& p) {
    std::vector<Antichain> out;
    std::vector<Elem> cur;
    std::function<void(int)> rec = [&](int start) {
        out.emplace_back(cur);
        for (int v = start; v < p.n; ++v) {
            bool ok = true;
            for (Elem u : cur)
                if (!p.incomparable(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Elem> ideal_of(const Poset& p, const Antichain& a) {
    const int w = p.down.words();
    std::vector<uint64_t> acc(w, 0);
    for (Elem x : a.elements) bits::or_assign(acc.data(), p.down.row(x), w);
    return bits::to_vector(acc.data(), w);
}

std::vector<Elem> co_ideal_minimals(const Poset& p, const std::vector<Elem>& ideal) {
    const int w = p.down.words();
    std::vector<uint64_t> comp(w, 0);
    for (int i = 0; i < p.n; ++i) bits::set(comp.data(), i);
    for (Elem x : ideal) bits::clear(comp.data(), x);
    std::vector<Elem> out;
    std::vector<uint64_t> below(w);
    bits::for_each(comp.data(), w, [&](int x) {
        // minimal in the complement: nothing strictly below x survives
        for (int i = 0; i < w; ++i) below[i] = p.down.row(x)[i] & comp[i];
        bits::clear(below.data(), x);
        if (!bits::any(below.data(), w)) out.push_back(x);
    });
    return out;
}

std::vector<Elem> co_ideal_of(const Poset& p, const Antichain& b) {
    const int w = p.up.words();
    std::vector<uint64_t> ups(w, 0);
    for (Elem x : b.elements) bits::or_assign(ups.data(), p.up.row(x), w);
    std::vector<Elem> out;
    for (int i = 0; i < p.n; ++i)
        if (!bits::get(ups.data(), i)) out.push_back(i);
    return out;
}

Antichain rowmotion(const Poset& p, const Antichain& a) {
    for (size_t i = 0; i < a.elements.size(); ++i)
        for (size_t j = i + 1; j < a.elements.size(); ++j)
            if (!p.incomparable(a.elements[i], a.elements[j]))
                throw NotAnAntichain(a.elements[i], a.elements[j]);
    return Antichain(co_ideal_minimals(p, ideal_of(p, a)));
}

Graph incomparability_graph(const Poset& p) {
    Graph g;
    g.n = p.n;
    for (int x = 0; x < p.n; ++x) {
        g.vertex_ids.push_back(x);
        for (int y = x + 1; y < p.n; ++y)
            if (p.incomparable(x, y)) g.edges.emplace_back(x, y);
    }
    g.normalize();
    return g;
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n) return false;
    return canonical_form(a) == canonical_form(b);
}

Poset dual_poset(const Poset& p) {
    Poset d = p;
    std::swap(d.up, d.down);
    return d;
}

}  // namespace latkit
