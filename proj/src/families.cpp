#include "latkit/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "latkit/complexes.hpp"

namespace latkit {

Lattice boolean_lattice(int n) {
    if (n < 0 || n > 16) throw GuardExceeded("boolean lattice guard: 0 <= n <= 16");
    const int size = 1 << n;
    Poset p(size);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if ((a & b) == a) p.up.set(a, b);
    p.sync_down();
    p.labels.resize(size);
    for (int a = 0; a < size; ++a) {
        std::string s = "{";
        for (int i = 0; i < n; ++i)
            if (a >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
        p.labels[a] = s + "}";
    }
    return lattice_from_poset(p);
}

Lattice chain_lattice(int n) {
    if (n < 0) throw std::invalid_argument("chain length must be >= 0");
    Poset p(n + 1);
    for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b) p.up.set(a, b);
    p.sync_down();
    p.labels.resize(n + 1);
    for (int a = 0; a <= n; ++a) p.labels[a] = std::to_string(a);
    return lattice_from_poset(p);
}

Elem DistributiveResult::element_of(uint64_t mask) const {
    for (size_t i = 0; i < ideal_masks.size(); ++i)
        if (ideal_masks[i] == mask) return Elem(i);
    throw std::invalid_argument("not an ideal of the poset");
}

DistributiveResult distributive_from_poset(const Poset& p) {
    if (p.n > 20) throw GuardExceeded("distributive_from_poset guard: poset size <= 20");
    // collect all order ideals as bitmasks
    std::vector<uint64_t> downs(p.n, 0);
    for (int x = 0; x < p.n; ++x)
        bits::for_each(p.down.row(x), p.down.words(), [&](int y) { downs[x] |= uint64_t(1) << y; });
    std::vector<uint64_t> ideals;
    std::vector<uint64_t> stack = {0};
    std::vector<uint64_t> seen = {0};
    while (!stack.empty()) {
        uint64_t cur = stack.back();
        stack.pop_back();
        ideals.push_back(cur);
        for (int x = 0; x < p.n; ++x) {
            if (cur >> x & 1) continue;
            if ((downs[x] & ~(uint64_t(1) << x) & ~cur) != 0) continue;  // a lower element missing
            uint64_t nxt = cur | (uint64_t(1) << x);
            if (std::find(seen.begin(), seen.end(), nxt) == seen.end()) {
                seen.push_back(nxt);
                stack.push_back(nxt);
            }
        }
    }
    std::sort(ideals.begin(), ideals.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    const int n = int(ideals.size());
    Poset q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((ideals[i] & ideals[j]) == ideals[i]) q.up.set(i, j);
    q.sync_down();
    q.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        std::string s = "{";
        for (int x = 0; x < p.n; ++x)
            if (ideals[i] >> x & 1) s += (s.size() > 1 ? "," : "") + std::to_string(x);
        q.labels[i] = s + "}";
    }
    DistributiveResult r;
    r.lattice = lattice_from_poset(q);
    r.ideal_masks = std::move(ideals);
    return r;
}

Elem DivisorResult::element_of(long long v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) throw std::invalid_argument("not a divisor");
    return Elem(it - values.begin());
}

DivisorResult divisor_lattice(long long n) {
    if (n < 1) throw std::invalid_argument("divisor lattice needs n >= 1");
    DivisorResult r;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            r.values.push_back(d);
            if (d != n / d) r.values.push_back(n / d);
        }
    std::sort(r.values.begin(), r.values.end());
    const int m = int(r.values.size());
    if (m > 64) throw GuardExceeded("divisor lattice guard: at most 64 divisors");
    Poset p(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (r.values[j] % r.values[i] == 0) p.up.set(i, j);
    p.sync_down();
    p.labels.resize(m);
    for (int i = 0; i < m; ++i) p.labels[i] = std::to_string(r.values[i]);
    r.lattice = lattice_from_poset(p);
    return r;
}

namespace {

// inversion set of a permutation in one-line notation: bit for each value
// pair (u,v), u < v, appearing in order v..u
uint64_t inversion_set(const std::vector<int>& perm) {
    const int n = int(perm.size());
    auto pairindex = [n](int u, int v) {  // u < v, 1-based values
        return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
    };
    uint64_t inv = 0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (perm[i] > perm[k]) inv |= uint64_t(1) << pairindex(perm[k], perm[i]);
    return inv;
}

// transitive closure of a pair set: (u,v) and (v,w) force (u,w)
uint64_t close_pairs(uint64_t inv, int n) {
    auto pairindex = [n](int u, int v) { return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                for (int w = v + 1; w <= n; ++w)
                    if ((inv >> pairindex(u, v) & 1) && (inv >> pairindex(v, w) & 1) &&
                        !(inv >> pairindex(u, w) & 1)) {
                        inv |= uint64_t(1) << pairindex(u, w);
                        changed = true;
                    }
    }
    return inv;
}

PermutationLattice permutation_lattice(int n, bool only_231_avoiding) {
    PermutationLattice r;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (only_231_avoiding && !avoids_231(perm)) continue;
        r.perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(r.perms.begin(), r.perms.end());
    const int m = int(r.perms.size());
    std::vector<uint64_t> inv(m);
    for (int i = 0; i < m; ++i) inv[i] = inversion_set(r.perms[i]);
    Poset p(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if ((inv[i] & ~inv[j]) == 0) p.up.set(i, j);
    p.sync_down();
    p.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        std::string s;
        for (int v : r.perms[i]) s += std::to_string(v);
        p.labels[i] = s;
    }
    r.lattice = lattice_from_poset(p);
    if (!only_231_avoiding) {
        // classical join formula: closure of the union of inversion sets;
        // must agree with the bound scan.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                uint64_t closed = close_pairs(inv[i] | inv[j], n);
                if (inv[r.lattice.join(i, j)] != closed)
                    throw std::logic_error("weak order join disagrees with inversion closure");
            }
    }
    return r;
}

}  // namespace

Elem PermutationLattice::element_of(const std::vector<int>& perm) const {
    auto it = std::lower_bound(perms.begin(), perms.end(), perm);
    if (it == perms.end() || *it != perm) throw std::invalid_argument("permutation not present");
    return Elem(it - perms.begin());
}

bool avoids_231(const std::vector<int>& perm) {
    const int n = int(perm.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (perm[k] < perm[i] && perm[i] < perm[j]) return false;
    return true;
}

PermutationLattice weak_order(int n) {
    if (n < 1 || n > 5) throw GuardExceeded("weak order guard: 1 <= n <= 5");
    return permutation_lattice(n, false);
}

PermutationLattice tamari(int n) {
    if (n < 1 || n > 5) throw GuardExceeded("tamari guard: 1 <= n <= 5");
    PermutationLattice r = permutation_lattice(n + 1, true);
    if (!is_semidistributive(r.lattice))
        throw std::logic_error("tamari lattice failed the semidistributivity check");
    return r;
}

long long narayana(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("narayana needs 0 <= k <= n");
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return binom(n + 1, k + 1) * binom(n + 1, k) / (n + 1);
}

Fixtures fixtures() {
    Fixtures f;
    {
        // 0^ < a,b,c ; a,b < d ; b,c < e ; d,e < 1^
        Poset p = poset_from_covers(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
        p.labels = {"0", "a", "b", "c", "d", "e", "1"};
        f.fig1 = lattice_from_poset(p);
    }
    {
        Poset p = poset_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
        p.labels = {"0", "x", "y", "z", "1"};
        f.m3 = lattice_from_poset(p);
    }
    {
        Poset p = poset_from_covers(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
        p.labels = {"0", "a", "b", "c", "1"};
        f.n5 = lattice_from_poset(p);
    }
    return f;
}

std::optional<Lattice> find_meet_sd_not_join_sd(std::span<const Lattice> corpus) {
    for (const Lattice& l : corpus) {
        if (!is_meet_semidistributive(l) || is_join_semidistributive(l)) continue;
        // demand >= 2 minimal irredundant join-representations of the top
        std::vector<std::vector<Elem>> reps;
        std::vector<Elem> domain;
        for (Elem x = 0; x < l.n(); ++x)
            if (x != l.bottom && l.leq(x, l.top)) domain.push_back(x);
        std::vector<Elem> cur;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (join_set(l, cur) == l.top) {
                bool irredundant = true;
                for (size_t i = 0; i < cur.size() && irredundant; ++i) {
                    Elem rest = l.bottom;
                    for (size_t k = 0; k < cur.size(); ++k)
                        if (k != i) rest = l.join(rest, cur[k]);
                    if (rest == l.top) irredundant = false;
                }
                if (irredundant) reps.push_back(cur);
                return;
            }
            for (size_t i = start; i < domain.size(); ++i) {
                bool anti = true;
                for (Elem u : cur)
                    if (!l.poset.incomparable(u, domain[i])) { anti = false; break; }
                if (!anti) continue;
                cur.push_back(domain[i]);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        int minimal = 0;
        for (const auto& a : reps) {
            bool is_min = true;
            for (const auto& b : reps)
                if (a != b && join_refines(l, b, a) && !join_refines(l, a, b)) { is_min = false; break; }
            minimal += is_min;
        }
        if (minimal >= 2) return l;
    }
    return std::nullopt;
}

std::optional<Lattice> find_crosscut_simplicial_not_sd(std::span<const Lattice> corpus) {
    for (const Lattice& l : corpus)
        if (is_crosscut_simplicial(l).simplicial && find_join_sd_violation(l) && find_meet_sd_violation(l))
            return l;
    return std::nullopt;
}

}  // namespace latkit
