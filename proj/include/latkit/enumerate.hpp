// Enumeration of all isomorphism classes of n-element lattices, exactly once,
// in a deterministic order.
//
// A lattice with at least two elements, minus its bottom, is a finite
// join-semilattice with top, and adding a fresh bottom to any such semilattice
// gives a lattice back; the two maps are mutually inverse on isomorphism
// classes. Semilattices are grown one minimal element at a time, with
// isomorph rejection by a canonical form of the cover digraph (iterative
// ordered-partition refinement, tie-broken by the lexicographically minimal
// adjacency encoding).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {
namespace detail {

struct Poset {
    int n = 0;
    std::vector<uint8_t> leq; // n*n, reflexive
    bool le(int a, int b) const { return leq[a * n + b] != 0; }
};

inline std::vector<uint8_t> cover_matrix(const Poset& P) {
    std::vector<uint8_t> cov(static_cast<size_t>(P.n) * P.n, 0);
    for (int a = 0; a < P.n; ++a)
        for (int b = 0; b < P.n; ++b) {
            if (a == b || !P.le(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < P.n && direct; ++c)
                direct = !(c != a && c != b && P.le(a, c) && P.le(c, b));
            cov[a * P.n + b] = direct;
        }
    return cov;
}

// Canonical key of a poset under isomorphism: bits of the cover matrix in
// growing-principal-minor order, minimized over cell-respecting orderings.
inline std::string canonical_key(const Poset& P) {
    const int n = P.n;
    const auto cov = cover_matrix(P);

    // ordered-partition refinement on the cover digraph
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        using Sig = std::vector<int>;
        std::vector<Sig> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> up, dn;
            for (int u = 0; u < n; ++u) {
                if (cov[v * n + u]) up.push_back(color[u]);
                if (cov[u * n + v]) dn.push_back(color[u]);
            }
            std::sort(up.begin(), up.end());
            std::sort(dn.begin(), dn.end());
            sig[v].push_back(color[v]);
            sig[v].push_back(static_cast<int>(up.size()));
            sig[v].insert(sig[v].end(), up.begin(), up.end());
            sig[v].insert(sig[v].end(), dn.begin(), dn.end());
        }
        std::vector<Sig> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (next == color) break;
        color = next;
    }

    // cells in color order; positions are filled cell by cell
    std::vector<std::vector<int>> cells;
    {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
        for (auto& [c, vs] : by_color) cells.push_back(vs);
    }
    std::vector<int> cell_of_pos;
    for (size_t ci = 0; ci < cells.size(); ++ci)
        for (size_t k = 0; k < cells[ci].size(); ++k) cell_of_pos.push_back(static_cast<int>(ci));

    std::string best;
    std::string cur(static_cast<size_t>(n) * n, '0');
    std::vector<int> perm(n, -1);
    std::vector<uint8_t> used(n, 0);

    // bits contributed when position p is placed: pairs (i,p),(p,i) for i<p, then (p,p)
    auto place_len = [](int p) { return 2 * p + 1; };
    std::vector<int> offset(n + 1, 0);
    for (int p = 0; p < n; ++p) offset[p + 1] = offset[p] + place_len(p);

    auto dfs = [&](auto&& self, int p, bool tight) -> void {
        if (p == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int v : cells[cell_of_pos[p]]) {
            if (used[v]) continue;
            int pos = offset[p];
            for (int i = 0; i < p; ++i) {
                cur[pos++] = cov[perm[i] * n + v] ? '1' : '0';
                cur[pos++] = cov[v * n + perm[i]] ? '1' : '0';
            }
            cur[pos++] = '0';
            bool t = tight;
            if (!best.empty() && t) {
                const int cmp = best.compare(offset[p], place_len(p), cur, offset[p], place_len(p));
                if (cmp < 0) continue; // worse than best prefix
                if (cmp > 0) t = false;
            }
            perm[p] = v;
            used[v] = 1;
            self(self, p + 1, t);
            used[v] = 0;
        }
    };
    dfs(dfs, 0, true);
    return best;
}

// Children of a join-semilattice-with-top: add one new minimal element whose
// strict up-set is U. Valid U: up-closed, contains the top, and U n up(y) has
// a least element for every y (so every join with the new element exists).
template <typename Fn>
void for_each_child(const Poset& P, Fn&& emit) {
    const int n = P.n;
    int top = 0;
    for (int v = 0; v < n; ++v)
        if (P.le(top, v)) top = v;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (!((mask >> top) & 1)) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (int v = 0; v < n && ok; ++v)
                if (P.le(u, v) && !((mask >> v) & 1)) ok = false;
        }
        for (int y = 0; y < n && ok; ++y) {
            if ((mask >> y) & 1) continue;
            int least = -1;
            bool has_least = false;
            for (int s = 0; s < n && !has_least; ++s) {
                if (!((mask >> s) & 1) || !P.le(y, s)) continue;
                has_least = true;
                least = s;
                for (int t = 0; t < n && has_least; ++t)
                    if (((mask >> t) & 1) && P.le(y, t) && !P.le(s, t)) has_least = false;
            }
            (void)least;
            if (!has_least) ok = false;
        }
        if (!ok) continue;
        Poset C;
        C.n = n + 1;
        C.leq.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) C.leq[a * (n + 1) + b] = P.leq[a * n + b];
        C.leq[n * (n + 1) + n] = 1;
        for (int u = 0; u < n; ++u)
            if ((mask >> u) & 1) C.leq[n * (n + 1) + u] = 1;
        emit(std::move(C));
    }
}

inline FiniteLattice attach_bottom(const Poset& P) {
    const int n = P.n + 1; // 0 becomes the new bottom
    return FiniteLattice::from_leq(n, [&](int a, int b) {
        if (a == 0) return true;
        if (b == 0) return false;
        return P.le(a - 1, b - 1);
    });
}

} // namespace detail

// All isomorphism classes of n-element lattices, exactly once, in a
// deterministic order. The callback returns false to stop early.
template <typename Fn>
void for_each_lattice(int n, Fn&& cb, int cap = 10) {
    require(n >= 1, Errc::MalformedInput, "lattice size must be positive");
    require(n <= cap, Errc::TooLarge, "enumeration above the configured cap");
    if (n == 1) {
        cb(FiniteLattice::from_leq(1, [](int, int) { return true; }));
        return;
    }
    using detail::Poset;
    std::map<std::string, Poset> level;
    {
        Poset single;
        single.n = 1;
        single.leq = {1};
        level.emplace(detail::canonical_key(single), single);
    }
    for (int m = 1; m < n - 1; ++m) {
        std::map<std::string, Poset> next;
        for (const auto& [key, P] : level)
            detail::for_each_child(P, [&](Poset C) {
                std::string k = detail::canonical_key(C);
                next.emplace(std::move(k), std::move(C));
            });
        level = std::move(next);
    }
    for (const auto& [key, P] : level)
        if (!cb(detail::attach_bottom(P))) return;
}

inline std::vector<FiniteLattice> enumerate_lattices(int n, int cap = 10) {
    std::vector<FiniteLattice> out;
    for_each_lattice(n, [&](FiniteLattice L) {
        out.push_back(std::move(L));
        return true;
    }, cap);
    return out;
}

inline long long lattice_count(int n, int cap = 10) {
    long long c = 0;
    for_each_lattice(n, [&](const FiniteLattice&) {
        ++c;
        return true;
    }, cap);
    return c;
}

} // namespace latkit
