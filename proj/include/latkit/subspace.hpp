// The lattice of subspaces of F_q^d, with elements canonicalized as
// reduced-row-echelon bases.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "latkit/gf.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

struct SubspaceLattice {
    FiniteLattice lat;
    GF gf;
    int dim = 0;
    std::vector<std::vector<std::vector<int>>> basis; // per element: RREF rows
    std::vector<std::vector<int>> members;            // per element: sorted vector codes

    int index_of_members(const std::vector<int>& m) const {
        auto it = index_.find(m);
        require(it != index_.end(), Errc::Internal, "unknown subspace");
        return it->second;
    }
    int index_of_span(const std::vector<std::vector<int>>& rows) const {
        return index_of_members(span_members(gf, rref(gf, rows), dim));
    }
    std::string label(int e) const {
        if (basis[e].empty()) return "0";
        std::string s;
        for (const auto& row : basis[e]) {
            if (!s.empty()) s += ",";
            std::string t;
            for (int i = 0; i < dim; ++i) {
                if (row[i] == 0) continue;
                if (!t.empty()) t += "+";
                if (row[i] != 1) t += std::to_string(row[i]) + "*";
                t += "e" + std::to_string(i);
            }
            s += t;
        }
        return s;
    }

    std::map<std::vector<int>, int> index_;
};

// Number of subspaces of F_q^d (sum of Gaussian binomial coefficients).
inline long long subspace_count(int q, int d) {
    // [d choose k]_q by the q-Pascal recurrence
    std::vector<std::vector<long long>> g(d + 1, std::vector<long long>(d + 1, 0));
    for (int n = 0; n <= d; ++n) {
        g[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            long long qk = 1;
            for (int i = 0; i < k; ++i) qk *= q;
            g[n][k] = (n == k) ? 1 : g[n - 1][k - 1] + qk * g[n - 1][k];
        }
    }
    long long total = 0;
    for (int k = 0; k <= d; ++k) total += g[d][k];
    return total;
}

inline SubspaceLattice subspace_lattice(int q, int dim, long long cap = 4096) {
    GF gf(q);
    require(dim >= 0, Errc::MalformedInput, "negative dimension");
    require(subspace_count(q, dim) <= cap, Errc::TooLarge,
            "subspace lattice of F_" + std::to_string(q) + "^" + std::to_string(dim) + " exceeds the cap");

    // enumerate all subspaces by breadth-first span closure
    std::map<std::vector<int>, std::vector<std::vector<int>>> seen; // members -> basis
    std::vector<std::vector<int>> frontier;
    seen[{0}] = {};
    frontier.push_back({0});
    const int nvecs = [&] {
        int v = 1;
        for (int i = 0; i < dim; ++i) v *= q;
        return v;
    }();
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& mem : frontier) {
            const auto& base = seen[mem];
            for (int v = 1; v < nvecs; ++v) {
                if (std::binary_search(mem.begin(), mem.end(), v)) continue;
                auto rows = base;
                rows.push_back(vec_decode(gf, v, dim));
                rows = rref(gf, rows);
                auto m2 = span_members(gf, rows, dim);
                if (seen.emplace(m2, rows).second) next.push_back(std::move(m2));
            }
        }
        frontier = std::move(next);
    }

    SubspaceLattice S{FiniteLattice{}, gf, dim, {}, {}, {}};
    // deterministic element order: by (dimension, member list)
    std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> elems(seen.begin(), seen.end());
    std::stable_sort(elems.begin(), elems.end(),
                     [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        S.members.push_back(elems[i].first);
        S.basis.push_back(elems[i].second);
        S.index_[elems[i].first] = i;
    }
    S.lat = FiniteLattice::from_leq(static_cast<int>(elems.size()), [&](int a, int b) {
        return std::includes(S.members[b].begin(), S.members[b].end(), S.members[a].begin(), S.members[a].end());
    });
    return S;
}

} // namespace latkit
