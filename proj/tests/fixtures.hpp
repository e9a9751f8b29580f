// Small lattices and rings shared across the test suite.
#pragma once

#include "latkit/lattice.hpp"

namespace fixtures {

using latkit::FiniteLattice;
using latkit::build_lattice;

inline FiniteLattice chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return build_lattice(covers, n);
}

// 0 < a_1, ..., a_k < 1 with the atoms pairwise incomparable
inline FiniteLattice diamond(int k) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= k; ++i) {
        covers.emplace_back(0, i);
        covers.emplace_back(i, k + 1);
    }
    return build_lattice(covers, k + 2);
}

inline FiniteLattice m3() { return diamond(3); }

// pentagon: 0 < x < z < 1 and 0 < y < 1
inline FiniteLattice n5() { return build_lattice({{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, 5); }

// Boolean lattice 2^k on subset masks
inline FiniteLattice boolean(int k) {
    const int n = 1 << k;
    return FiniteLattice::from_leq(n, [](int a, int b) { return (a & b) == a; });
}

} // namespace fixtures
