// Monoid-valued V-measures on finite Boolean lattices, additive V-relations,
// and the finite Vaught back-and-forth extraction of an isomorphism.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

struct CommMonoid {
    int m = 0;
    std::vector<int> add; // m*m
    int zero = 0;
    int plus(int a, int b) const { return add[a * m + b]; }
};

inline void validate_monoid(const CommMonoid& M) {
    require(M.m >= 1 && static_cast<int>(M.add.size()) == M.m * M.m, Errc::MalformedInput, "bad monoid table");
    for (int a = 0; a < M.m; ++a) {
        require(M.plus(M.zero, a) == a && M.plus(a, M.zero) == a, Errc::MalformedInput, "zero is not neutral", {a});
        for (int b = 0; b < M.m; ++b) {
            require(M.plus(a, b) == M.plus(b, a), Errc::MalformedInput, "monoid not commutative", {a, b});
            for (int c = 0; c < M.m; ++c)
                require(M.plus(M.plus(a, b), c) == M.plus(a, M.plus(b, c)), Errc::MalformedInput,
                        "monoid not associative", {a, b, c});
        }
    }
}

// (0, 1, ..., cap) with saturating addition; pick cap at least twice the
// largest value a measure takes so saturation never aliases a genuine sum.
inline CommMonoid nat_capped(int cap) {
    CommMonoid M;
    M.m = cap + 1;
    M.zero = 0;
    M.add.assign(static_cast<size_t>(M.m) * M.m, 0);
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b) M.add[a * M.m + b] = std::min(a + b, cap);
    return M;
}

// A monoid-valued map on a Boolean sublattice B of a host lattice.
struct Measure {
    std::vector<int> members; // B, sorted, Boolean sublattice of the host
    CommMonoid monoid;
    std::vector<int> mu; // host-indexed, -1 outside B
};

struct VMeasureViolation {
    enum Kind { None, ZeroAxiom, Additivity, Refinement } kind = None;
    std::vector<int> witness;
    bool ok() const { return kind == None; }
};

// The three V-measure axioms, checked exhaustively over B and the monoid.
inline VMeasureViolation verify_v_measure(const FiniteLattice& L, const Measure& M) {
    require(is_boolean_sublattice(L, M.members), Errc::PreconditionFailed, "domain is not a Boolean sublattice");
    validate_monoid(M.monoid);
    for (int x : M.members)
        if ((M.mu[x] == M.monoid.zero) != (x == L.bottom())) return {VMeasureViolation::ZeroAxiom, {x}};
    for (int x : M.members)
        for (int y : M.members) {
            if (L.meet(x, y) != L.bottom()) continue;
            if (M.mu[L.join(x, y)] != M.monoid.plus(M.mu[x], M.mu[y])) return {VMeasureViolation::Additivity, {x, y}};
        }
    for (int z : M.members)
        for (int alpha = 0; alpha < M.monoid.m; ++alpha)
            for (int beta = 0; beta < M.monoid.m; ++beta) {
                if (M.mu[z] != M.monoid.plus(alpha, beta)) continue;
                bool split = false;
                for (int x : M.members) {
                    if (!L.leq(x, z) || M.mu[x] != alpha) continue;
                    for (int y : M.members)
                        if (L.meet(x, y) == L.bottom() && L.join(x, y) == z && M.mu[y] == beta) {
                            split = true;
                            break;
                        }
                    if (split) break;
                }
                if (!split) return {VMeasureViolation::Refinement, {z, alpha, beta}};
            }
    return {};
}

// ---------------------------------------------------------------------------
// additive V-relations and Vaught's back-and-forth
// ---------------------------------------------------------------------------

struct VRelation {
    std::vector<uint8_t> at; // |A| x |B|
    int nb = 0;
    bool has(int x, int y) const { return at[x * nb + y] != 0; }
};

inline VRelation make_relation(const FiniteLattice& A, const FiniteLattice& B,
                               const std::vector<std::pair<int, int>>& pairs) {
    VRelation r;
    r.nb = B.n();
    r.at.assign(static_cast<size_t>(A.n()) * B.n(), 0);
    for (auto [x, y] : pairs) {
        require(x >= 0 && x < A.n() && y >= 0 && y < B.n(), Errc::MalformedInput, "pair out of range", {x, y});
        r.at[x * r.nb + y] = 1;
    }
    return r;
}

namespace detail {

inline std::vector<std::pair<int, int>> disjoint_decompositions(const FiniteLattice& L, int z) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < L.n(); ++a) {
        if (!L.leq(a, z)) continue;
        for (int b = 0; b < L.n(); ++b)
            if (L.meet(a, b) == L.bottom() && L.join(a, b) == z) out.emplace_back(a, b);
    }
    return out;
}

} // namespace detail

// Verify the additive V-relation axioms; throws NotAVRelation with the failed
// axiom and a witness.
inline void verify_v_relation(const FiniteLattice& A, const FiniteLattice& B, const VRelation& rel) {
    require(check_boolean(A).holds && check_boolean(B).holds, Errc::PreconditionFailed,
            "V-relations live between Boolean lattices");
    require(rel.has(A.top(), B.top()), Errc::NotAVRelation, "units are unrelated");
    for (int x = 0; x < A.n(); ++x)
        if (rel.has(x, B.bottom()) != (x == A.bottom())) fail(Errc::NotAVRelation, "zero axiom (A side)", {x});
    for (int y = 0; y < B.n(); ++y)
        if (rel.has(A.bottom(), y) != (y == B.bottom())) fail(Errc::NotAVRelation, "zero axiom (B side)", {y});
    // composition: related disjoint pairs join to a related pair
    for (int x0 = 0; x0 < A.n(); ++x0)
        for (int y0 = 0; y0 < B.n(); ++y0) {
            if (!rel.has(x0, y0)) continue;
            for (int x1 = 0; x1 < A.n(); ++x1) {
                if (A.meet(x0, x1) != A.bottom()) continue;
                for (int y1 = 0; y1 < B.n(); ++y1)
                    if (rel.has(x1, y1) && B.meet(y0, y1) == B.bottom() &&
                        !rel.has(A.join(x0, x1), B.join(y0, y1)))
                        fail(Errc::NotAVRelation, "composition axiom", {x0, x1, y0, y1});
            }
        }
    // splitting, both sides
    for (int x = 0; x < A.n(); ++x)
        for (int y = 0; y < B.n(); ++y) {
            if (!rel.has(x, y)) continue;
            for (auto [y0, y1] : detail::disjoint_decompositions(B, y)) {
                bool found = false;
                for (auto [x0, x1] : detail::disjoint_decompositions(A, x))
                    if (rel.has(x0, y0) && rel.has(x1, y1)) {
                        found = true;
                        break;
                    }
                if (!found) fail(Errc::NotAVRelation, "splitting axiom (B side)", {x, y, y0, y1});
            }
            for (auto [x0, x1] : detail::disjoint_decompositions(A, x)) {
                bool found = false;
                for (auto [y0, y1] : detail::disjoint_decompositions(B, y))
                    if (rel.has(x0, y0) && rel.has(x1, y1)) {
                        found = true;
                        break;
                    }
                if (!found) fail(Errc::NotAVRelation, "splitting axiom (A side)", {x, y, x0, x1});
            }
        }
}

// Back-and-forth refinement of the matched pair (1_A, 1_B) down to atoms.
// For finite Boolean lattices a verified additive V-relation always contains
// the graph of an isomorphism.
inline std::vector<int> vaught_isomorphism(const FiniteLattice& A, const FiniteLattice& B, const VRelation& rel) {
    verify_v_relation(A, B, rel);
    std::vector<std::pair<int, int>> pairs = {{A.top(), B.top()}};
    std::vector<std::pair<int, int>> atoms;
    while (!pairs.empty()) {
        auto [u, v] = pairs.back();
        pairs.pop_back();
        if (u == A.bottom()) {
            require(v == B.bottom(), Errc::Internal, "zero matched to nonzero");
            continue;
        }
        if (A.covers(A.bottom(), u)) { // u is an atom; v must be one as well
            require(B.covers(B.bottom(), v), Errc::Internal, "atom matched to a non-atom of a verified relation");
            atoms.emplace_back(u, v);
            continue;
        }
        // split off the least atom below u and push the matched halves
        int p = -1;
        for (int q : A.atoms())
            if (A.leq(q, u)) { p = q; break; }
        require(p >= 0, Errc::Internal, "no atom below a nonzero element");
        int rest = -1;
        for (int w = 0; w < A.n() && rest < 0; ++w)
            if (A.meet(p, w) == A.bottom() && A.join(p, w) == u) rest = w;
        bool matched = false;
        for (auto [q, vrest] : detail::disjoint_decompositions(B, v))
            if (rel.has(p, q) && rel.has(rest, vrest)) {
                pairs.emplace_back(p, q);
                pairs.emplace_back(rest, vrest);
                matched = true;
                break;
            }
        require(matched, Errc::Internal, "verified relation failed to split", {u, v});
    }
    // assemble the isomorphism from the atom matching
    std::vector<int> iso(A.n(), -1);
    for (int x = 0; x < A.n(); ++x) {
        int img = B.bottom();
        for (auto [p, q] : atoms)
            if (A.leq(p, x)) img = B.join(img, q);
        iso[x] = img;
    }
    for (int x = 0; x < A.n(); ++x) {
        require(rel.has(x, iso[x]), Errc::Internal, "graph of the extracted map leaves the relation", {x});
        for (int y = 0; y < A.n(); ++y) {
            require(iso[A.join(x, y)] == B.join(iso[x], iso[y]), Errc::Internal, "not a join homomorphism");
            require(iso[A.meet(x, y)] == B.meet(iso[x], iso[y]), Errc::Internal, "not a meet homomorphism");
        }
    }
    std::vector<int> seen(B.n(), 0);
    for (int x = 0; x < A.n(); ++x) seen[iso[x]] = 1;
    require(A.n() == B.n() && std::count(seen.begin(), seen.end(), 1) == B.n(), Errc::Internal, "map is not bijective");
    return iso;
}

// The equal-value relation of two V-measures into the same monoid.
inline VRelation relation_from_measures(const FiniteLattice& A, const Measure& lam, const FiniteLattice& B,
                                        const Measure& mu) {
    VRelation r;
    r.nb = B.n();
    r.at.assign(static_cast<size_t>(A.n()) * B.n(), 0);
    for (int x : lam.members)
        for (int y : mu.members)
            if (lam.mu[x] == mu.mu[y]) r.at[x * r.nb + y] = 1;
    return r;
}

} // namespace latkit
