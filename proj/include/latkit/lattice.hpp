// Finite lattices: dense order/join/meet tables, structural predicates,
// independence and perspectivity, neutral ideals, frames.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

class FiniteLattice {
public:
    FiniteLattice() = default;

    // Build from a reflexive order relation given as a predicate on indices.
    // Rejects inputs that are not lattices with a least element.
    template <typename LeqFn>
    static FiniteLattice from_leq(int n, LeqFn leq_of) {
        require(n >= 1, Errc::NotALattice, "empty carrier");
        FiniteLattice L;
        L.n_ = n;
        L.words_ = (n + 63) / 64;
        L.up_.assign(static_cast<size_t>(n) * L.words_, 0);
        L.down_.assign(static_cast<size_t>(n) * L.words_, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (leq_of(a, b)) {
                    L.up_[a * L.words_ + b / 64] |= uint64_t(1) << (b % 64);
                    L.down_[b * L.words_ + a / 64] |= uint64_t(1) << (a % 64);
                }
        for (int a = 0; a < n; ++a) {
            require(L.leq(a, a), Errc::NotALattice, "order not reflexive");
            for (int b = 0; b < n; ++b) {
                if (a != b && L.leq(a, b) && L.leq(b, a))
                    fail(Errc::NotALattice, "order not antisymmetric", {a, b});
                for (int c = 0; c < n && L.leq(a, b); ++c)
                    if (L.leq(b, c) && !L.leq(a, c)) fail(Errc::NotALattice, "order not transitive", {a, b, c});
            }
        }
        L.build_tables();
        return L;
    }

    int n() const { return n_; }
    bool leq(int a, int b) const { return (up_[a * words_ + b / 64] >> (b % 64)) & 1; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    int join(int a, int b) const { return join_[a * n_ + b]; }
    int meet(int a, int b) const { return meet_[a * n_ + b]; }
    int bottom() const { return bottom_; }

    // The greatest element; top() is -1 when the lattice is presented as
    // unbounded above (stage of a growing union), in which case operations
    // that need a unit refuse to run.
    int top() const { return top_declared_ ? top_ : -1; }
    bool has_top() const { return top_declared_; }
    int max_element() const { return top_; }

    FiniteLattice without_top_declaration() const {
        FiniteLattice L = *this;
        L.top_declared_ = false;
        return L;
    }

    template <typename Range>
    int join_all(const Range& xs) const {
        int r = bottom_;
        for (int x : xs) r = join(r, x);
        return r;
    }
    template <typename Range>
    int meet_all(const Range& xs) const {
        int r = top_;
        for (int x : xs) r = meet(r, x);
        return r;
    }

    std::vector<int> up_set(int a) const {
        std::vector<int> r;
        for (int b = 0; b < n_; ++b)
            if (leq(a, b)) r.push_back(b);
        return r;
    }
    std::vector<int> down_set(int a) const {
        std::vector<int> r;
        for (int b = 0; b < n_; ++b)
            if (leq(b, a)) r.push_back(b);
        return r;
    }
    int up_size(int a) const {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(up_[a * words_ + w]);
        return c;
    }

    bool covers(int a, int b) const { // a covered by b
        if (!lt(a, b)) return false;
        for (int c = 0; c < n_; ++c)
            if (lt(a, c) && lt(c, b)) return false;
        return true;
    }

    std::vector<std::pair<int, int>> cover_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (covers(a, b)) out.emplace_back(a, b);
        return out;
    }

    std::vector<int> atoms() const {
        std::vector<int> r;
        for (int a = 0; a < n_; ++a)
            if (covers(bottom_, a)) r.push_back(a);
        return r;
    }

private:
    void build_tables() {
        join_.assign(static_cast<size_t>(n_) * n_, -1);
        meet_.assign(static_cast<size_t>(n_) * n_, -1);
        std::vector<uint64_t> inter(words_);
        for (int a = 0; a < n_; ++a)
            for (int b = a; b < n_; ++b) {
                // least upper bound: the unique u with up(u) = up(a) & up(b)
                int j = -1, m = -1;
                for (int w = 0; w < words_; ++w) inter[w] = up_[a * words_ + w] & up_[b * words_ + w];
                for (int u = 0; u < n_ && j < 0; ++u)
                    if (((inter[u / 64] >> (u % 64)) & 1) && std::equal(inter.begin(), inter.end(), up_.begin() + u * words_))
                        j = u;
                if (j < 0) fail(Errc::NotALattice, "pair without a join", {a, b});
                for (int w = 0; w < words_; ++w) inter[w] = down_[a * words_ + w] & down_[b * words_ + w];
                for (int u = 0; u < n_ && m < 0; ++u)
                    if (((inter[u / 64] >> (u % 64)) & 1) && std::equal(inter.begin(), inter.end(), down_.begin() + u * words_))
                        m = u;
                if (m < 0) fail(Errc::NotALattice, "pair without a meet", {a, b});
                join_[a * n_ + b] = join_[b * n_ + a] = j;
                meet_[a * n_ + b] = meet_[b * n_ + a] = m;
            }
        bottom_ = 0;
        top_ = 0;
        for (int a = 1; a < n_; ++a) {
            bottom_ = meet(bottom_, a);
            top_ = join(top_, a);
        }
        require(std::all_of(join_.begin(), join_.end(), [](int v) { return v >= 0; }), Errc::Internal, "join table hole");
        for (int a = 0; a < n_; ++a)
            require(leq(bottom_, a), Errc::NoBottom, "no least element");
    }

    int n_ = 0, words_ = 0;
    std::vector<uint64_t> up_, down_;
    std::vector<int> join_, meet_;
    int bottom_ = -1, top_ = -1;
    bool top_declared_ = true;
};

// Build from a cover list. The covers are transitively closed; the result must
// be a lattice with a least element.
inline FiniteLattice build_lattice(const std::vector<std::pair<int, int>>& covers, int n) {
    require(n >= 1, Errc::NotALattice, "empty carrier");
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) leq[a * n + a] = 1;
    for (auto [lo, hi] : covers) {
        require(lo >= 0 && lo < n && hi >= 0 && hi < n, Errc::MalformedInput, "cover index out of range", {lo, hi});
        leq[lo * n + hi] = 1;
    }
    for (int k = 0; k < n; ++k) // transitive closure
        for (int a = 0; a < n; ++a)
            if (leq[a * n + k])
                for (int b = 0; b < n; ++b)
                    if (leq[k * n + b]) leq[a * n + b] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq[a * n + b] && leq[b * n + a]) fail(Errc::NotALattice, "cover digraph has a cycle", {a, b});
    return FiniteLattice::from_leq(n, [&](int a, int b) { return leq[a * n + b] != 0; });
}

// ---------------------------------------------------------------------------
// predicates
// ---------------------------------------------------------------------------

enum class Predicate {
    Modular,
    Complemented,
    SectionallyComplemented,
    MeetSemidistributive,
    Arguesian,
    Simple,
    Boolean,
};

inline std::optional<Predicate> predicate_from_string(const std::string& s) {
    if (s == "modular") return Predicate::Modular;
    if (s == "complemented") return Predicate::Complemented;
    if (s == "sectionally_complemented" || s == "sectionally-complemented") return Predicate::SectionallyComplemented;
    if (s == "meet_semidistributive" || s == "meet-semidistributive") return Predicate::MeetSemidistributive;
    if (s == "arguesian") return Predicate::Arguesian;
    if (s == "simple") return Predicate::Simple;
    if (s == "boolean") return Predicate::Boolean;
    return std::nullopt;
}

struct PredicateResult {
    bool holds = false;
    std::vector<int> witness; // violating tuple when holds == false
    explicit operator bool() const { return holds; }
};

inline PredicateResult check_modular(const FiniteLattice& L) {
    for (int z = 0; z < L.n(); ++z)
        for (int x = 0; x < L.n(); ++x) {
            if (!L.leq(z, x)) continue;
            for (int y = 0; y < L.n(); ++y)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), z)) return {false, {x, y, z}};
        }
    return {true, {}};
}

// Independent modularity test: a lattice is non-modular exactly when it
// contains a pentagon x < z, y with x v y = z v y and x ^ y = z ^ y.
inline PredicateResult find_pentagon(const FiniteLattice& L) {
    for (int x = 0; x < L.n(); ++x)
        for (int z = 0; z < L.n(); ++z) {
            if (!L.lt(x, z)) continue;
            for (int y = 0; y < L.n(); ++y)
                if (L.join(x, y) == L.join(z, y) && L.meet(x, y) == L.meet(z, y)) return {true, {x, y, z}};
        }
    return {false, {}};
}

inline bool is_complement(const FiniteLattice& L, int a, int x) {
    return L.has_top() && L.meet(a, x) == L.bottom() && L.join(a, x) == L.top();
}

inline std::vector<int> complements_of(const FiniteLattice& L, int a) {
    std::vector<int> r;
    for (int x = 0; x < L.n(); ++x)
        if (is_complement(L, a, x)) r.push_back(x);
    return r;
}

inline PredicateResult check_complemented(const FiniteLattice& L) {
    require(L.has_top(), Errc::UnboundedLattice, "complemented check needs a unit");
    for (int a = 0; a < L.n(); ++a) {
        bool found = false;
        for (int x = 0; x < L.n() && !found; ++x) found = is_complement(L, a, x);
        if (!found) return {false, {a}};
    }
    return {true, {}};
}

inline PredicateResult check_sectionally_complemented(const FiniteLattice& L) {
    for (int b = 0; b < L.n(); ++b)
        for (int a = 0; a < L.n(); ++a) {
            if (!L.leq(a, b)) continue;
            bool found = false;
            for (int x = 0; x < L.n() && !found; ++x)
                found = L.meet(a, x) == L.bottom() && L.join(a, x) == b;
            if (!found) return {false, {a, b}};
        }
    return {true, {}};
}

inline PredicateResult check_meet_semidistributive(const FiniteLattice& L) {
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y)
            for (int z = 0; z < L.n(); ++z)
                if (L.meet(x, y) == L.meet(x, z) && L.meet(x, y) != L.meet(x, L.join(y, z)))
                    return {false, {x, y, z}};
    return {true, {}};
}

inline PredicateResult check_distributive(const FiniteLattice& L) {
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y)
            for (int z = 0; z < L.n(); ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return {false, {x, y, z}};
    return {true, {}};
}

// Standard six-variable Arguesian inequality (Jonsson's form, taken from the
// lattice-theory literature).
inline PredicateResult check_arguesian(const FiniteLattice& L) {
    require(L.has_top(), Errc::UnboundedLattice, "arguesian check needs a unit");
    const int n = L.n();
    for (int a0 = 0; a0 < n; ++a0)
        for (int a1 = 0; a1 < n; ++a1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b0 = 0; b0 < n; ++b0)
                    for (int b1 = 0; b1 < n; ++b1)
                        for (int b2 = 0; b2 < n; ++b2) {
                            const int lhs = L.meet(L.meet(L.join(a0, b0), L.join(a1, b1)), L.join(a2, b2));
                            const int c0 = L.meet(L.join(a1, a2), L.join(b1, b2));
                            const int c1 = L.meet(L.join(a0, a2), L.join(b0, b2));
                            const int c2 = L.meet(L.join(a0, a1), L.join(b0, b1));
                            const int d = L.meet(c2, L.join(c0, c1));
                            const int rhs = L.join(L.meet(L.join(d, a1), a0), L.meet(L.join(d, b1), b0));
                            if (!L.leq(lhs, rhs)) return {false, {a0, a1, a2, b0, b1, b2}};
                        }
    return {true, {}};
}

// ---------------------------------------------------------------------------
// independence, oplus, perspectivity
// ---------------------------------------------------------------------------

struct ElementSeq {
    std::vector<int> entries;
};

// Incremental independence criterion, valid in modular lattices:
// a_k ^ (a_0 v ... v a_{k-1}) = 0 for every k.
inline bool independent_incremental(const FiniteLattice& L, const std::vector<int>& seq) {
    int below = L.bottom();
    for (int a : seq) {
        if (L.meet(a, below) != L.bottom()) return false;
        below = L.join(below, a);
    }
    return true;
}

// Full definition: joins over index sets X, Y intersect as the join over X n Y.
inline bool independent_full(const FiniteLattice& L, const std::vector<int>& seq) {
    const int k = static_cast<int>(seq.size());
    require(k <= 20, Errc::TooLarge, "independence check over too many subsets");
    std::vector<int> join_of(size_t(1) << k, L.bottom());
    for (uint32_t X = 1; X < (uint32_t(1) << k); ++X) {
        const int i = __builtin_ctz(X);
        join_of[X] = L.join(seq[i], join_of[X & (X - 1)]);
    }
    for (uint32_t X = 0; X < (uint32_t(1) << k); ++X)
        for (uint32_t Y = X; Y < (uint32_t(1) << k); ++Y)
            if (L.meet(join_of[X], join_of[Y]) != join_of[X & Y]) return false;
    return true;
}

inline bool independent(const FiniteLattice& L, const std::vector<int>& seq) {
    if (check_modular(L).holds) return independent_incremental(L, seq);
    return independent_full(L, seq);
}

// Join of an independent sequence; fails with NotIndependent otherwise.
inline int oplus(const FiniteLattice& L, const std::vector<int>& seq) {
    require(independent(L, seq), Errc::NotIndependent, "sequence is not independent");
    return L.join_all(seq);
}

// Least x with a (+) x = b (+) x, if any.
inline std::optional<int> perspective(const FiniteLattice& L, int a, int b) {
    for (int x = 0; x < L.n(); ++x)
        if (L.meet(a, x) == L.bottom() && L.meet(b, x) == L.bottom() && L.join(a, x) == L.join(b, x)) return x;
    return std::nullopt;
}

// Least x <= b with a (+) x = b, for a <= b.
inline std::optional<int> sectional_complement(const FiniteLattice& L, int a, int b) {
    for (int x = 0; x < L.n(); ++x)
        if (L.leq(x, b) && L.meet(a, x) == L.bottom() && L.join(a, x) == b) return x;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ideals and neutrality
// ---------------------------------------------------------------------------

struct IdealSet {
    std::vector<int> members; // sorted
    bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline bool is_ideal(const FiniteLattice& L, const std::vector<int>& members) {
    if (members.empty()) return false;
    std::vector<uint8_t> in(L.n(), 0);
    for (int x : members) in[x] = 1;
    for (int x : members) {
        for (int y = 0; y < L.n(); ++y)
            if (L.leq(y, x) && !in[y]) return false;
        for (int y : members)
            if (!in[L.join(x, y)]) return false;
    }
    return true;
}

// Neutral element test via the median characterization: u is neutral iff
// (u^x) v (x^y) v (y^u) = (u v x) ^ (x v y) ^ (y v u) for all x, y.
inline bool is_neutral_element(const FiniteLattice& L, int u) {
    for (int x = 0; x < L.n(); ++x)
        for (int y = 0; y < L.n(); ++y) {
            const int lo = L.join(L.join(L.meet(u, x), L.meet(x, y)), L.meet(y, u));
            const int hi = L.meet(L.meet(L.join(u, x), L.join(x, y)), L.join(y, u));
            if (lo != hi) return false;
        }
    return true;
}

// Least neutral ideal containing x. On sectionally complemented modular
// lattices this is the least ideal containing x closed under perspectivity;
// in general it is computed from neutral elements (every ideal of a finite
// lattice is principal, so neutral ideals correspond to neutral elements).
inline IdealSet neutral_ideal_generated(const FiniteLattice& L, int x) {
    const bool scm = check_modular(L).holds && check_sectionally_complemented(L).holds;
    if (scm) {
        std::vector<uint8_t> in(L.n(), 0);
        for (int y = 0; y < L.n(); ++y)
            if (L.leq(y, x)) in[y] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < L.n(); ++a) {
                if (!in[a]) continue;
                for (int b = 0; b < L.n(); ++b) {
                    if (in[b]) {
                        const int j = L.join(a, b);
                        if (!in[j]) { in[j] = 1; grew = true; }
                        continue;
                    }
                    if (L.leq(b, a) || perspective(L, b, a)) { in[b] = 1; grew = true; }
                }
            }
        }
        IdealSet I;
        for (int y = 0; y < L.n(); ++y)
            if (in[y]) I.members.push_back(y);
        return I;
    }
    // general case: meet of all neutral elements above x
    int m = -1;
    for (int u = 0; u < L.n(); ++u)
        if (L.leq(x, u) && is_neutral_element(L, u)) m = m < 0 ? u : L.meet(m, u);
    require(m >= 0, Errc::Internal, "no neutral element above x"); // the largest element is neutral
    require(is_neutral_element(L, m), Errc::Internal, "meet of neutral elements not neutral");
    IdealSet I;
    for (int y = 0; y < L.n(); ++y)
        if (L.leq(y, m)) I.members.push_back(y);
    return I;
}

inline PredicateResult check_simple(const FiniteLattice& L) {
    if (L.n() < 2) return {false, {}};
    for (int x = 1; x < L.n(); ++x) {
        if (x == L.bottom()) continue;
        if (static_cast<int>(neutral_ideal_generated(L, x).members.size()) != L.n()) return {false, {x}};
    }
    return {true, {}};
}

inline PredicateResult check_boolean(const FiniteLattice& L) {
    require(L.has_top(), Errc::UnboundedLattice, "boolean check needs a unit");
    if (auto d = check_distributive(L); !d.holds) return d;
    return check_complemented(L);
}

inline PredicateResult check_predicate(const FiniteLattice& L, Predicate which) {
    switch (which) {
    case Predicate::Modular: return check_modular(L);
    case Predicate::Complemented: return check_complemented(L);
    case Predicate::SectionallyComplemented: return check_sectionally_complemented(L);
    case Predicate::MeetSemidistributive: return check_meet_semidistributive(L);
    case Predicate::Arguesian: return check_arguesian(L);
    case Predicate::Simple: return check_simple(L);
    case Predicate::Boolean: return check_boolean(L);
    }
    fail(Errc::MalformedInput, "unknown predicate");
}

// ---------------------------------------------------------------------------
// the (x, y, z) distributivity lemma for modular lattices
// ---------------------------------------------------------------------------

// If (x v y) ^ z <= y then x ^ (y v z) = x ^ y and (x v z) ^ (y v z) = (x ^ y) v z.
// Returns whether the hypothesis held; violations of the conclusion raise
// ConclusionViolated (they would indicate a modularity bug).
inline bool check_xyz_lemma(const FiniteLattice& L, int x, int y, int z) {
    if (!L.leq(L.meet(L.join(x, y), z), y)) return false;
    if (L.meet(x, L.join(y, z)) != L.meet(x, y))
        fail(Errc::ConclusionViolated, "x ^ (y v z) != x ^ y", {x, y, z});
    if (L.meet(L.join(x, z), L.join(y, z)) != L.join(L.meet(x, y), z))
        fail(Errc::ConclusionViolated, "(x v z) ^ (y v z) != (x ^ y) v z", {x, y, z});
    return true;
}

// ---------------------------------------------------------------------------
// frames
// ---------------------------------------------------------------------------

struct Frame {
    std::vector<int> a; // a_0 .. a_{k-1}, independent
    std::vector<int> c; // c_1 .. c_{k-1}; a_0 ~_{c_i} a_i
    bool large = false; // neutral ideal generated by a_0 is everything
};

inline bool is_frame(const FiniteLattice& L, const Frame& f) {
    if (f.a.empty() || f.c.size() + 1 != f.a.size()) return false;
    if (!independent(L, f.a)) return false;
    for (size_t i = 1; i < f.a.size(); ++i) {
        const int x = f.c[i - 1];
        if (L.meet(f.a[0], x) != L.bottom() || L.meet(f.a[i], x) != L.bottom()) return false;
        if (L.join(f.a[0], x) != L.join(f.a[i], x)) return false;
    }
    return true;
}

inline bool frame_is_large(const FiniteLattice& L, const Frame& f) {
    return static_cast<int>(neutral_ideal_generated(L, f.a[0]).members.size()) == L.n();
}

// Enumerate frames of the given order in lexicographic order of
// (a_0..a_{k-1}, c_1..c_{k-1}); the callback returns false to stop early.
template <typename Fn>
void for_each_frame(const FiniteLattice& L, int order, bool require_large, Fn&& cb) {
    require(order >= 1, Errc::MalformedInput, "frame order must be positive");
    const bool modular = check_modular(L).holds;
    std::vector<int> a, c;
    std::vector<uint8_t> large_memo(L.n(), 2);
    auto a0_large = [&](int a0) {
        if (large_memo[a0] == 2)
            large_memo[a0] = static_cast<int>(neutral_ideal_generated(L, a0).members.size()) == L.n() ? 1 : 0;
        return large_memo[a0] == 1;
    };

    // extend c_1..c_{k-1} once the a-sequence is fixed
    auto extend_axes = [&](auto&& self, auto&& emit) -> bool {
        const size_t i = c.size() + 1;
        if (i == a.size()) return emit();
        for (int x = 0; x < L.n(); ++x) {
            if (L.meet(a[0], x) != L.bottom() || L.meet(a[i], x) != L.bottom()) continue;
            if (L.join(a[0], x) != L.join(a[i], x)) continue;
            c.push_back(x);
            if (!self(self, emit)) return false;
            c.pop_back();
        }
        return true;
    };
    auto extend_a = [&](auto&& self) -> bool {
        if (static_cast<int>(a.size()) == order) {
            auto emit = [&]() {
                Frame f{a, c, a0_large(a[0])};
                if (require_large && !f.large) return true;
                return cb(f);
            };
            return extend_axes(extend_axes, emit);
        }
        for (int x = 0; x < L.n(); ++x) {
            a.push_back(x);
            const bool ok = modular ? independent_incremental(L, a) : independent_full(L, a);
            if (ok) {
                if (!a.empty() && require_large && a.size() == 1 && !a0_large(x)) {
                    a.pop_back();
                    continue;
                }
                if (!self(self)) { a.pop_back(); return false; }
            }
            a.pop_back();
        }
        return true;
    };
    extend_a(extend_a);
}

inline std::vector<Frame> find_frames(const FiniteLattice& L, int order, bool require_large, size_t limit = 0) {
    std::vector<Frame> out;
    for_each_frame(L, order, require_large, [&](const Frame& f) {
        out.push_back(f);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

// ---------------------------------------------------------------------------
// sublattices and isomorphism
// ---------------------------------------------------------------------------

inline bool closed_under_ops(const FiniteLattice& L, const std::vector<int>& members) {
    std::vector<uint8_t> in(L.n(), 0);
    for (int x : members) in[x] = 1;
    for (int x : members)
        for (int y : members)
            if (!in[L.join(x, y)] || !in[L.meet(x, y)]) return false;
    return true;
}

// Lattice induced on a subset that is closed under join and meet.
// Also returns the element map (sub index -> parent index) by sorted order.
inline FiniteLattice induced_sublattice(const FiniteLattice& L, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    require(closed_under_ops(L, members), Errc::PreconditionFailed, "subset is not a sublattice");
    return FiniteLattice::from_leq(static_cast<int>(members.size()),
                                   [&](int a, int b) { return L.leq(members[a], members[b]); });
}

// Closure of a subset under joins (always contains the bottom).
inline std::vector<int> join_closure(const FiniteLattice& L, const std::vector<int>& seed) {
    std::vector<uint8_t> in(L.n(), 0);
    in[L.bottom()] = 1;
    std::vector<int> work = {L.bottom()};
    for (int x : seed)
        if (!in[x]) { in[x] = 1; work.push_back(x); }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            const int z = L.join(work[i], work[j]);
            if (!in[z]) { in[z] = 1; work.push_back(z); }
        }
    std::sort(work.begin(), work.end());
    return work;
}

inline std::vector<int> sublattice_closure(const FiniteLattice& L, const std::vector<int>& seed) {
    std::vector<uint8_t> in(L.n(), 0);
    std::vector<int> work;
    for (int x : seed)
        if (!in[x]) { in[x] = 1; work.push_back(x); }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j <= i; ++j)
            for (int z : {L.join(work[i], work[j]), L.meet(work[i], work[j])})
                if (!in[z]) { in[z] = 1; work.push_back(z); }
    std::sort(work.begin(), work.end());
    return work;
}

// Is the subset a Boolean sublattice of L with the same bounds?
inline bool is_boolean_sublattice(const FiniteLattice& L, const std::vector<int>& members) {
    if (!L.has_top()) return false;
    if (!std::binary_search(members.begin(), members.end(), L.bottom())) return false;
    if (!std::binary_search(members.begin(), members.end(), L.top())) return false;
    if (!closed_under_ops(L, members)) return false;
    const FiniteLattice B = induced_sublattice(L, members);
    return check_distributive(B).holds && check_complemented(B).holds;
}

// Backtracking lattice isomorphism; returns the element map A -> B if any.
inline std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& A, const FiniteLattice& B) {
    if (A.n() != B.n()) return std::nullopt;
    const int n = A.n();
    // invariant: (up-set size, down-set size) multisets must match
    auto sig = [](const FiniteLattice& L, int x) {
        int up = 0, dn = 0;
        for (int y = 0; y < L.n(); ++y) {
            up += L.leq(x, y);
            dn += L.leq(y, x);
        }
        return std::pair<int, int>(up, dn);
    };
    std::vector<std::pair<int, int>> sa(n), sb(n);
    for (int i = 0; i < n; ++i) {
        sa[i] = sig(A, i);
        sb[i] = sig(B, i);
    }
    {
        auto ma = sa, mb = sb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return std::nullopt;
    }
    std::vector<int> map(n, -1), used(n, 0);
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || sa[i] != sb[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                ok = A.leq(i, k) == B.leq(j, map[k]) && A.leq(k, i) == B.leq(map[k], j);
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (self(self, i + 1)) return true;
            map[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    // an order isomorphism between lattices preserves join and meet
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            require(map[A.join(i, k)] == B.join(map[i], map[k]) && map[A.meet(i, k)] == B.meet(map[i], map[k]),
                    Errc::Internal, "order isomorphism failed to preserve operations");
    return map;
}

// Maximal Boolean sublattices of a bounded lattice (brute force, desk scale).
inline std::vector<std::vector<int>> maximal_boolean_sublattices(const FiniteLattice& L) {
    require(L.n() <= 20, Errc::TooLarge, "maximal Boolean sublattice scan capped at 20 elements");
    std::vector<std::vector<int>> boolean;
    const int n = L.n();
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (!((mask >> L.bottom()) & 1) || !((mask >> L.top()) & 1)) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) members.push_back(i);
        if (is_boolean_sublattice(L, members)) boolean.push_back(members);
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& b : boolean) {
        bool is_max = true;
        for (const auto& c : boolean)
            if (b != c && std::includes(c.begin(), c.end(), b.begin(), b.end())) { is_max = false; break; }
        if (is_max) maximal.push_back(b);
    }
    return maximal;
}

} // namespace latkit
