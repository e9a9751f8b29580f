// Banaschewski functions and measures on finite lattices: verification,
// search, the atom formula for meet-semidistributive lattices, and the
// decomposition-refinement construction with Boolean range.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// Partial antitone complement selector: table[x] = -1 outside the domain.
struct BanFunction {
    std::vector<int> table;
    std::vector<int> domain() const {
        std::vector<int> d;
        for (int x = 0; x < static_cast<int>(table.size()); ++x)
            if (table[x] >= 0) d.push_back(x);
        return d;
    }
    bool defined(int x) const { return table[x] >= 0; }
    int operator()(int x) const { return table[x]; }
    std::vector<int> range() const {
        auto r = table;
        r.erase(std::remove(r.begin(), r.end(), -1), r.end());
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }
};

struct BanViolation {
    enum Kind { None, NotComplement, NotAntitone } kind = None;
    int x = -1, y = -1;
    bool ok() const { return kind == None; }
};

// Check antitonicity and x (+) f(x) = 1 on the declared domain; the first
// violation in element order is reported.
inline BanViolation verify_ban_function(const FiniteLattice& L, const BanFunction& f) {
    require(L.has_top(), Errc::UnboundedLattice, "Banaschewski functions need a unit");
    for (int x = 0; x < L.n(); ++x) {
        if (!f.defined(x)) continue;
        if (!is_complement(L, x, f(x))) return {BanViolation::NotComplement, x, -1};
        for (int y = 0; y < L.n(); ++y)
            if (f.defined(y) && L.leq(x, y) && !L.leq(f(y), f(x))) return {BanViolation::NotAntitone, x, y};
    }
    return {};
}

namespace detail {

// DFS over total assignments, elements in decreasing up-set size (tightest
// antitone constraints first), candidate complements in increasing index.
template <typename Fn>
void for_each_ban_function(const FiniteLattice& L, bool require_boolean_range, Fn&& cb) {
    require(L.has_top(), Errc::UnboundedLattice, "Banaschewski functions need a unit");
    require(check_complemented(L).holds, Errc::NotComplemented, "lattice is not complemented");
    const int n = L.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return L.up_size(a) > L.up_size(b); });
    std::vector<std::vector<int>> cands(n);
    for (int x = 0; x < n; ++x) cands[x] = complements_of(L, x);
    BanFunction f;
    f.table.assign(n, -1);
    bool stop = false;
    auto dfs = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == n) {
            if (require_boolean_range) {
                const auto closure = sublattice_closure(L, f.range());
                if (!is_boolean_sublattice(L, closure)) return;
                require(closure == f.range(), Errc::Internal, "Boolean-range closure differs from range");
            }
            if (!cb(f)) stop = true;
            return;
        }
        const int x = order[i];
        for (int c : cands[x]) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                const int y = order[j];
                if (L.leq(x, y)) ok = L.leq(f(y), c);
                if (ok && L.leq(y, x)) ok = L.leq(c, f(y));
            }
            if (!ok) continue;
            f.table[x] = c;
            self(self, i + 1);
            f.table[x] = -1;
            if (stop) return;
        }
    };
    dfs(dfs, 0);
}

} // namespace detail

// First Banaschewski function in canonical search order, if any.
inline std::optional<BanFunction> search_ban_function(const FiniteLattice& L, bool require_boolean_range = false) {
    std::optional<BanFunction> out;
    detail::for_each_ban_function(L, require_boolean_range, [&](const BanFunction& f) {
        out = f;
        return false;
    });
    return out;
}

// f(x) = join of the atoms disjoint from x, with no validity guarantee.
inline BanFunction atom_formula(const FiniteLattice& L) {
    const auto at = L.atoms();
    BanFunction f;
    f.table.assign(L.n(), -1);
    for (int x = 0; x < L.n(); ++x) {
        int v = L.bottom();
        for (int p : at)
            if (L.meet(p, x) == L.bottom()) v = L.join(v, p);
        f.table[x] = v;
    }
    return f;
}

// The atom formula is a Banaschewski function whenever the lattice is
// meet-semidistributive and its atoms join to the top.
inline BanFunction atom_ban_function(const FiniteLattice& L) {
    require(L.has_top(), Errc::UnboundedLattice, "needs a unit");
    require(check_meet_semidistributive(L).holds, Errc::PreconditionFailed, "lattice is not meet-semidistributive");
    require(L.join_all(L.atoms()) == L.top(), Errc::PreconditionFailed, "atoms do not join to the top");
    BanFunction f = atom_formula(L);
    const auto v = verify_ban_function(L, f);
    require(v.ok(), Errc::LemmaViolated, "atom formula failed on a valid input", {v.x, v.y});
    return f;
}

// ---------------------------------------------------------------------------
// decompositions of the unit and their refinements
// ---------------------------------------------------------------------------

// An independent finite sequence joining to 1; zero entries are permitted and
// kept (the positions in Z(u)).
struct Decomposition {
    std::vector<int> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
};

inline void validate_decomposition(const FiniteLattice& L, const Decomposition& u) {
    require(L.has_top(), Errc::UnboundedLattice, "decompositions live in a bounded lattice");
    require(independent_incremental(L, u.blocks), Errc::NotIndependent, "blocks are not independent");
    require(L.join_all(u.blocks) == L.top(), Errc::PreconditionFailed, "blocks do not join to 1");
}

inline Decomposition prune_zero_blocks(const FiniteLattice& L, const Decomposition& u) {
    Decomposition p;
    for (int b : u.blocks)
        if (b != L.bottom()) p.blocks.push_back(b);
    return p;
}

// phi maps source indices onto target indices; fibers are intervals and the
// target block is the join of its fiber.
struct RefinementMap {
    Decomposition source; // v
    Decomposition target; // u
    std::vector<int> phi;
};

inline void validate_refinement(const FiniteLattice& L, const RefinementMap& rm) {
    validate_decomposition(L, rm.source);
    validate_decomposition(L, rm.target);
    require(static_cast<int>(rm.phi.size()) == rm.source.size(), Errc::MalformedInput, "phi size mismatch");
    for (size_t l = 0; l + 1 < rm.phi.size(); ++l)
        require(rm.phi[l] <= rm.phi[l + 1] && rm.phi[l + 1] <= rm.phi[l] + 1, Errc::MalformedInput,
                "phi must be isotone and surjective");
    if (rm.target.size() > 0) {
        require(!rm.phi.empty() && rm.phi.front() == 0 && rm.phi.back() == rm.target.size() - 1,
                Errc::MalformedInput, "phi must be surjective");
    }
    for (int k = 0; k < rm.target.size(); ++k) {
        int j = L.bottom();
        for (int l = 0; l < rm.source.size(); ++l)
            if (rm.phi[l] == k) j = L.join(j, rm.source.blocks[l]);
        require(j == rm.target.blocks[k], Errc::MalformedInput, "target block is not the join of its fiber", {k});
    }
}

struct DecompProfile {
    std::vector<int> F, G; // index sets
    int f = -1, g = -1;    // joins over F and G
};

// F_u(x), G_u(x) and their joins, with the unit/zero laws asserted:
// x v f_u(x) = 1, x ^ g_u(x) = 0, g_u(x) <= f_u(x).
inline DecompProfile profile(const FiniteLattice& L, const Decomposition& u, int x) {
    DecompProfile p;
    p.f = L.bottom();
    p.g = L.bottom();
    int below = L.bottom(); // u_{<k}
    for (int k = 0; k < u.size(); ++k) {
        const int uk = u.blocks[k];
        const int xk = L.join(x, below);
        if (!L.leq(uk, xk)) {
            p.F.push_back(k);
            p.f = L.join(p.f, uk);
        }
        if (L.meet(uk, xk) == L.bottom()) {
            p.G.push_back(k);
            p.g = L.join(p.g, uk);
        }
        below = L.join(below, uk);
    }
    require(L.join(x, p.f) == L.top(), Errc::LemmaViolated, "x v f_u(x) != 1", {x});
    require(L.meet(x, p.g) == L.bottom(), Errc::LemmaViolated, "x ^ g_u(x) != 0", {x});
    require(L.leq(p.g, p.f), Errc::LemmaViolated, "g_u(x) !<= f_u(x)", {x});
    return p;
}

// u decides x when F_u(x) is contained in G_u(x); then f_u(x) = g_u(x).
inline bool decides(const FiniteLattice& L, const Decomposition& u, int x) {
    const auto p = profile(L, u, x);
    const bool dec = std::includes(p.G.begin(), p.G.end(), p.F.begin(), p.F.end());
    if (dec) require(p.f == p.g, Errc::LemmaViolated, "deciding decomposition with f != g", {x});
    return dec;
}

// Split every block as u_k = (u_k ^ (x v u_{<k})) (+) complement; the result
// refines u and decides x.
inline std::pair<Decomposition, RefinementMap> refine_to_decide(const FiniteLattice& L, const Decomposition& u, int x) {
    Decomposition v;
    std::vector<int> phi;
    int below = L.bottom();
    for (int k = 0; k < u.size(); ++k) {
        const int uk = u.blocks[k];
        const int lo = L.meet(uk, L.join(x, below));
        const auto hi = sectional_complement(L, lo, uk);
        require(hi.has_value(), Errc::NoSectionalComplement, "no sectional complement inside a block", {lo, uk});
        v.blocks.push_back(lo);
        v.blocks.push_back(*hi);
        phi.push_back(k);
        phi.push_back(k);
        below = L.join(below, uk);
    }
    RefinementMap rm{v, u, phi};
    validate_refinement(L, rm);
    require(decides(L, v, x), Errc::LemmaViolated, "refinement fails to decide x", {x});
    return {v, rm};
}

struct RefinementReport {
    bool blockwise = false;        // v_l <= u_phi(l), u_{<phi(l)} <= v_{<l}
    bool f_image = false;          // phi F_v(x) subset of F_u(x)
    bool g_preimage = false;       // phi^{-1} G_u(x) subset of G_v(x)
    bool f_decreases = false;      // f_v(x) <= f_u(x)
    bool g_increases = false;      // g_u(x) <= g_v(x)
    bool decide_transfer = false;  // target decides => source decides, same f
    bool target_decides = false;
};

// The six refinement inequalities; any failure raises LemmaViolated since
// they hold in every modular lattice.
inline RefinementReport verify_refinement_lemma(const FiniteLattice& L, const RefinementMap& rm, int x) {
    validate_refinement(L, rm);
    RefinementReport rep;
    const auto& v = rm.source;
    const auto& u = rm.target;
    const auto pv = profile(L, v, x);
    const auto pu = profile(L, u, x);

    rep.blockwise = true;
    {
        int below_v = L.bottom();
        std::vector<int> below_u(u.size() + 1, L.bottom());
        for (int k = 0; k < u.size(); ++k) below_u[k + 1] = L.join(below_u[k], u.blocks[k]);
        for (int l = 0; l < v.size(); ++l) {
            if (!L.leq(v.blocks[l], u.blocks[rm.phi[l]])) rep.blockwise = false;
            if (!L.leq(below_u[rm.phi[l]], below_v)) rep.blockwise = false;
            below_v = L.join(below_v, v.blocks[l]);
        }
    }
    require(rep.blockwise, Errc::LemmaViolated, "refinement item (i)", {x});

    rep.f_image = std::all_of(pv.F.begin(), pv.F.end(), [&](int l) {
        return std::binary_search(pu.F.begin(), pu.F.end(), rm.phi[l]);
    });
    require(rep.f_image, Errc::LemmaViolated, "refinement item (ii)", {x});

    rep.g_preimage = true;
    for (int l = 0; l < v.size(); ++l)
        if (std::binary_search(pu.G.begin(), pu.G.end(), rm.phi[l]) &&
            !std::binary_search(pv.G.begin(), pv.G.end(), l))
            rep.g_preimage = false;
    require(rep.g_preimage, Errc::LemmaViolated, "refinement item (iii)", {x});

    rep.f_decreases = L.leq(pv.f, pu.f);
    require(rep.f_decreases, Errc::LemmaViolated, "refinement item (iv)", {x});
    rep.g_increases = L.leq(pu.g, pv.g);
    require(rep.g_increases, Errc::LemmaViolated, "refinement item (v)", {x});

    rep.target_decides = std::includes(pu.G.begin(), pu.G.end(), pu.F.begin(), pu.F.end());
    if (rep.target_decides) {
        rep.decide_transfer = decides(L, v, x) && pu.f == pv.f;
        require(rep.decide_transfer, Errc::LemmaViolated, "refinement item (vi)", {x});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// the refinement-chain construction of a Banaschewski function
// ---------------------------------------------------------------------------

struct BuildBanResult {
    BanFunction f;
    std::vector<int> boolean_range;  // B, sorted
    Decomposition final_decomposition;
};

// Refine the trivial decomposition (1) to decide a_0, a_1, ... in the given
// enumeration order; f(x) = f_u(x) at the step deciding x. The range is the
// Boolean sublattice generated by the final decomposition.
inline BuildBanResult build_ban_function(const FiniteLattice& L, std::vector<int> order = {},
                                         bool prune_zeros = false) {
    require(L.has_top(), Errc::UnboundedLattice, "needs a unit");
    require(check_modular(L).holds, Errc::PreconditionFailed, "lattice is not modular");
    require(check_complemented(L).holds, Errc::PreconditionFailed, "lattice is not complemented");
    const int n = L.n();
    if (order.empty()) {
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
    }
    {
        auto s = order;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < n; ++i)
            require(i < static_cast<int>(s.size()) && s[i] == i, Errc::MalformedInput,
                    "order must enumerate all elements");
    }
    if (!prune_zeros)
        require(n <= 20, Errc::TooLarge, "unpruned decomposition chain doubles per element; pass prune_zeros");

    BuildBanResult out;
    out.f.table.assign(n, -1);
    Decomposition u{{L.top()}};
    for (int k = 0; k < n; ++k) {
        const int x = order[k];
        u = refine_to_decide(L, u, x).first;
        if (prune_zeros) u = prune_zero_blocks(L, u);
        out.f.table[x] = profile(L, u, x).f;
    }
    for (int k = 0; k < n; ++k) // the final decomposition decides everything seen
        require(decides(L, u, order[k]), Errc::LemmaViolated, "final decomposition fails to decide", {order[k]});
    out.final_decomposition = u;
    out.boolean_range = join_closure(L, u.blocks);

    const auto v = verify_ban_function(L, out.f);
    require(v.ok(), Errc::LemmaViolated, "constructed function is not a Banaschewski function", {v.x, v.y});
    require(is_boolean_sublattice(L, out.boolean_range), Errc::LemmaViolated, "range closure is not Boolean");
    require(out.f.range() == out.boolean_range, Errc::LemmaViolated, "range differs from the generated sublattice");
    return out;
}

// ---------------------------------------------------------------------------
// Banaschewski measures
// ---------------------------------------------------------------------------

// Sectional complement selector (x, y) -> y - x on pairs x <= y of a domain.
struct BanMeasure {
    std::vector<int> domain; // sorted element set X
    std::vector<int> table;  // n*n, table[x*n+y] = y - x for x <= y in X, else -1
    int sub(int n, int x, int y) const { return table[x * n + y]; }
};

inline BanViolation verify_ban_measure(const FiniteLattice& L, const BanMeasure& m) {
    const int n = L.n();
    for (int x : m.domain)
        for (int y : m.domain) {
            if (!L.leq(x, y)) continue;
            const int d = m.sub(n, x, y);
            if (d < 0 || L.meet(x, d) != L.bottom() || L.join(x, d) != y) return {BanViolation::NotComplement, x, y};
            for (int z : m.domain) {
                if (L.leq(y, z) && !L.leq(d, m.sub(n, x, z))) return {BanViolation::NotAntitone, x, y};
                if (L.leq(z, x) && !L.leq(d, m.sub(n, z, y))) return {BanViolation::NotAntitone, x, y};
            }
        }
    return {};
}

// y - x := y ^ f(x), for a Banaschewski function f on a bounded modular host;
// restricted to an ideal of the host this is a Banaschewski measure there.
inline BanMeasure measure_from_function(const FiniteLattice& L, const BanFunction& f,
                                        const std::vector<int>& ideal_members) {
    require(is_ideal(L, ideal_members), Errc::PreconditionFailed, "domain is not an ideal");
    const auto fv = verify_ban_function(L, f);
    require(fv.ok(), Errc::PreconditionFailed, "host function is not a Banaschewski function");
    BanMeasure m;
    m.domain = ideal_members;
    std::sort(m.domain.begin(), m.domain.end());
    m.table.assign(static_cast<size_t>(L.n()) * L.n(), -1);
    for (int x : m.domain)
        for (int y : m.domain)
            if (L.leq(x, y)) m.table[x * L.n() + y] = L.meet(y, f(x));
    const auto v = verify_ban_measure(L, m);
    require(v.ok(), Errc::AxiomViolated, "derived measure violates an axiom", {v.x, v.y});
    return m;
}

// ---------------------------------------------------------------------------
// the exchange step inside a Boolean range
// ---------------------------------------------------------------------------

struct ExchangePair {
    int a = -1, b = -1;
};

// Given c in B and c = x (+) y in L, produce a, b in B with c = a (+) b,
// b perspective to y (axis x) and a perspective to x (axis b).
inline ExchangePair exchange_decomposition(const FiniteLattice& L, const std::vector<int>& B,
                                           const BanFunction& f, int c, int x, int y) {
    require(std::binary_search(B.begin(), B.end(), c), Errc::NotInRange, "c is not in the Boolean range", {c});
    require(L.meet(x, y) == L.bottom() && L.join(x, y) == c, Errc::PreconditionFailed, "c != x (+) y", {c, x, y});
    const int b = L.meet(c, f(x));
    const int a = L.meet(c, f(b));
    for (int e : {a, b})
        require(std::binary_search(B.begin(), B.end(), e), Errc::AxiomViolated, "exchange left the range", {e});
    require(L.meet(x, b) == L.bottom() && L.join(x, b) == c, Errc::AxiomViolated, "c != x (+) b", {c, x, b});
    require(L.meet(a, b) == L.bottom() && L.join(a, b) == c, Errc::AxiomViolated, "c != a (+) b", {c, a, b});
    // perspectivities realized by explicit axes
    require(L.join(y, x) == L.join(b, x) && L.meet(y, x) == L.bottom() && L.meet(b, x) == L.bottom(),
            Errc::AxiomViolated, "b is not perspective to y via x");
    require(L.join(x, b) == L.join(a, b) && L.meet(a, b) == L.bottom(), Errc::AxiomViolated,
            "a is not perspective to x via b");
    return {a, b};
}

// All Boolean Banaschewski ranges, i.e. ranges of total Banaschewski
// functions whose range is a Boolean sublattice with the same bounds.
inline std::vector<std::vector<int>> boolean_ban_ranges(const FiniteLattice& L) {
    std::vector<std::vector<int>> ranges;
    detail::for_each_ban_function(L, true, [&](const BanFunction& f) {
        auto r = f.range();
        if (std::find(ranges.begin(), ranges.end(), r) == ranges.end()) ranges.push_back(std::move(r));
        return true;
    });
    std::sort(ranges.begin(), ranges.end());
    return ranges;
}

// All Boolean ranges of a complemented modular lattice are pairwise
// isomorphic (as lattices).
inline bool boolean_ranges_isomorphic(const FiniteLattice& L) {
    const auto ranges = boolean_ban_ranges(L);
    for (size_t i = 0; i + 1 < ranges.size(); ++i) {
        const auto A = induced_sublattice(L, ranges[i]);
        const auto B = induced_sublattice(L, ranges[i + 1]);
        if (!lattice_isomorphism(A, B).has_value()) return false;
    }
    return true;
}

} // namespace latkit
