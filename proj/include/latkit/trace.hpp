// Staged presentations of (possibly unbounded) lattices as directed unions of
// bounded stages, and Banaschewski traces over them: verification and the
// constructions from cofinal chains and from regular rings.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/ring.hpp"
#include "latkit/subspace.hpp"

namespace latkit {

struct DirectedPoset {
    int k = 0;
    std::vector<uint8_t> le; // k*k reflexive order
    int zero = 0;
    std::vector<int> chain; // ascending cofinal chain of indices, used for canonical forms

    bool leq(int a, int b) const { return le[a * k + b] != 0; }

    void validate() const {
        require(k >= 1 && static_cast<int>(le.size()) == k * k, Errc::MalformedInput, "bad poset table");
        for (int a = 0; a < k; ++a) {
            require(leq(a, a), Errc::MalformedInput, "poset not reflexive", {a});
            require(leq(zero, a), Errc::MalformedInput, "zero is not least", {a});
            for (int b = 0; b < k; ++b) {
                if (a != b && leq(a, b) && leq(b, a)) fail(Errc::MalformedInput, "poset not antisymmetric", {a, b});
                for (int c = 0; c < k; ++c)
                    if (leq(a, b) && leq(b, c) && !leq(a, c)) fail(Errc::MalformedInput, "poset not transitive", {a, b, c});
            }
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                bool bounded = false;
                for (int c = 0; c < k && !bounded; ++c) bounded = leq(a, c) && leq(b, c);
                require(bounded, Errc::MalformedInput, "poset not upward directed", {a, b});
            }
        require(!chain.empty(), Errc::MalformedInput, "missing cofinal chain");
        for (size_t t = 0; t + 1 < chain.size(); ++t)
            require(leq(chain[t], chain[t + 1]) && chain[t] != chain[t + 1], Errc::MalformedInput,
                    "chain is not strictly ascending");
        for (int a = 0; a < k; ++a) {
            bool dominated = false;
            for (int c : chain) dominated = dominated || leq(a, c);
            require(dominated, Errc::MalformedInput, "chain is not cofinal", {a});
        }
    }
};

// A lattice presented as a directed union of bounded stages; stage(i) embeds
// into stage(j) as the ideal below the image of its top.
struct StagedLattice {
    DirectedPoset poset;
    std::vector<FiniteLattice> stage;
    std::map<std::pair<int, int>, std::vector<int>> inject; // strictly increasing pairs only
    bool has_unit = false;

    int depth() const { return poset.k; }

    int lift(int i, int x, int j) const {
        if (i == j) return x;
        require(poset.leq(i, j), Errc::StageOverflow, "no materialized stage above", {i, j});
        return inject.at({i, j})[x];
    }
    int top_in(int i, int j) const { return lift(i, stage[i].max_element(), j); }

    // least chain stage above the given stages
    int chain_stage_above(int i, int j = -1) const {
        for (int c : poset.chain)
            if (poset.leq(i, c) && (j < 0 || poset.leq(j, c))) return c;
        fail(Errc::StageOverflow, "no chain stage above", {i, j});
    }

    void validate() const {
        poset.validate();
        require(static_cast<int>(stage.size()) == poset.k, Errc::MalformedInput, "stage count mismatch");
        for (int i = 0; i < poset.k; ++i)
            for (int j = 0; j < poset.k; ++j) {
                if (i == j || !poset.leq(i, j)) continue;
                const auto it = inject.find({i, j});
                require(it != inject.end(), Errc::MalformedInput, "missing injection", {i, j});
                const auto& f = it->second;
                require(static_cast<int>(f.size()) == stage[i].n(), Errc::MalformedInput, "injection size", {i, j});
                require(f[stage[i].bottom()] == stage[j].bottom(), Errc::MalformedInput, "zero not preserved", {i, j});
                for (int a = 0; a < stage[i].n(); ++a)
                    for (int b = 0; b < stage[i].n(); ++b) {
                        require(f[stage[i].join(a, b)] == stage[j].join(f[a], f[b]), Errc::MalformedInput,
                                "injection breaks joins", {i, j, a, b});
                        require(f[stage[i].meet(a, b)] == stage[j].meet(f[a], f[b]), Errc::MalformedInput,
                                "injection breaks meets", {i, j, a, b});
                        if (a != b)
                            require(f[a] != f[b], Errc::MalformedInput, "injection not injective", {i, j, a, b});
                    }
                // image is the ideal below the image of the stage top
                const int t = f[stage[i].max_element()];
                std::vector<uint8_t> hit(stage[j].n(), 0);
                for (int a = 0; a < stage[i].n(); ++a) hit[f[a]] = 1;
                for (int y = 0; y < stage[j].n(); ++y)
                    require(hit[y] == (stage[j].leq(y, t) ? 1 : 0), Errc::MalformedInput,
                            "injection image is not the ideal below the top image", {i, j, y});
                for (int m = 0; m < poset.k; ++m) // composition coherence
                    if (m != i && m != j && poset.leq(j, m)) {
                        const auto& g = inject.at({j, m});
                        const auto& h = inject.at({i, m});
                        for (int a = 0; a < stage[i].n(); ++a)
                            require(g[f[a]] == h[a], Errc::MalformedInput, "injections do not compose", {i, j, m, a});
                    }
            }
    }
};

// Trace entries a_i^j (an element of stage j) for strict pairs i < j in the
// poset; a_i^i = 0 implicitly.
struct TraceFamily {
    std::map<std::pair<int, int>, int> a;
    bool normal = false;

    int at(const StagedLattice& host, int i, int j) const {
        if (i == j) return host.stage[j].bottom();
        const auto it = a.find({i, j});
        require(it != a.end(), Errc::MalformedInput, "missing trace entry", {i, j});
        return it->second;
    }
};

struct TraceReport {
    bool ok = true;
    std::string detail;
    std::vector<int> witness;
};

// Def-style verification: the splitting law a_i^k = a_i^j (+) a_j^k on every
// materialized chain, cofinality of the a_0^i among materialized elements,
// and normality when claimed.
inline TraceReport verify_trace(const StagedLattice& host, const TraceFamily& t) {
    const auto& P = host.poset;
    for (int i = 0; i < P.k; ++i)
        for (int j = 0; j < P.k; ++j) {
            if (!P.leq(i, j)) continue;
            for (int kk = 0; kk < P.k; ++kk) {
                if (!P.leq(j, kk)) continue;
                const int aik = t.at(host, i, kk);
                const int aij_k = host.lift(j, t.at(host, i, j), kk);
                const int ajk = t.at(host, j, kk);
                if (host.stage[kk].meet(aij_k, ajk) != host.stage[kk].bottom())
                    return {false, "independence fails in a_i^j (+) a_j^k", {i, j, kk}};
                if (host.stage[kk].join(aij_k, ajk) != aik)
                    return {false, "a_i^j v a_j^k differs from a_i^k", {i, j, kk}};
            }
        }
    // cofinality of {a_0^i} over materialized elements
    for (int s = 0; s < P.k; ++s)
        for (int x = 0; x < host.stage[s].n(); ++x) {
            bool dominated = false;
            for (int j = 0; j < P.k && !dominated; ++j) {
                if (!P.leq(s, j)) continue;
                dominated = host.stage[j].leq(host.lift(s, x, j), t.at(host, P.zero, j));
            }
            if (!dominated) return {false, "a_0^i family is not cofinal", {s, x}};
        }
    if (t.normal) {
        for (int i = 0; i < P.k; ++i)
            for (int j = 0; j < P.k; ++j) {
                if (i == j || !P.leq(i, j)) continue;
                if (host.lift(i, t.at(host, P.zero, i), j) == t.at(host, P.zero, j))
                    return {false, "normality fails: equal a_0 entries on distinct indices", {i, j}};
            }
    }
    return {};
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

inline DirectedPoset omega_chain(int depth) {
    DirectedPoset P;
    P.k = depth + 1;
    P.zero = 0;
    P.le.assign(static_cast<size_t>(P.k) * P.k, 0);
    for (int a = 0; a < P.k; ++a)
        for (int b = a; b < P.k; ++b) P.le[a * P.k + b] = 1;
    P.chain.resize(P.k);
    for (int i = 0; i < P.k; ++i) P.chain[i] = i;
    return P;
}

// Finite subsets of omega, staged as the powerset of [0, i) at stage i.
inline StagedLattice staged_finite_subsets(int depth) {
    require(depth >= 0 && depth <= 16, Errc::TooLarge, "finite-subsets depth capped at 16");
    StagedLattice H;
    H.poset = omega_chain(depth);
    for (int i = 0; i <= depth; ++i) {
        const int n = 1 << i;
        H.stage.push_back(FiniteLattice::from_leq(n, [](int a, int b) { return (a & b) == a; }));
    }
    for (int i = 0; i <= depth; ++i)
        for (int j = i + 1; j <= depth; ++j) {
            std::vector<int> f(1 << i);
            for (int a = 0; a < (1 << i); ++a) f[a] = a;
            H.inject[{i, j}] = std::move(f);
        }
    H.has_unit = false;
    return H;
}

struct StagedSubspaces {
    StagedLattice host;
    std::vector<SubspaceLattice> space; // per stage
    std::vector<int> dims;
};

// Finite-dimensional subspaces of F_q^omega, staged at the given dimensions.
inline StagedSubspaces staged_subspaces(int q, std::vector<int> dims, long long cap = 4096) {
    require(!dims.empty(), Errc::MalformedInput, "need at least one stage");
    for (size_t i = 0; i + 1 < dims.size(); ++i)
        require(dims[i] < dims[i + 1], Errc::MalformedInput, "dimensions must increase");
    StagedSubspaces S;
    S.dims = dims;
    S.host.poset = omega_chain(static_cast<int>(dims.size()) - 1);
    for (int d : dims) S.space.push_back(subspace_lattice(q, d, cap));
    for (auto& sp : S.space) S.host.stage.push_back(sp.lat);
    for (size_t i = 0; i < dims.size(); ++i)
        for (size_t j = i + 1; j < dims.size(); ++j) {
            std::vector<int> f(S.space[i].lat.n());
            for (int a = 0; a < S.space[i].lat.n(); ++a) {
                auto rows = S.space[i].basis[a];
                for (auto& row : rows) row.resize(dims[j], 0); // pad coordinates
                f[a] = rows.empty() ? S.space[j].lat.bottom() : S.space[j].index_of_span(rows);
            }
            S.host.inject[{static_cast<int>(i), static_cast<int>(j)}] = std::move(f);
        }
    S.host.has_unit = false;
    return S;
}

// Interval trace over an omega-chain staging with strictly nested stage tops:
// a_n is a sectional complement of e_n in e_{n+1}, and a_m^n their sum.
inline TraceFamily trace_from_chain(const StagedLattice& host) {
    host.validate();
    const auto& P = host.poset;
    for (int a = 0; a < P.k; ++a)
        for (int b = 0; b < P.k; ++b)
            require(P.leq(a, b) == (a <= b), Errc::PreconditionFailed, "trace_from_chain needs an omega-chain staging");
    require(host.stage[0].n() == 1, Errc::PreconditionFailed, "e_0 must be 0 (trivial first stage)");

    std::vector<int> step(P.k, -1); // a_t as an element of stage t+1
    for (int t = 0; t + 1 < P.k; ++t) {
        const int lo = host.top_in(t, t + 1);
        const auto c = sectional_complement(host.stage[t + 1], lo, host.stage[t + 1].max_element());
        require(c.has_value(), Errc::NoSectionalComplement, "stage top has no sectional complement", {t});
        step[t] = *c;
    }
    TraceFamily tf;
    for (int m = 0; m < P.k; ++m)
        for (int n = m + 1; n < P.k; ++n) {
            std::vector<int> parts;
            for (int t = m; t < n; ++t) parts.push_back(host.lift(t + 1, step[t], n));
            require(independent_incremental(host.stage[n], parts), Errc::Internal, "interval parts not independent");
            tf.a[{m, n}] = host.stage[n].join_all(parts);
        }
    bool strict = true;
    for (int t = 0; t + 1 < P.k; ++t) strict = strict && host.top_in(t, t + 1) != host.stage[t + 1].max_element();
    tf.normal = strict;
    const auto rep = verify_trace(host, tf);
    require(rep.ok, Errc::Internal, "chain trace failed verification: " + rep.detail, rep.witness);
    return tf;
}

// The trivial trace of a bounded lattice: one extra stage whose top is 1.
inline std::pair<StagedLattice, TraceFamily> trivial_trace(const FiniteLattice& L) {
    require(L.has_top(), Errc::PreconditionFailed, "trivial trace needs a bounded lattice");
    StagedLattice H;
    TraceFamily tf;
    if (L.n() == 1) {
        H.poset = omega_chain(0);
        H.stage.push_back(L);
        H.has_unit = true;
        tf.normal = true;
        return {H, tf};
    }
    H.poset = omega_chain(1);
    H.stage.push_back(FiniteLattice::from_leq(1, [](int, int) { return true; }));
    H.stage.push_back(L);
    H.inject[{0, 1}] = {L.bottom()};
    H.has_unit = true;
    tf.a[{0, 1}] = L.top();
    tf.normal = true;
    const auto rep = verify_trace(H, tf);
    require(rep.ok, Errc::Internal, "trivial trace failed verification: " + rep.detail);
    return {H, tf};
}

struct RingTrace {
    FiniteRing ring;
    RingLattice RL;
    IdempotentPoset idems;
    StagedLattice host;                         // stage per idempotent: the ideal below eR
    TraceFamily trace;                          // A_i^j = (j - i)R
    std::vector<std::vector<int>> stage_members; // per stage: RL.lat indices, ascending
};

// The normal trace A_i^j = (j - i)R over the idempotent poset of a regular
// ring, staged inside the principal right ideal lattice.
inline RingTrace trace_from_ring(const FiniteRing& R) {
    const auto reg = is_regular(R);
    require(reg.regular, Errc::NotRegular, "traces need a regular ring", {reg.witness});
    RingTrace T{R, build_L(R), idempotent_poset(R), {}, {}, {}};

    const int k = T.idems.k();
    DirectedPoset P;
    P.k = k;
    P.le = T.idems.le;
    P.zero = T.idems.index_of(R.zero());
    // a finite directed poset has a maximum; [zero, max] is a cofinal chain
    int maxi = -1;
    for (int i = 0; i < k && maxi < 0; ++i) {
        bool top = true;
        for (int j = 0; j < k && top; ++j) top = T.idems.leq(j, i);
        if (top) maxi = i;
    }
    require(maxi >= 0, Errc::PreconditionFailed, "idempotent poset has no maximum");
    P.chain = (maxi == P.zero) ? std::vector<int>{P.zero} : std::vector<int>{P.zero, maxi};
    T.host.poset = P;

    for (int i = 0; i < k; ++i) {
        const int top = T.RL.index_of_element(R, T.idems.idem[i]);
        std::vector<int> members;
        for (int e = 0; e < T.RL.lat.n(); ++e)
            if (T.RL.lat.leq(e, top)) members.push_back(e);
        T.stage_members.push_back(members);
        T.host.stage.push_back(induced_sublattice(T.RL.lat, members));
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !P.leq(i, j)) continue;
            std::vector<int> f(T.stage_members[i].size());
            for (size_t a = 0; a < T.stage_members[i].size(); ++a) {
                const auto it = std::lower_bound(T.stage_members[j].begin(), T.stage_members[j].end(),
                                                 T.stage_members[i][a]);
                require(it != T.stage_members[j].end() && *it == T.stage_members[i][a], Errc::Internal,
                        "stage members are not nested", {i, j});
                f[a] = static_cast<int>(it - T.stage_members[j].begin());
            }
            T.host.inject[{i, j}] = std::move(f);
        }
    T.host.has_unit = true; // finite regular rings are unital, so L(R) is bounded
    T.host.validate();

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !P.leq(i, j)) continue;
            const int diff = R.sub(T.idems.idem[j], T.idems.idem[i]);
            const int rl = T.RL.index_of_element(R, diff);
            const auto it = std::lower_bound(T.stage_members[j].begin(), T.stage_members[j].end(), rl);
            require(it != T.stage_members[j].end() && *it == rl, Errc::Internal, "(j-i)R escapes the stage", {i, j});
            T.trace.a[{i, j}] = static_cast<int>(it - T.stage_members[j].begin());
        }
    T.trace.normal = true;
    const auto rep = verify_trace(T.host, T.trace);
    require(rep.ok, Errc::Internal, "ring trace failed verification: " + rep.detail, rep.witness);
    return T;
}

} // namespace latkit
