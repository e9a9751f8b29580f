// The reduced-product extension of a staged sectionally complemented modular
// lattice along a Banaschewski trace, computed with exact canonical forms:
// Fin(i, x) stands for the class of the constant family x, Tail(i, x) for the
// class of (x v a_i^j | j -> infinity). Every element of the extension is of
// one of the two kinds, so no almost-everywhere classes are needed.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "latkit/banaschewski.hpp"
#include "latkit/trace.hpp"

namespace latkit {

struct LTildeElement {
    bool tail = false;
    int stage = 0;
    int value = 0;
    friend bool operator==(const LTildeElement&, const LTildeElement&) = default;
    friend auto operator<=>(const LTildeElement&, const LTildeElement&) = default;
};

struct LTildeContext {
    const StagedLattice& host;
    const TraceFamily& trace;
};

inline LTildeElement ltilde_fin(int stage, int value) { return {false, stage, value}; }
inline LTildeElement ltilde_tail(int stage, int value) { return {true, stage, value}; }

// Fin values reduce to the least chain stage containing them; Tail(j, y)
// lifts to a chain stage and then drops to the least chain stage i with
// a_i^j <= y and (y ^ a_0^i) v a_i^j = y.
inline LTildeElement canonicalize(const LTildeContext& ctx, LTildeElement e) {
    const auto& H = ctx.host;
    if (!e.tail) {
        const int M = H.chain_stage_above(e.stage);
        const int xM = H.lift(e.stage, e.value, M);
        for (int c : H.poset.chain) {
            if (!H.poset.leq(c, M)) continue;
            if (c == M) break;
            if (!H.stage[M].leq(xM, H.top_in(c, M))) continue;
            for (int y = 0; y < H.stage[c].n(); ++y)
                if (H.lift(c, y, M) == xM) return ltilde_fin(c, y);
        }
        return ltilde_fin(M, xM);
    }
    const int M = H.chain_stage_above(e.stage);
    const int v = H.stage[M].join(H.lift(e.stage, e.value, M), ctx.trace.at(H, e.stage, M));
    for (int c : H.poset.chain) {
        if (!H.poset.leq(c, M)) continue;
        const int acM = ctx.trace.at(H, c, M);
        if (!H.stage[M].leq(acM, v)) continue;
        const int head = H.stage[M].meet(v, H.top_in(c, M));
        if (H.stage[M].join(head, acM) != v) continue;
        for (int y = 0; y < H.stage[c].n(); ++y)
            if (H.lift(c, y, M) == head) return ltilde_tail(c, y);
    }
    fail(Errc::Internal, "tail failed to canonicalize at its own stage", {e.stage, e.value});
}

inline LTildeElement ltilde_zero(const LTildeContext& ctx) {
    const int c = ctx.host.poset.chain.front();
    return canonicalize(ctx, ltilde_fin(c, ctx.host.stage[c].bottom()));
}

// 1 = Tail(0, 0), the class of (a_0^j | j -> infinity).
inline LTildeElement ltilde_unit(const LTildeContext& ctx) {
    const int z = ctx.host.poset.zero;
    return canonicalize(ctx, ltilde_tail(z, ctx.host.stage[z].bottom()));
}

inline LTildeElement ltilde_join(const LTildeContext& ctx, LTildeElement e1, LTildeElement e2) {
    const auto& H = ctx.host;
    const int M = H.chain_stage_above(e1.stage, e2.stage);
    const auto at_M = [&](const LTildeElement& e) {
        const int lifted = H.lift(e.stage, e.value, M);
        return e.tail ? H.stage[M].join(lifted, ctx.trace.at(H, e.stage, M)) : lifted;
    };
    const int v = H.stage[M].join(at_M(e1), at_M(e2));
    return canonicalize(ctx, e1.tail || e2.tail ? ltilde_tail(M, v) : ltilde_fin(M, v));
}

inline LTildeElement ltilde_meet(const LTildeContext& ctx, LTildeElement e1, LTildeElement e2) {
    const auto& H = ctx.host;
    const int M = H.chain_stage_above(e1.stage, e2.stage);
    const auto at_M = [&](const LTildeElement& e) {
        const int lifted = H.lift(e.stage, e.value, M);
        return e.tail ? H.stage[M].join(lifted, ctx.trace.at(H, e.stage, M)) : lifted;
    };
    const int v = H.stage[M].meet(at_M(e1), at_M(e2));
    return canonicalize(ctx, e1.tail && e2.tail ? ltilde_tail(M, v) : ltilde_fin(M, v));
}

inline bool ltilde_leq(const LTildeContext& ctx, LTildeElement e1, LTildeElement e2) {
    return ltilde_meet(ctx, canonicalize(ctx, e1), canonicalize(ctx, e2)) == canonicalize(ctx, e1);
}

// Complement: a Fin at its canonical stage i is complemented by the tail of a
// sectional complement inside a_0^i, and conversely.
inline LTildeElement ltilde_complement(const LTildeContext& ctx, LTildeElement e) {
    const auto& H = ctx.host;
    e = canonicalize(ctx, e);
    const auto& S = H.stage[e.stage];
    const auto y = sectional_complement(S, e.value, S.max_element());
    require(y.has_value(), Errc::NoSectionalComplement, "stage is not sectionally complemented", {e.stage, e.value});
    const auto c = canonicalize(ctx, e.tail ? ltilde_fin(e.stage, *y) : ltilde_tail(e.stage, *y));
    require(ltilde_join(ctx, e, c) == ltilde_unit(ctx), Errc::Internal, "complement misses the unit");
    require(ltilde_meet(ctx, e, c) == ltilde_zero(ctx), Errc::Internal, "complement misses the zero");
    return c;
}

// ---------------------------------------------------------------------------
// materialization and the embedding checks
// ---------------------------------------------------------------------------

struct MaterializedLTilde {
    FiniteLattice lat;
    std::vector<LTildeElement> elems; // canonical, index-aligned with lat
    std::map<LTildeElement, int> index;
    int fin_count = 0;

    int index_of(const LTildeContext& ctx, LTildeElement e) const {
        const auto it = index.find(canonicalize(ctx, e));
        require(it != index.end(), Errc::Internal, "element not materialized");
        return it->second;
    }
};

// All canonical Fin and Tail elements over the materialized stages, with the
// order computed from the canonical join/meet rules.
inline MaterializedLTilde materialize_ltilde(const LTildeContext& ctx) {
    const auto& H = ctx.host;
    std::vector<LTildeElement> fins, tails;
    {
        std::map<LTildeElement, int> seen;
        for (int s = 0; s < H.poset.k; ++s)
            for (int x = 0; x < H.stage[s].n(); ++x) {
                const auto f = canonicalize(ctx, ltilde_fin(s, x));
                if (seen.emplace(f, 0).second) fins.push_back(f);
                const auto t = canonicalize(ctx, ltilde_tail(s, x));
                if (seen.emplace(t, 0).second) tails.push_back(t);
            }
    }
    std::sort(fins.begin(), fins.end());
    std::sort(tails.begin(), tails.end());
    MaterializedLTilde M;
    M.fin_count = static_cast<int>(fins.size());
    M.elems = fins;
    M.elems.insert(M.elems.end(), tails.begin(), tails.end());
    for (int i = 0; i < static_cast<int>(M.elems.size()); ++i) M.index[M.elems[i]] = i;
    M.lat = FiniteLattice::from_leq(static_cast<int>(M.elems.size()), [&](int a, int b) {
        return ltilde_meet(ctx, M.elems[a], M.elems[b]) == M.elems[a];
    });
    return M;
}

struct EmbeddingReport {
    bool stages_ok = false;        // stages sectionally complemented modular
    bool eps_embedding = false;    // Fin is an injective 0-lattice homomorphism
    bool ideal = false;            // the Fin part is an ideal of the extension
    bool neutrality = false;       // no materialized tail is perspective to a fin
    bool complemented = false;
    bool modular = false;
    bool distributive_checked = false;
    bool distributive = false;     // only meaningful when checked
    int size = 0, fin_count = 0;
    std::string detail;

    bool ok() const {
        return stages_ok && eps_embedding && ideal && neutrality && complemented && modular &&
               (!distributive_checked || distributive);
    }
};

// Materialize the extension and check every finitely checkable claim: the
// embedding is a neutral ideal and the extension is a complemented modular
// lattice, with distributivity carried over from distributive stages.
inline EmbeddingReport verify_embedding(const StagedLattice& host, const TraceFamily& trace) {
    require(!host.has_unit, Errc::PreconditionFailed,
            "host declares a unit; use the trivial trace for bounded lattices");
    host.validate();
    {
        const auto rep = verify_trace(host, trace);
        require(rep.ok, Errc::PreconditionFailed, "trace fails verification: " + rep.detail, rep.witness);
    }
    // representation invariant: stage i is the ideal below a_0^i
    for (int i = 0; i < host.poset.k; ++i)
        require(trace.at(host, host.poset.zero, i) == host.stage[i].max_element(), Errc::PreconditionFailed,
                "stage tops must realize the a_0^i family", {i});
    EmbeddingReport rep;
    rep.stages_ok = true;
    bool stages_distributive = true;
    for (const auto& S : host.stage) {
        rep.stages_ok = rep.stages_ok && check_modular(S).holds && check_sectionally_complemented(S).holds;
        stages_distributive = stages_distributive && check_distributive(S).holds;
    }
    require(rep.stages_ok, Errc::PreconditionFailed, "stages must be sectionally complemented modular");

    const LTildeContext ctx{host, trace};
    const auto M = materialize_ltilde(ctx);
    rep.size = M.lat.n();
    rep.fin_count = M.fin_count;
    const auto is_fin = [&](int i) { return i < M.fin_count; };

    // Fin is an injective 0-lattice homomorphism from the top chain stage
    rep.eps_embedding = true;
    {
        const int T = host.poset.chain.back();
        const auto& S = host.stage[T];
        std::vector<int> fin_of(S.n());
        for (int x = 0; x < S.n(); ++x) fin_of[x] = M.index_of(ctx, ltilde_fin(T, x));
        for (int x = 0; x < S.n() && rep.eps_embedding; ++x)
            for (int y = 0; y < S.n() && rep.eps_embedding; ++y) {
                if (x != y && fin_of[x] == fin_of[y]) rep.eps_embedding = false;
                if (fin_of[S.join(x, y)] != M.lat.join(fin_of[x], fin_of[y])) rep.eps_embedding = false;
                if (fin_of[S.meet(x, y)] != M.lat.meet(fin_of[x], fin_of[y])) rep.eps_embedding = false;
            }
        if (fin_of[S.bottom()] != M.lat.bottom()) rep.eps_embedding = false;
    }

    // downward closed and join closed
    rep.ideal = true;
    for (int a = 0; a < M.lat.n(); ++a)
        for (int b = 0; b < M.lat.n(); ++b) {
            if (is_fin(b) && M.lat.leq(a, b) && !is_fin(a)) rep.ideal = false;
            if (is_fin(a) && is_fin(b) && !is_fin(M.lat.join(a, b))) rep.ideal = false;
        }

    // neutrality evidence: no tail is perspective to a fin via any
    // materialized axis
    rep.neutrality = true;
    for (int t = M.fin_count; t < M.lat.n() && rep.neutrality; ++t)
        for (int f = 0; f < M.fin_count && rep.neutrality; ++f)
            for (int c = 0; c < M.lat.n() && rep.neutrality; ++c)
                if (M.lat.meet(t, c) == M.lat.bottom() && M.lat.meet(f, c) == M.lat.bottom() &&
                    M.lat.join(t, c) == M.lat.join(f, c)) {
                    rep.neutrality = false;
                    rep.detail = "perspectivity between tail and fin";
                }

    rep.complemented = check_complemented(M.lat).holds;
    for (int a = 0; a < M.lat.n() && rep.complemented; ++a) {
        const auto c = ltilde_complement(ctx, M.elems[a]);
        const int ci = M.index_of(ctx, c);
        rep.complemented = M.lat.meet(a, ci) == M.lat.bottom() && M.lat.join(a, ci) == M.lat.top();
    }
    rep.modular = check_modular(M.lat).holds;
    if (stages_distributive) {
        rep.distributive_checked = true;
        rep.distributive = check_distributive(M.lat).holds;
    }
    // unit and zero of the extension have the stated canonical forms
    require(M.elems[M.lat.top()] == ltilde_unit(ctx), Errc::Internal, "top is not Tail(0, 0)");
    require(M.elems[M.lat.bottom()] == ltilde_zero(ctx), Errc::Internal, "bottom is not Fin(0)");
    return rep;
}

} // namespace latkit
