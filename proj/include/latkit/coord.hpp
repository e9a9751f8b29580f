// Directed systems of regular rings, corner-idempotent data, homomorphism
// lifting against principal right ideal lattices, and the assembly that
// coordinatizes a staged lattice equipped with a Banaschewski trace and
// per-stage coordinatizations.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/ltilde.hpp"
#include "latkit/ring.hpp"
#include "latkit/trace.hpp"

namespace latkit {

struct DirectedRingSystem {
    DirectedPoset poset;
    std::vector<FiniteRing> ring;
    std::map<std::pair<int, int>, RingHom> hom; // strict comparable pairs
};

struct SystemReport {
    bool ok = true;
    std::string detail;
    std::vector<int> witness;
};

// Composition coherence, corner ranges im f_i^j = e R_j e with e = f_i^j(1),
// the dominance chain e_i^k before e_j^k, and per-stage unital regularity.
inline SystemReport verify_system(const DirectedRingSystem& s) {
    s.poset.validate();
    require(static_cast<int>(s.ring.size()) == s.poset.k, Errc::MalformedInput, "ring count mismatch");
    for (int i = 0; i < s.poset.k; ++i) {
        if (!s.ring[i].unital()) return {false, "stage ring is not unital", {i}};
        if (!is_regular(s.ring[i]).regular) return {false, "stage ring is not regular", {i}};
    }
    for (int i = 0; i < s.poset.k; ++i)
        for (int j = 0; j < s.poset.k; ++j) {
            if (i == j || !s.poset.leq(i, j)) continue;
            const auto it = s.hom.find({i, j});
            if (it == s.hom.end()) return {false, "missing homomorphism", {i, j}};
            const auto& f = it->second.map;
            validate_hom(s.ring[i], s.ring[j], it->second);
            std::vector<int> image = f;
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end())
                return {false, "homomorphism is not an embedding", {i, j}};
            // corner range
            const int e = f[s.ring[i].one()];
            if (!s.ring[j].is_idempotent(e)) return {false, "image of the unit is not idempotent", {i, j}};
            std::vector<int> corner;
            for (int x = 0; x < s.ring[j].size(); ++x) corner.push_back(s.ring[j].mul(s.ring[j].mul(e, x), e));
            std::sort(corner.begin(), corner.end());
            corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
            if (image != corner) return {false, "range differs from the corner eR_je", {i, j}};
        }
    for (int i = 0; i < s.poset.k; ++i)
        for (int j = 0; j < s.poset.k; ++j)
            for (int k = 0; k < s.poset.k; ++k) {
                if (!(s.poset.leq(i, j) && s.poset.leq(j, k))) continue;
                if (i == j || j == k) continue;
                const auto& fij = s.hom.at({i, j}).map;
                const auto& fjk = s.hom.at({j, k}).map;
                const auto& fik = i == k ? fij /*unused*/ : s.hom.at({i, k}).map;
                for (int x = 0; x < s.ring[i].size(); ++x)
                    if (fjk[fij[x]] != fik[x]) return {false, "composition coherence fails", {i, j, k, x}};
                // dominance of the corner idempotents
                const int eik = fik[s.ring[i].one()];
                const int ejk = fjk[s.ring[j].one()];
                if (s.ring[k].mul(eik, ejk) != eik || s.ring[k].mul(ejk, eik) != eik)
                    return {false, "corner idempotents are not dominance-ordered", {i, j, k}};
            }
    return {};
}

// ---------------------------------------------------------------------------
// per-stage coordinatizations
// ---------------------------------------------------------------------------

struct StageCoordinatization {
    FiniteRing ring;
    RingLattice RL;
    std::vector<int> iso; // stage element -> index in RL.lat
};

inline void validate_stage_iso(const FiniteLattice& stage, const StageCoordinatization& c) {
    require(static_cast<int>(c.iso.size()) == stage.n() && stage.n() == c.RL.lat.n(), Errc::PreconditionFailed,
            "stage and ideal lattice sizes differ");
    std::vector<int> seen(stage.n(), 0);
    for (int v : c.iso) {
        require(v >= 0 && v < stage.n(), Errc::PreconditionFailed, "iso value out of range");
        seen[v] = 1;
    }
    require(std::count(seen.begin(), seen.end(), 1) == stage.n(), Errc::PreconditionFailed, "iso is not bijective");
    for (int a = 0; a < stage.n(); ++a)
        for (int b = 0; b < stage.n(); ++b)
            require(stage.leq(a, b) == c.RL.lat.leq(c.iso[a], c.iso[b]), Errc::PreconditionFailed,
                    "iso does not preserve the order", {a, b});
}

struct CoordinatizationInput {
    StagedLattice host;
    TraceFamily trace;
    std::vector<StageCoordinatization> stage; // one per poset index
    // optional large frame: supplied inside a designated stage
    std::optional<int> frame_stage;
    std::optional<Frame> frame;
};

struct CornerData {
    std::map<std::pair<int, int>, int> e; // e_i^j for strict pairs, unit for i = j
    int at(const CoordinatizationInput& in, int i, int j) const {
        return i == j ? in.stage[i].ring.one() : e.at({i, j});
    }
};

// e_i^j is the unique element of eps_j(a_0^i) with 1_j - e_i^j in
// eps_j(a_i^j); both generation facts are consequences of the idempotent
// decomposition and are asserted there.
inline CornerData corner_data(const CoordinatizationInput& in) {
    CornerData out;
    const auto& P = in.host.poset;
    for (int i = 0; i < P.k; ++i)
        for (int j = 0; j < P.k; ++j) {
            if (i == j || !P.leq(i, j)) continue;
            const auto& Rj = in.stage[j].ring;
            const auto& RLj = in.stage[j].RL;
            const int A = in.stage[j].iso[in.host.top_in(i, j)];
            const int B = in.stage[j].iso[in.trace.at(in.host, i, j)];
            const auto split = decomp_idempotent(Rj, Rj.one(), RLj.ideal[A], RLj.ideal[B]);
            out.e[{i, j}] = split.a;
        }
    return out;
}

// ---------------------------------------------------------------------------
// lifting a coordinatization along a corner
// ---------------------------------------------------------------------------

struct LiftResult {
    RingHom f;       // first solution in canonical order, when count >= 1
    long long count = 0;
};

// Backtracking search for ring embeddings f: R -> S with range eSe and
// f(x)S = ideal_map(xR), counting every solution.
inline LiftResult lift_corner_hom_all(const FiniteRing& R, const RingLattice& LR, const FiniteRing& S,
                                      const RingLattice& LS, const std::vector<int>& ideal_map, int e) {
    require(S.is_idempotent(e), Errc::PreconditionFailed, "corner element must be idempotent", {e});
    require(static_cast<int>(ideal_map.size()) == LR.lat.n(), Errc::MalformedInput, "ideal map size mismatch");
    require(R.unital(), Errc::PreconditionFailed, "source must be unital");
    {
        const int top = LR.index_of_element(R, R.one());
        require(LS.ideal[ideal_map[top]] == detail::pr_ideal_unchecked(S, e), Errc::PreconditionFailed,
                "eS must realize the image of the unit ideal");
    }
    // corner elements and their principal ideals
    std::vector<int> corner;
    for (int x = 0; x < S.size(); ++x) corner.push_back(S.mul(S.mul(e, x), e));
    std::sort(corner.begin(), corner.end());
    corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
    std::map<int, int> corner_ideal; // corner element -> LS index
    for (int y : corner) corner_ideal[y] = LS.index_of(detail::pr_ideal_unchecked(S, y));

    std::vector<std::vector<int>> cand(R.size());
    for (int x = 0; x < R.size(); ++x) {
        const int want = ideal_map[LR.index_of_element(R, x)];
        for (int y : corner)
            if (corner_ideal[y] == want) cand[x].push_back(y);
    }
    LiftResult out;
    std::vector<int> f(R.size(), -1);
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == R.size()) {
            std::vector<int> image = f;
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image != corner) return; // range must be the whole corner
            if (out.count == 0) out.f.map = f;
            ++out.count;
            return;
        }
        for (int y : cand[x]) {
            bool ok = true;
            for (int u = 0; u < x && ok; ++u) {
                const int su = R.add(x, u);
                if (su < x) ok = f[su] == S.add(y, f[u]);
                if (ok && su == x && u == R.zero()) ok = y == S.add(y, f[u]);
                const int pu = R.mul(x, u), up = R.mul(u, x);
                if (ok && pu < x) ok = f[pu] == S.mul(y, f[u]);
                if (ok && up < x) ok = f[up] == S.mul(f[u], y);
            }
            // self-interactions
            if (ok && R.add(x, x) < x) ok = f[R.add(x, x)] == S.add(y, y);
            if (ok && R.add(x, x) == x) ok = S.add(y, y) == y;
            if (ok && R.mul(x, x) < x) ok = f[R.mul(x, x)] == S.mul(y, y);
            if (ok && R.mul(x, x) == x) ok = S.mul(y, y) == y;
            if (!ok) continue;
            f[x] = y;
            self(self, x + 1);
            f[x] = -1;
        }
    };
    dfs(dfs, 0);
    if (out.count >= 1) { // full homomorphism check on the first solution
        validate_hom(R, S, out.f);
        for (int x = 0; x < R.size(); ++x)
            require(LS.index_of(detail::pr_ideal_unchecked(S, out.f.map[x])) ==
                        ideal_map[LR.index_of_element(R, x)],
                    Errc::Internal, "solution violates the ideal constraint", {x});
    }
    return out;
}

// The unique lift, when it is unique; NoLift / MultipleLifts otherwise.
inline RingHom lift_corner_hom(const FiniteRing& R, const RingLattice& LR, const FiniteRing& S,
                               const RingLattice& LS, const std::vector<int>& ideal_map, int e) {
    const auto res = lift_corner_hom_all(R, LR, S, LS, ideal_map, e);
    require(res.count > 0, Errc::NoLift, "no ring embedding realizes the lattice map");
    require(res.count == 1, Errc::MultipleLifts, "lift is not unique; rigidity fails at this size",
            {static_cast<int>(res.count)});
    return res.f;
}

// ---------------------------------------------------------------------------
// depth-truncated direct limit
// ---------------------------------------------------------------------------

struct LimitStage {
    int index = -1; // the maximum stage: the truncated colimit is R_max
    std::map<int, RingHom> into; // injections f_i^max for i < max
};

// For a truncated system the colimit is the ring at the maximum index; the
// induced maps are checked to embed each L(R_i) onto the ideal below e_i^m.
inline LimitStage limit_stage(const DirectedRingSystem& s, const std::vector<RingLattice>& RL) {
    LimitStage out;
    for (int m = 0; m < s.poset.k && out.index < 0; ++m) {
        bool top = true;
        for (int i = 0; i < s.poset.k && top; ++i) top = s.poset.leq(i, m);
        if (top) out.index = m;
    }
    require(out.index >= 0, Errc::NoCofinalStage, "poset has no maximum stage");
    for (int i = 0; i < s.poset.k; ++i) {
        if (i == out.index) continue;
        const auto& f = s.hom.at({i, out.index});
        out.into[i] = f;
        const auto lmap = L_hom(s.ring[i], s.ring[out.index], f, RL[i], RL[out.index]);
        // injective with image the ideal below e_i^m R_m
        const int e = f.map[s.ring[i].one()];
        const int top = RL[out.index].index_of(detail::pr_ideal_unchecked(s.ring[out.index], e));
        std::vector<int> image = lmap, below;
        std::sort(image.begin(), image.end());
        require(std::adjacent_find(image.begin(), image.end()) == image.end(), Errc::Internal,
                "induced lattice map is not injective", {i});
        for (int v = 0; v < RL[out.index].lat.n(); ++v)
            if (RL[out.index].lat.leq(v, top)) below.push_back(v);
        require(image == below, Errc::Internal, "L(R_i) does not land on the ideal below e_i^m", {i});
    }
    return out;
}

// ---------------------------------------------------------------------------
// the assembly
// ---------------------------------------------------------------------------

struct CoordVerdict {
    bool coordinatized = false;
    DirectedRingSystem system;
    CornerData corners;
    int limit_index = -1;
    bool frame_checked = false;
    std::vector<std::string> notes;
};

// Check the trace axioms on the corner idempotents of the assembled system
// inside the limit ring (the closing-the-loop instance).
inline void verify_corner_trace(const FiniteRing& R, const std::vector<int>& idems) {
    for (int a : idems)
        for (int b : idems) {
            if (!(R.mul(a, b) == a && R.mul(b, a) == a)) continue; // need a before b
            for (int c : idems) {
                if (!(R.mul(b, c) == b && R.mul(c, b) == b)) continue;
                const auto ab = detail::pr_ideal_unchecked(R, R.sub(b, a));
                const auto bc = detail::pr_ideal_unchecked(R, R.sub(c, b));
                const auto ac = detail::pr_ideal_unchecked(R, R.sub(c, a));
                RightIdeal inter, sum;
                std::set_intersection(ab.begin(), ab.end(), bc.begin(), bc.end(), std::back_inserter(inter));
                require(inter == RightIdeal{R.zero()}, Errc::Internal, "corner trace overlaps");
                for (int x : ab)
                    for (int y : bc) sum.push_back(R.add(x, y));
                std::sort(sum.begin(), sum.end());
                sum.erase(std::unique(sum.begin(), sum.end()), sum.end());
                require(sum == ac, Errc::Internal, "corner trace fails the splitting law");
            }
            if (a != b)
                require(detail::pr_ideal_unchecked(R, a) != detail::pr_ideal_unchecked(R, b), Errc::Internal,
                        "corner trace is not normal");
        }
}

inline CoordVerdict coordinatize_from_trace(const CoordinatizationInput& in) {
    in.host.validate();
    {
        const auto rep = verify_trace(in.host, in.trace);
        require(rep.ok, Errc::PreconditionFailed, "trace fails verification: " + rep.detail, rep.witness);
    }
    const auto& P = in.host.poset;
    require(static_cast<int>(in.stage.size()) == P.k, Errc::MissingStageRing,
            "every stage needs a coordinatizing ring");
    for (int i = 0; i < P.k; ++i) {
        require(in.stage[i].ring.unital(), Errc::PreconditionFailed, "stage ring must be unital", {i});
        validate_stage_iso(in.host.stage[i], in.stage[i]);
    }
    CoordVerdict v;

    if (in.frame.has_value()) {
        require(in.frame_stage.has_value(), Errc::MalformedInput, "frame provided without its stage");
        const int s0 = *in.frame_stage;
        require(is_frame(in.host.stage[s0], *in.frame), Errc::PreconditionFailed, "frame data is not a frame");
        for (int j = 0; j < P.k; ++j) {
            if (!P.leq(s0, j)) continue;
            Frame lifted;
            for (int a : in.frame->a) lifted.a.push_back(in.host.lift(s0, a, j));
            for (int c : in.frame->c) lifted.c.push_back(in.host.lift(s0, c, j));
            require(is_frame(in.host.stage[j], lifted), Errc::Internal, "frame does not lift", {j});
            require(frame_is_large(in.host.stage[j], lifted), Errc::PreconditionFailed,
                    "frame is not large in a later stage", {j});
        }
        v.frame_checked = true;
        v.notes.push_back("large frame verified in stage " + std::to_string(s0) + " and above");
    }

    v.corners = corner_data(in);

    DirectedRingSystem sys;
    sys.poset = P;
    for (const auto& st : in.stage) sys.ring.push_back(st.ring);
    for (int i = 0; i < P.k; ++i)
        for (int j = 0; j < P.k; ++j) {
            if (i == j || !P.leq(i, j)) continue;
            std::vector<int> inv(in.host.stage[i].n(), -1); // iso_i inverse
            for (int a = 0; a < in.host.stage[i].n(); ++a) inv[in.stage[i].iso[a]] = a;
            std::vector<int> ideal_map(in.stage[i].RL.lat.n(), -1);
            for (int idx = 0; idx < in.stage[i].RL.lat.n(); ++idx)
                ideal_map[idx] = in.stage[j].iso[in.host.lift(i, inv[idx], j)];
            const auto f =
                lift_corner_hom(in.stage[i].ring, in.stage[i].RL, in.stage[j].ring, in.stage[j].RL, ideal_map,
                                v.corners.e.at({i, j}));
            require(f.map[in.stage[i].ring.one()] == v.corners.e.at({i, j}), Errc::Internal,
                    "lift does not send the unit to the corner idempotent", {i, j});
            sys.hom[{i, j}] = f;
        }

    const auto rep = verify_system(sys);
    require(rep.ok, Errc::IncoherentSystem, rep.detail, rep.witness);

    // the claim: f_j^k(e_i^j) = e_i^k on every materialized chain
    for (int i = 0; i < P.k; ++i)
        for (int j = 0; j < P.k; ++j)
            for (int k = 0; k < P.k; ++k) {
                if (!(P.leq(i, j) && P.leq(j, k)) || j == k) continue;
                const int eij = v.corners.at(in, i, j);
                require(sys.hom.at({j, k}).map[eij] == v.corners.at(in, i, k), Errc::Internal,
                        "corner claim fails", {i, j, k});
            }

    std::vector<RingLattice> RLs;
    for (const auto& st : in.stage) RLs.push_back(st.RL);
    const auto lim = limit_stage(sys, RLs);
    v.limit_index = lim.index;

    // closing the loop: the corner idempotents carry a normal trace in R_max
    {
        std::vector<int> idems = {sys.ring[lim.index].zero()};
        for (int i = 0; i < P.k; ++i) idems.push_back(v.corners.at(in, i, lim.index));
        std::sort(idems.begin(), idems.end());
        idems.erase(std::unique(idems.begin(), idems.end()), idems.end());
        verify_corner_trace(sys.ring[lim.index], idems);
        v.notes.push_back("corner idempotents form a normal trace in the limit ring");
    }

    v.system = std::move(sys);
    v.coordinatized = true;
    return v;
}

// ---------------------------------------------------------------------------
// ready-made inputs
// ---------------------------------------------------------------------------

// The matrix-ring coordinatization of a staged subspace lattice: stage t is
// the subspace lattice of F_q^{dims[t]} and its ring is M_{dims[t]}(F_q); the
// isomorphism sends a subspace to the ideal of matrices with columns in it.
inline CoordinatizationInput subspace_chain_input(int q, const std::vector<int>& dims) {
    auto S = staged_subspaces(q, dims, 1 << 20);
    CoordinatizationInput in;
    in.trace = trace_from_chain(S.host);
    for (size_t t = 0; t < dims.size(); ++t) {
        StageCoordinatization st{FiniteRing::matrix_ring(q, dims[t]), {}, {}};
        st.RL = build_L(st.ring);
        st.iso.assign(S.host.stage[t].n(), -1);
        const GF& gf = S.space[t].gf;
        for (int u = 0; u < S.host.stage[t].n(); ++u) {
            // the ideal of matrices whose columns lie in the subspace
            const auto& vecs = S.space[t].members[u];
            RightIdeal J;
            std::vector<int> pick(dims[t], 0);
            while (true) {
                std::vector<int> mat(dims[t] * dims[t], 0);
                for (int j = 0; j < dims[t]; ++j) {
                    const auto col = vec_decode(gf, vecs[pick[j]], dims[t]);
                    for (int i = 0; i < dims[t]; ++i) mat[i * dims[t] + j] = col[i];
                }
                J.push_back(st.ring.encode(mat));
                int j = 0;
                while (j < dims[t] && ++pick[j] == static_cast<int>(vecs.size())) pick[j++] = 0;
                if (j == dims[t]) break;
                if (dims[t] == 0) break;
            }
            std::sort(J.begin(), J.end());
            J.erase(std::unique(J.begin(), J.end()), J.end());
            st.iso[u] = st.RL.index_of(J);
        }
        in.stage.push_back(std::move(st));
    }
    in.host = std::move(S.host);
    return in;
}

// Bounded case: a subspace lattice with the trivial trace, coordinatized by
// the full matrix ring.
inline CoordinatizationInput bounded_subspace_input(int q, int dim) {
    CoordinatizationInput in;
    if (dim == 0) return subspace_chain_input(q, {0});
    return subspace_chain_input(q, {0, dim});
}

} // namespace latkit
