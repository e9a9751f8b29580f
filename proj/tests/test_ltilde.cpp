#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latkit/ltilde.hpp"

using namespace latkit;

namespace {

struct FiniteSubsetsFixture {
    StagedLattice host;
    TraceFamily trace;
    FiniteSubsetsFixture(int depth) : host(staged_finite_subsets(depth)), trace(trace_from_chain(host)) {}
    LTildeContext ctx() const { return {host, trace}; }
};

} // namespace

TEST_CASE("canonical forms on finite subsets") {
    FiniteSubsetsFixture F(6);
    const auto ctx = F.ctx();

    // the class of ({0,2,3,4} u [5, oo)) = ({0} u [2, oo)) reduces to stage 2
    CHECK(canonicalize(ctx, ltilde_tail(5, 0b11101)) == ltilde_tail(2, 0b01));
    // without the bridge at 2 it stops at stage 3
    CHECK(canonicalize(ctx, ltilde_tail(5, 0b11001)) == ltilde_tail(3, 0b001));
    // a full stage is the unit
    CHECK(canonicalize(ctx, ltilde_tail(4, 0b1111)) == ltilde_tail(0, 0));
    CHECK(ltilde_unit(ctx) == ltilde_tail(0, 0));
    // Fin(0) is already canonical
    CHECK(canonicalize(ctx, ltilde_fin(0, 0)) == ltilde_fin(0, 0));
    CHECK(ltilde_zero(ctx) == ltilde_fin(0, 0));
    // Fin values drop to the least stage containing them
    CHECK(canonicalize(ctx, ltilde_fin(6, 0b101)) == ltilde_fin(3, 0b101));

    // canonicalize is idempotent across all materialized inputs
    for (int s = 0; s <= 6; ++s)
        for (int x = 0; x < F.host.stage[s].n(); ++x)
            for (bool tail : {false, true}) {
                const LTildeElement e{tail, s, x};
                const auto c = canonicalize(ctx, e);
                CHECK(canonicalize(ctx, c) == c);
            }
}

TEST_CASE("claim-1 compatibility of tails") {
    FiniteSubsetsFixture F(5);
    const auto ctx = F.ctx();
    for (int i = 0; i <= 5; ++i)
        for (int j = i; j <= 5; ++j)
            for (int x = 0; x < F.host.stage[i].n(); ++x) {
                const int lifted = F.host.stage[j].join(F.host.lift(i, x, j), F.trace.at(F.host, i, j));
                CHECK(canonicalize(ctx, ltilde_tail(i, x)) == canonicalize(ctx, ltilde_tail(j, lifted)));
            }
}

TEST_CASE("joins and meets follow the canonical identities") {
    FiniteSubsetsFixture F(6);
    const auto ctx = F.ctx();

    // Fin({0,2}) ^ Tail(3, {1,2}) = Fin({2})
    CHECK(ltilde_meet(ctx, ltilde_fin(3, 0b101), ltilde_tail(3, 0b110)) == ltilde_fin(3, 0b100));
    // Fin v Fin stays finite
    CHECK(ltilde_join(ctx, ltilde_fin(3, 0b001), ltilde_fin(3, 0b100)) == ltilde_fin(3, 0b101));
    // Tail v Tail at a common stage joins the values
    CHECK(ltilde_join(ctx, ltilde_tail(3, 0b001), ltilde_tail(3, 0b010)) ==
          canonicalize(ctx, ltilde_tail(3, 0b011)));
    // joining with the unit and meeting with the zero
    const auto e = ltilde_tail(3, 0b001);
    CHECK(ltilde_join(ctx, e, ltilde_unit(ctx)) == ltilde_unit(ctx));
    CHECK(ltilde_meet(ctx, e, ltilde_zero(ctx)) == ltilde_zero(ctx));
}

TEST_CASE("complements in the extension") {
    FiniteSubsetsFixture F(6);
    const auto ctx = F.ctx();
    // Fin({1}) is complemented by {0} u [2, oo)
    CHECK(ltilde_complement(ctx, ltilde_fin(2, 0b10)) == ltilde_tail(2, 0b01));
    CHECK(ltilde_complement(ctx, ltilde_fin(0, 0)) == ltilde_unit(ctx));
    CHECK(ltilde_complement(ctx, ltilde_unit(ctx)) == ltilde_zero(ctx));
}

TEST_CASE("materialized extension of finite subsets is the finite-cofinite window") {
    FiniteSubsetsFixture F(6);
    const auto ctx = F.ctx();
    const auto M = materialize_ltilde(ctx);
    CHECK(M.fin_count == 64);
    CHECK(M.lat.n() == 128);
    CHECK(M.elems[M.lat.top()] == ltilde_unit(ctx));
    CHECK(M.elems[M.lat.bottom()] == ltilde_zero(ctx));

    // lattice laws come out of from_leq; spot-check absorption via the ops
    for (int a = 0; a < M.lat.n(); a += 7)
        for (int b = 0; b < M.lat.n(); b += 5) {
            const auto j = ltilde_join(ctx, M.elems[a], M.elems[b]);
            const auto m = ltilde_meet(ctx, M.elems[a], j);
            CHECK(m == M.elems[a]);
        }
}

TEST_CASE("verify_embedding on finite subsets") {
    FiniteSubsetsFixture F(6);
    const auto rep = verify_embedding(F.host, F.trace);
    CHECK(rep.ok());
    CHECK(rep.size == 128);
    CHECK(rep.fin_count == 64);
    CHECK(rep.distributive_checked);
    CHECK(rep.distributive);
}

TEST_CASE("verify_embedding on staged subspaces over F_2") {
    const auto S = staged_subspaces(2, {0, 1, 2, 3, 4});
    const auto t = trace_from_chain(S.host);
    const auto rep = verify_embedding(S.host, t);
    CHECK(rep.ok());
    CHECK(rep.fin_count == 67);
    CHECK_FALSE(rep.distributive_checked); // stages are not distributive
}

TEST_CASE("verify_embedding at depth 0 is a vacuous pass") {
    FiniteSubsetsFixture F(0);
    const auto rep = verify_embedding(F.host, F.trace);
    CHECK(rep.ok());
    CHECK(rep.size == 2);
}

TEST_CASE("bounded hosts are rejected") {
    const auto [H, t] = trivial_trace(fixtures::m3());
    CHECK_THROWS_MATCHES(verify_embedding(H, t), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::PreconditionFailed;
                         }));
}
