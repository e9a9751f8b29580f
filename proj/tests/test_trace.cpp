#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latkit/trace.hpp"

using namespace latkit;

TEST_CASE("staged finite subsets") {
    const auto H = staged_finite_subsets(4);
    CHECK_NOTHROW(H.validate());
    CHECK(H.stage[3].n() == 8);
    CHECK_FALSE(H.has_unit);
    CHECK(H.lift(2, 3, 4) == 3);
    CHECK_THROWS_MATCHES(H.lift(2, 0, 1), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::StageOverflow;
                         }));
}

TEST_CASE("staged subspaces") {
    const auto S = staged_subspaces(2, {0, 1, 2, 3});
    CHECK_NOTHROW(S.host.validate());
    CHECK(S.host.stage[2].n() == 5);
    CHECK(S.host.stage[3].n() == 16);
    // padding embeds stage 2 onto the ideal below span(e0, e1)
    const int img = S.host.top_in(2, 3);
    CHECK(img == S.space[3].index_of_span({{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("interval trace on finite subsets") {
    const auto H = staged_finite_subsets(5);
    const auto t = trace_from_chain(H);
    CHECK(t.normal);
    // a_m^n is the interval [m, n) as a bitmask in stage n
    for (int m = 0; m <= 5; ++m)
        for (int n = m + 1; n <= 5; ++n) {
            const int want = ((1 << n) - 1) ^ ((1 << m) - 1);
            CHECK(t.at(H, m, n) == want);
        }
    CHECK(verify_trace(H, t).ok);
}

TEST_CASE("interval trace on staged subspaces picks the coordinate complements") {
    const auto S = staged_subspaces(2, {0, 1, 2, 3});
    const auto t = trace_from_chain(S.host);
    CHECK(t.normal);
    CHECK(t.at(S.host, 1, 3) == S.space[3].index_of_span({{0, 1, 0}, {0, 0, 1}}));
    CHECK(t.at(S.host, 0, 2) == S.space[2].index_of_span({{1, 0}, {0, 1}}));
    CHECK(verify_trace(S.host, t).ok);
}

TEST_CASE("constant chain on trivial stages") {
    StagedLattice H;
    H.poset = omega_chain(2);
    for (int i = 0; i < 3; ++i) H.stage.push_back(FiniteLattice::from_leq(1, [](int, int) { return true; }));
    H.inject[{0, 1}] = {0};
    H.inject[{0, 2}] = {0};
    H.inject[{1, 2}] = {0};
    H.has_unit = false;
    const auto t = trace_from_chain(H);
    CHECK_FALSE(t.normal);
    for (int m = 0; m < 3; ++m)
        for (int n = m + 1; n < 3; ++n) CHECK(t.at(H, m, n) == 0);
}

TEST_CASE("corrupted trace entries are reported") {
    const auto H = staged_finite_subsets(2);
    auto t = trace_from_chain(H);
    t.a[{1, 2}] = 1; // {0} overlaps a_0^1 = {0}
    const auto rep = verify_trace(H, t);
    CHECK_FALSE(rep.ok);
    CHECK(rep.detail.find("independence") != std::string::npos);
}

TEST_CASE("trivial trace of a bounded lattice") {
    const auto [H, t] = trivial_trace(fixtures::m3());
    CHECK(H.has_unit);
    CHECK(t.normal);
    CHECK(verify_trace(H, t).ok);
    CHECK(t.at(H, 0, 1) == 4);

    const auto [H1, t1] = trivial_trace(fixtures::chain(1));
    CHECK(H1.poset.k == 1);
    CHECK(verify_trace(H1, t1).ok);
}

TEST_CASE("trace from F_2") {
    const auto T = trace_from_ring(FiniteRing::field(2));
    CHECK(T.idems.idem == std::vector<int>{0, 1});
    CHECK(T.host.poset.k == 2);
    // A_0^1 = R, the top of stage 1
    CHECK(T.trace.at(T.host, 0, 1) == T.host.stage[1].max_element());
    CHECK(T.trace.normal);
}

TEST_CASE("trace from F_2 x F_2") {
    const auto R = FiniteRing::product(FiniteRing::field(2), FiniteRing::field(2));
    const auto T = trace_from_ring(R);
    REQUIRE(T.idems.k() == 4);
    // Lambda is the Boolean square
    const auto B = FiniteLattice::from_leq(4, [&](int i, int j) { return T.idems.leq(i, j); });
    CHECK(lattice_isomorphism(B, fixtures::boolean(2)).has_value());

    // A_{(1,0)}^{(1,1)} = (0,1)R = {(0,0), (0,1)}
    const int i10 = T.idems.index_of(2);
    const int i11 = T.idems.index_of(3);
    const int a = T.trace.at(T.host, i10, i11);
    const int rl = T.stage_members[i11][a];
    CHECK(T.RL.ideal[rl] == RightIdeal{0, 1});
}

TEST_CASE("trace from M_2(F_2) and the small corpus") {
    std::vector<FiniteRing> corpus;
    corpus.push_back(FiniteRing::field(2));
    corpus.push_back(FiniteRing::field(3));
    corpus.push_back(FiniteRing::field(4));
    corpus.push_back(FiniteRing::product(FiniteRing::field(2), FiniteRing::field(2)));
    corpus.push_back(FiniteRing::product(FiniteRing::field(2), FiniteRing::field(3)));
    corpus.push_back(FiniteRing::matrix_ring(2, 2));
    for (const auto& R : corpus) {
        const auto T = trace_from_ring(R);
        CHECK(T.trace.normal);
        CHECK(verify_trace(T.host, T.trace).ok);
        // cofinality through the unit: A_0^1 = R
        const int maxi = T.host.poset.chain.back();
        CHECK(T.trace.at(T.host, T.host.poset.zero, maxi) == T.host.stage[maxi].max_element());
    }
    CHECK(trace_from_ring(FiniteRing::matrix_ring(2, 2)).idems.k() == 8);
    CHECK_THROWS_MATCHES(trace_from_ring(FiniteRing::cyclic(4)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotRegular;
                         }));
}

TEST_CASE("staged lattice validation rejects broken injections") {
    auto H = staged_finite_subsets(2);
    H.inject[{0, 1}] = {1}; // bottom must map to bottom
    CHECK_THROWS_AS(H.validate(), Error);
}
