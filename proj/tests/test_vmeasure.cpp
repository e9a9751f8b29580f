#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "latkit/vmeasure.hpp"

using namespace latkit;
using namespace fixtures;

namespace {

Measure rank_measure(const FiniteLattice& B, const CommMonoid& M) {
    Measure m;
    m.monoid = M;
    m.mu.assign(B.n(), -1);
    for (int x = 0; x < B.n(); ++x) {
        m.members.push_back(x);
        int r = 0; // atoms below x
        for (int p : B.atoms())
            if (B.leq(p, x)) ++r;
        m.mu[x] = r;
    }
    return m;
}

} // namespace

TEST_CASE("monoid validation") {
    CHECK_NOTHROW(validate_monoid(nat_capped(4)));
    CommMonoid bad;
    bad.m = 2;
    bad.zero = 0;
    bad.add = {0, 1, 1, 0}; // Z/2: fine
    CHECK_NOTHROW(validate_monoid(bad));
    bad.add = {0, 1, 0, 0}; // not commutative
    CHECK_THROWS_AS(validate_monoid(bad), Error);
}

TEST_CASE("rank is a V-measure when the cap leaves headroom") {
    const auto sq = boolean(2);
    const auto m = rank_measure(sq, nat_capped(4));
    CHECK(verify_v_measure(sq, m).ok());
    const auto cube = boolean(3);
    CHECK(verify_v_measure(cube, rank_measure(cube, nat_capped(6))).ok());
}

TEST_CASE("constant zero violates the zero axiom") {
    const auto sq = boolean(2);
    Measure m = rank_measure(sq, nat_capped(4));
    for (int& v : m.mu) v = 0;
    const auto r = verify_v_measure(sq, m);
    CHECK(r.kind == VMeasureViolation::ZeroAxiom);
}

TEST_CASE("a monoid without the needed splittings fails the refinement axiom") {
    const auto sq = boolean(2);
    // saturating cap 2 makes 2 = 2 + 1 hold without a matching decomposition
    const auto sat = rank_measure(sq, nat_capped(2));
    const auto r = verify_v_measure(sq, sat);
    CHECK(r.kind == VMeasureViolation::Refinement);

    // rank into Z/3: 1 = 2 + 2 has no splitting of an atom
    CommMonoid z3;
    z3.m = 3;
    z3.zero = 0;
    z3.add.assign(9, 0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) z3.add[a * 3 + b] = (a + b) % 3;
    const auto rz = verify_v_measure(sq, rank_measure(sq, z3));
    CHECK(rz.kind == VMeasureViolation::Refinement);
}

TEST_CASE("verify_v_measure requires a Boolean domain") {
    const auto m = m3();
    Measure meas = rank_measure(m, nat_capped(8));
    CHECK_THROWS_AS(verify_v_measure(m, meas), Error);
}

TEST_CASE("vaught isomorphism from equal-rank relation") {
    const auto A = boolean(2);
    const auto B = boolean(2);
    const auto rel = relation_from_measures(A, rank_measure(A, nat_capped(4)), B, rank_measure(B, nat_capped(4)));
    const auto iso = vaught_isomorphism(A, B, rel);
    CHECK(iso[A.bottom()] == B.bottom());
    CHECK(iso[A.top()] == B.top());
    // lambda = mu o phi
    const auto lam = rank_measure(A, nat_capped(4));
    const auto mu = rank_measure(B, nat_capped(4));
    for (int x = 0; x < A.n(); ++x) CHECK(lam.mu[x] == mu.mu[iso[x]]);
}

TEST_CASE("identity relation on the two-element Boolean lattice") {
    const auto A = boolean(1);
    const auto rel = make_relation(A, A, {{0, 0}, {1, 1}});
    const auto iso = vaught_isomorphism(A, A, rel);
    CHECK(iso == std::vector<int>{0, 1});
}

TEST_CASE("size mismatch is rejected as a V-relation") {
    const auto A = boolean(2);
    const auto B = boolean(3);
    std::vector<std::pair<int, int>> pairs;
    auto rank = [](const FiniteLattice& L, int x) {
        int r = 0;
        for (int p : L.atoms())
            if (L.leq(p, x)) ++r;
        return r;
    };
    for (int x = 0; x < A.n(); ++x)
        for (int y = 0; y < B.n(); ++y)
            if (std::min(rank(A, x), 2) == std::min(rank(B, y), 2)) pairs.emplace_back(x, y);
    CHECK_THROWS_MATCHES(vaught_isomorphism(A, B, make_relation(A, B, pairs)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotAVRelation;
                         }));
}

TEST_CASE("graph of the extracted isomorphism stays inside the relation") {
    const auto A = boolean(3);
    // relate by equal rank
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < A.n(); ++x)
        for (int y = 0; y < A.n(); ++y)
            if (__builtin_popcount(x) == __builtin_popcount(y)) pairs.emplace_back(x, y);
    const auto rel = make_relation(A, A, pairs);
    const auto iso = vaught_isomorphism(A, A, rel);
    for (int x = 0; x < A.n(); ++x) CHECK(rel.has(x, iso[x]));
}
