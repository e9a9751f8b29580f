#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "latkit/banaschewski.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/subspace.hpp"

using namespace latkit;
using namespace fixtures;

TEST_CASE("verify_ban_function") {
    const auto sq = boolean(2);
    BanFunction neg;
    neg.table = {3, 2, 1, 0};
    CHECK(verify_ban_function(sq, neg).ok());

    // cyclic complement picker on the atoms of M_3: antitone holds vacuously
    const auto m = m3();
    BanFunction f;
    f.table = {4, 2, 3, 1, 0};
    CHECK(verify_ban_function(m, f).ok());

    const auto two = chain(2);
    BanFunction bad;
    bad.table = {1, 1};
    const auto v = verify_ban_function(two, bad);
    CHECK(v.kind == BanViolation::NotComplement);
    CHECK(v.x == 1);

    // antitone violation: swap complements on a comparable pair
    const auto cube = boolean(3);
    BanFunction g;
    g.table.assign(8, -1);
    for (int x = 0; x < 8; ++x) g.table[x] = 7 ^ x;
    g.table[1] = 6;
    g.table[3] = 5; // 1 <= 3 but f(3) = 5 is not <= f(1) = 6
    CHECK(verify_ban_function(cube, g).kind == BanViolation::NotAntitone);

    CHECK_THROWS_AS(verify_ban_function(sq.without_top_declaration(), neg), Error);
}

TEST_CASE("search_ban_function") {
    const auto cube = boolean(3);
    auto f = search_ban_function(cube);
    REQUIRE(f.has_value());
    for (int x = 0; x < 8; ++x) CHECK((*f)(x) == (7 ^ x)); // unique complements

    CHECK_THROWS_MATCHES(search_ban_function(chain(3)), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotComplemented;
                         }));

    // the search is deterministic
    const auto m = m3();
    auto f1 = search_ban_function(m, true);
    auto f2 = search_ban_function(m, true);
    REQUIRE(f1.has_value());
    CHECK(f1->table == f2->table);
    CHECK(is_boolean_sublattice(m, sublattice_closure(m, f1->range())));

    // every complemented modular lattice with <= 6 elements has one
    for (int n = 1; n <= 6; ++n)
        for_each_lattice(n, [&](const FiniteLattice& L) {
            if (!check_modular(L).holds || !check_complemented(L).holds) return true;
            auto g = search_ban_function(L, true);
            REQUIRE(g.has_value());
            CHECK(verify_ban_function(L, *g).ok());
            return true;
        });
}

TEST_CASE("atom_ban_function") {
    for (int k : {1, 2, 3}) {
        const auto b = boolean(k);
        const auto f = atom_ban_function(b);
        for (int x = 0; x < b.n(); ++x) CHECK(f(x) == ((b.n() - 1) ^ x));
    }
    CHECK_THROWS_AS(atom_ban_function(m3()), Error);      // not meet-semidistributive
    CHECK_THROWS_AS(atom_ban_function(chain(3)), Error);  // atoms join below the top

    // property sweep: the formula is valid on every qualifying small lattice
    for (int n = 1; n <= 7; ++n)
        for_each_lattice(n, [&](const FiniteLattice& L) {
            if (!check_meet_semidistributive(L).holds) return true;
            if (L.join_all(L.atoms()) != L.top()) return true;
            CHECK(verify_ban_function(L, atom_ban_function(L)).ok());
            return true;
        });
}

TEST_CASE("profile and decides") {
    const auto sq = boolean(2);
    Decomposition u{{1, 2}}; // (p, not p)
    validate_decomposition(sq, u);
    auto p = profile(sq, u, 1);
    CHECK(p.F == std::vector<int>{1});
    CHECK(p.G == std::vector<int>{1});
    CHECK(p.f == 2);
    CHECK(p.g == 2);
    for (int x = 0; x < sq.n(); ++x) CHECK(decides(sq, u, x));

    // x = 0: F is the set of nonzero blocks, f = 1, G everything
    const auto f23 = subspace_lattice(2, 3);
    const int e1 = f23.index_of_span({{1, 0, 0}});
    const int e2 = f23.index_of_span({{0, 1, 0}});
    const int e23 = f23.index_of_span({{0, 1, 0}, {0, 0, 1}});
    Decomposition w{{e1, e23}};
    validate_decomposition(f23.lat, w);
    auto p0 = profile(f23.lat, w, f23.lat.bottom());
    CHECK(p0.F == std::vector<int>{0, 1});
    CHECK(p0.f == f23.lat.top());
    CHECK(p0.G == std::vector<int>{0, 1});

    auto px = profile(f23.lat, w, e2);
    CHECK(px.F == std::vector<int>{0, 1});
    CHECK(px.G == std::vector<int>{0});
    CHECK(px.f == f23.lat.top());
    CHECK(px.g == e1);
    CHECK_FALSE(decides(f23.lat, w, e2));
    CHECK(decides(f23.lat, w, f23.lat.top())); // F empty
}

TEST_CASE("refine_to_decide") {
    const auto f23 = subspace_lattice(2, 3);
    const auto& L = f23.lat;
    const int e1 = f23.index_of_span({{1, 0, 0}});
    const int e2 = f23.index_of_span({{0, 1, 0}});
    const int e3 = f23.index_of_span({{0, 0, 1}});
    const int e23 = f23.index_of_span({{0, 1, 0}, {0, 0, 1}});
    const int e13 = f23.index_of_span({{1, 0, 0}, {0, 0, 1}});
    Decomposition u{{e1, e23}};

    auto [v, rm] = refine_to_decide(L, u, e2);
    CHECK(v.blocks == std::vector<int>{L.bottom(), e1, e2, e3});
    CHECK(rm.phi == std::vector<int>{0, 0, 1, 1});
    CHECK(decides(L, v, e2));
    const auto pv = profile(L, v, e2);
    CHECK(pv.f == e13);
    CHECK(L.meet(e2, pv.f) == L.bottom());
    CHECK(L.join(e2, pv.f) == L.top());

    // refining against the bottom splits every block as (0, block)
    auto [vz, rmz] = refine_to_decide(L, u, L.bottom());
    CHECK(vz.blocks == std::vector<int>{L.bottom(), e1, L.bottom(), e23});

    // an already-deciding target still refines to a deciding source
    auto [v2, rm2] = refine_to_decide(L, v, e2);
    CHECK(decides(L, v2, e2));
    CHECK_NOTHROW(verify_refinement_lemma(L, rm2, e2));
}

TEST_CASE("refinement lemma on random chains") {
    const auto f23 = subspace_lattice(2, 3);
    const auto& L = f23.lat;
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> elt(0, L.n() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        Decomposition u{{L.top()}};
        const int steps = trial % 3;
        for (int s = 0; s < steps; ++s) u = refine_to_decide(L, u, elt(rng)).first;
        const int x = elt(rng);
        auto [v, rm] = refine_to_decide(L, u, x);
        CHECK_NOTHROW(verify_refinement_lemma(L, rm, x));
        // the lemma also holds against a fresh element
        const int x2 = elt(rng);
        CHECK_NOTHROW(verify_refinement_lemma(L, rm, x2));
        // identity refinement
        RefinementMap id{u, u, {}};
        id.phi.resize(u.blocks.size());
        for (size_t i = 0; i < u.blocks.size(); ++i) id.phi[i] = static_cast<int>(i);
        CHECK_NOTHROW(verify_refinement_lemma(L, id, x));
    }
}

TEST_CASE("antitonicity of f_u across comparable pairs") {
    const auto f23 = subspace_lattice(2, 3);
    const auto& L = f23.lat;
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> elt(0, L.n() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        Decomposition u{{L.top()}};
        for (int s = 0; s < trial % 3; ++s) u = refine_to_decide(L, u, elt(rng)).first;
        for (int x = 0; x < L.n(); ++x)
            for (int y = 0; y < L.n(); ++y)
                if (L.leq(x, y)) CHECK(L.leq(profile(L, u, y).f, profile(L, u, x).f));
    }
}

TEST_CASE("build_ban_function") {
    const auto cube = boolean(3);
    const auto r = build_ban_function(cube);
    for (int x = 0; x < 8; ++x) CHECK(r.f(x) == (7 ^ x));
    CHECK(r.boolean_range.size() == 8);

    const auto m = m3();
    const auto rm = build_ban_function(m);
    CHECK(verify_ban_function(m, rm.f).ok());
    CHECK(rm.boolean_range.size() == 4);
    {
        int nonzero = 0;
        for (int b : rm.final_decomposition.blocks)
            if (b != m.bottom()) ++nonzero;
        CHECK(nonzero == 2);
    }
    // order-dependence: every enumeration yields a valid function with a
    // 4-element Boolean range
    std::vector<int> order = {0, 1, 2, 3, 4};
    do {
        const auto rr = build_ban_function(m, order);
        CHECK(verify_ban_function(m, rr.f).ok());
        CHECK(rr.boolean_range.size() == 4);
    } while (std::next_permutation(order.begin(), order.end()));

    const auto one = chain(1);
    const auto r1 = build_ban_function(one);
    CHECK(r1.f(0) == 0);
    CHECK(r1.boolean_range == std::vector<int>{0});

    CHECK_THROWS_AS(build_ban_function(n5()), Error);      // not modular
    CHECK_THROWS_AS(build_ban_function(chain(3)), Error);  // not complemented
}

TEST_CASE("build_ban_function with pruning matches the unpruned chain") {
    for (int n = 1; n <= 6; ++n)
        for_each_lattice(n, [&](const FiniteLattice& L) {
            if (!check_modular(L).holds || !check_complemented(L).holds) return true;
            const auto a = build_ban_function(L, {}, false);
            const auto b = build_ban_function(L, {}, true);
            CHECK(a.f.table == b.f.table);
            CHECK(a.boolean_range == b.boolean_range);
            return true;
        });
    const auto f23 = subspace_lattice(2, 3);
    const auto a = build_ban_function(f23.lat, {}, false);
    const auto b = build_ban_function(f23.lat, {}, true);
    CHECK(a.f.table == b.f.table);
}

TEST_CASE("stability: later chain elements give the same f value") {
    const auto m = m3();
    Decomposition u{{m.top()}};
    std::vector<Decomposition> chain;
    for (int k = 0; k < m.n(); ++k) {
        u = refine_to_decide(m, u, k).first;
        chain.push_back(u);
    }
    for (int k = 0; k < m.n(); ++k)
        for (size_t later = k; later < chain.size(); ++later)
            CHECK(profile(m, chain[later], k).f == profile(m, chain[k], k).f);
}

TEST_CASE("zero-block pruning preserves profiles") {
    const auto f23 = subspace_lattice(2, 3);
    const auto& L = f23.lat;
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> elt(0, L.n() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        Decomposition u{{L.top()}};
        for (int s = 0; s < 1 + trial % 2; ++s) u = refine_to_decide(L, u, elt(rng)).first;
        const auto p = prune_zero_blocks(L, u);
        validate_decomposition(L, p);
        for (int x = 0; x < L.n(); ++x) {
            CHECK(profile(L, u, x).f == profile(L, p, x).f);
            CHECK(profile(L, u, x).g == profile(L, p, x).g);
            CHECK(decides(L, u, x) == decides(L, p, x));
        }
    }
}

TEST_CASE("measure_from_function") {
    const auto m = m3();
    const auto f = build_ban_function(m).f;
    std::vector<int> all(m.n());
    for (int i = 0; i < m.n(); ++i) all[i] = i;
    const auto meas = measure_from_function(m, f, all);
    CHECK(verify_ban_measure(m, meas).ok());
    for (int y = 0; y < m.n(); ++y) {
        CHECK(meas.sub(m.n(), 0, y) == y);          // y - 0 = y ^ f(0) = y
        CHECK(meas.sub(m.n(), y, y) == m.bottom()); // y - y = y ^ f(y) = 0
    }
    // restriction to a proper ideal
    const auto sq = boolean(2);
    const auto fb = build_ban_function(sq).f;
    const auto meas2 = measure_from_function(sq, fb, {0, 1});
    CHECK(meas2.sub(sq.n(), 0, 1) == 1);
}

TEST_CASE("exchange_decomposition") {
    const auto m = m3();
    const auto built = build_ban_function(m);
    const auto& B = built.boolean_range;
    // c = 1 = x (+) y with x, y atoms
    const auto ex = exchange_decomposition(m, B, built.f, m.top(), 1, 2);
    CHECK(std::binary_search(B.begin(), B.end(), ex.a));
    CHECK(std::binary_search(B.begin(), B.end(), ex.b));
    CHECK(m.meet(ex.a, ex.b) == m.bottom());
    CHECK(m.join(ex.a, ex.b) == m.top());

    // degenerate split c = c (+) 0
    const auto exd = exchange_decomposition(m, B, built.f, m.top(), m.top(), 0);
    CHECK(exd.b == m.bottom());
    CHECK(exd.a == m.top());

    {
        // c outside the range
        int outside = -1;
        for (int c = 0; c < m.n(); ++c)
            if (!std::binary_search(B.begin(), B.end(), c)) outside = c;
        REQUIRE(outside >= 0);
        CHECK_THROWS_MATCHES(exchange_decomposition(m, B, built.f, outside, outside, 0), Error,
                             Catch::Matchers::Predicate<Error>(
                                 [](const Error& e) { return e.code() == Errc::NotInRange; }));
    }

    // sweep every (c, x, y) instance in M_3 and 2^3
    for (const auto& L : {m3(), boolean(3)}) {
        const auto bb = build_ban_function(L);
        for (int c : bb.boolean_range)
            for (int x = 0; x < L.n(); ++x)
                for (int y = 0; y < L.n(); ++y) {
                    if (L.meet(x, y) != L.bottom() || L.join(x, y) != c) continue;
                    CHECK_NOTHROW(exchange_decomposition(L, bb.boolean_range, bb.f, c, x, y));
                }
    }
}

TEST_CASE("boolean ranges are unique up to isomorphism") {
    CHECK(boolean_ranges_isomorphic(m3()));
    CHECK(boolean_ban_ranges(boolean(3)).size() == 1);
    for (int n = 1; n <= 6; ++n)
        for_each_lattice(n, [&](const FiniteLattice& L) {
            if (!check_modular(L).holds || !check_complemented(L).holds) return true;
            CHECK(boolean_ranges_isomorphic(L));
            CHECK_FALSE(boolean_ban_ranges(L).empty());
            return true;
        });
}

TEST_CASE("search and build agree on existence") {
    for (int n = 1; n <= 6; ++n)
        for_each_lattice(n, [&](const FiniteLattice& L) {
            if (!check_modular(L).holds || !check_complemented(L).holds) return true;
            CHECK(search_ban_function(L).has_value());
            CHECK_NOTHROW(build_ban_function(L));
            return true;
        });
}
