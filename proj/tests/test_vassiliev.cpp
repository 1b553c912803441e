#include <doctest.h>

#include <algorithm>

#include "knotcount/error.hpp"
#include "knotcount/vassiliev.hpp"

using namespace knotcount;

TEST_CASE("finite_type_sum: constant invariant telescopes to zero") {
    BraidWord b = torus_braid(2);
    CHECK(finite_type_sum(constant_invariant(17), b, {0}) == 0);
    CHECK(finite_type_sum(constant_invariant(17), b, {0, 2, 4}) == 0);
}

TEST_CASE("finite_type_sum: D_3 counting invariant on the trefoil") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    ConjSubset C = resolve_subset(D3, "reflections");
    KnotInvariant v = counting_invariant(C);
    BraidWord trefoil = torus_braid(1);

    // |X| = 1: v(sigma1^3) - v(sigma1^-1 sigma1^2) = 9 - 3
    CHECK(finite_type_sum(v, trefoil, {0}) == 6);

    // |X| = 2: oracle over the four variants, combined by hand with the
    // independent wirtinger count
    auto w = [&](std::vector<int> letters) {
        return count_by_wirtinger(make_braid(2, std::move(letters)), C).count;
    };
    long long expect = w({1, 1, 1}) - w({-1, 1, 1}) - w({1, -1, 1}) + w({-1, -1, 1});
    CHECK(expect == 6);
    CHECK(finite_type_sum(v, trefoil, {0, 1}) == expect);
}

TEST_CASE("finite_type_sum properties and errors") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    ConjSubset C = resolve_subset(D3, "reflections");
    KnotInvariant v = counting_invariant(C);
    BraidWord b = torus_braid(2);

    // symmetric in the crossing set: order of positions is irrelevant
    CHECK(finite_type_sum(v, b, {0, 3}) == finite_type_sum(v, b, {3, 0}));

    // |X| = 1 is exactly the difference of the two variants
    CrossingSelection flip;
    flip.assignment = {{2, -1}};
    long long diff = count_by_trace(b, C).count - count_by_trace(switch_crossings(b, flip), C).count;
    CHECK(finite_type_sum(v, b, {2}) == diff);

    Caps tight;
    tight.x_cap = 2;
    CHECK_THROWS_AS(finite_type_sum(v, b, {0, 1, 2}, tight), Error);
    CHECK_THROWS_AS(finite_type_sum(v, b, {99}), Error);
}

TEST_CASE("finite_differences") {
    auto rows = finite_differences({4, 4, 4, 4});
    CHECK(rows[1] == std::vector<long long>{0, 0, 0});

    // p^2 for p = 0..5
    rows = finite_differences({0, 1, 4, 9, 16, 25});
    CHECK(rows[2] == std::vector<long long>(4, 2));
    CHECK(rows[3] == std::vector<long long>(3, 0));

    // D_3 profile prefix: first differences never settle at zero
    rows = finite_differences({3, 9, 3, 3, 9, 3, 3, 9, 3});
    CHECK(rows[1] == std::vector<long long>{6, -6, 0, 6, -6, 0, 6, -6});

    CHECK_THROWS_AS(finite_differences({1}), Error);
}

TEST_CASE("is_polynomial_of_degree_at_most") {
    CHECK(is_polynomial_of_degree_at_most({5, 5, 5}, 0));
    std::vector<long long> linear;
    for (int p = 0; p <= 10; ++p) linear.push_back(2 * p + 1);
    CHECK(is_polynomial_of_degree_at_most(linear, 1));
    CHECK_FALSE(is_polynomial_of_degree_at_most({0, 1, 4, 9, 16, 25}, 1));
    CHECK(is_polynomial_of_degree_at_most({0, 1, 4, 9, 16, 25}, 2));
    CHECK_THROWS_AS(is_polynomial_of_degree_at_most({1, 2}, 1), Error);
}

TEST_CASE("torus_profile: D_3 reflections") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    ConjSubset C = resolve_subset(D3, "reflections");
    TorusProfile prof = torus_profile(C, 8);
    CHECK(prof.counts == std::vector<long long>{3, 9, 3, 3, 9, 3, 3, 9, 3});
    CHECK(prof.period == 3);
    CHECK(prof.verdict == Verdict::NotFiniteType);
    CHECK(prof.bound == 9);
    CHECK(prof.max_count == 9);
}

TEST_CASE("torus_profile: D_5 reflections") {
    GroupTable D5 = make_family(Family::Dihedral, 5);
    ConjSubset C = resolve_subset(D5, "reflections");
    TorusProfile prof = torus_profile(C, 4);
    CHECK(prof.counts == std::vector<long long>{5, 5, 25, 5, 5});
    CHECK(prof.verdict == Verdict::NotFiniteType);
}

TEST_CASE("torus_profile: commuting C is constant") {
    GroupTable Z5 = make_family(Family::Cyclic, 5);
    ConjSubset C = conj_closure(Z5, {1, 2, 3, 4});
    TorusProfile prof = torus_profile(C, 10);
    for (long long n : prof.counts) CHECK(n == 4);
    CHECK(prof.verdict == Verdict::Constant);
    CHECK(prof.period == 1);
}

TEST_CASE("profile bounds: c <= count <= c^2") {
    for (const char* spec : {"dihedral:7", "symmetric:4", "sl2_zm:3"}) {
        GroupTable G = make_family(std::string(spec));
        ConjSubset C = G.family == "dihedral"     ? resolve_subset(G, "reflections")
                       : G.family == "symmetric" ? resolve_subset(G, "transpositions")
                                                 : resolve_subset(G, "ab_class");
        TorusProfile prof = torus_profile(C, 12);
        for (long long n : prof.counts) {
            CHECK(n >= C.c());
            CHECK(n <= static_cast<long long>(C.c()) * C.c());
        }
    }
}

TEST_CASE("star_search") {
    SUBCASE("abelian groups never produce witnesses") {
        GroupTable Z6 = make_family(Family::Cyclic, 6);
        ConjSubset C = conj_closure(Z6, {1, 2, 3, 4, 5});
        CHECK(star_search(C, 10).empty());
    }
    SUBCASE("D_3 reflections contain (r1, r2, 1)") {
        GroupTable D3 = make_family(Family::Dihedral, 3);
        ConjSubset C = resolve_subset(D3, "reflections");
        auto ws = star_search(C, 1);
        bool found = false;
        for (const auto& w : ws)
            if (w.a == D3.generator("r1") && w.b == D3.generator("r2") && w.p == 1) found = true;
        CHECK(found);
        // and no p=0 witnesses, ever: the relation forces a = b there
        for (const auto& w : ws) CHECK(w.p != 0);
    }
    SUBCASE("SL(2,Z_5) contains (A, B, 1)") {
        GroupTable G = make_family(Family::Sl2Zm, 5);
        ConjSubset C = resolve_subset(G, "ab_class");
        auto ws = star_search(C, 1);
        bool found = false;
        for (const auto& w : ws)
            if (w.a == G.generator("A") && w.b == G.generator("B") && w.p == 1) found = true;
        CHECK(found);
    }
    SUBCASE("output is sorted by (a, b, p)") {
        GroupTable D5 = make_family(Family::Dihedral, 5);
        ConjSubset C = resolve_subset(D5, "reflections");
        auto ws = star_search(C, 6);
        auto key = [](const StarWitness& w) { return std::tuple(w.a, w.b, w.p); };
        for (size_t i = 1; i < ws.size(); ++i) CHECK(key(ws[i - 1]) < key(ws[i]));
    }
}

TEST_CASE("verdict soundness: witness in range <=> profile non-constant") {
    // Lemma 1's (*) <=> (**), checked per pair over a shared p-range wide
    // enough to cover one period of every (ab)-power sequence.
    std::vector<std::pair<GroupTable, std::string>> cases;
    cases.emplace_back(make_family(Family::Dihedral, 3), "reflections");
    cases.emplace_back(make_family(Family::Dihedral, 4), "reflections");
    cases.emplace_back(make_family(Family::Symmetric, 4), "transpositions");
    cases.emplace_back(make_family(Family::Sl2Zm, 3), "ab_class");
    cases.emplace_back(make_family(Family::Cyclic, 7), "1 2 3 4 5 6");
    for (const auto& [G, spec] : cases) {
        ConjSubset C = resolve_subset(G, spec);
        int p_max = static_cast<int>(G.exponent());
        TorusProfile prof = torus_profile(C, p_max);
        bool witness = !star_search(C, p_max).empty();
        CHECK(witness == (prof.verdict == Verdict::NotFiniteType));
    }
}

TEST_CASE("monotone pair extension along the S_n chain") {
    // a witness for (S_n, transpositions) persists in (S_{n+1}, transpositions)
    bool prev = false;
    for (int n = 3; n <= 6; ++n) {
        GroupTable S = make_family(Family::Symmetric, n);
        ConjSubset C = resolve_subset(S, "transpositions");
        bool has = !star_search(C, 4).empty();
        if (prev) CHECK(has);
        prev = has;
    }
}

TEST_CASE("verify_claim") {
    SUBCASE("lemma2(5): witness (r1, r2, 2)") {
        FiniteTypeVerdict v = verify_claim(Claim::Lemma2, 5);
        CHECK(v.holds);
        bool found = false;
        for (const auto& w : v.witnesses)
            if (w.a == "s*r^0" && w.b == "s*r^1" && w.p == 2) found = true;
        CHECK(found);
    }
    SUBCASE("thm3b(3): S_3 with transpositions") {
        FiniteTypeVerdict v = verify_claim(Claim::Thm3b, 3);
        CHECK(v.holds);
        CHECK(v.c == 3);
    }
    SUBCASE("thm3c(5): A_5 with double transpositions") {
        FiniteTypeVerdict v = verify_claim(Claim::Thm3c, 5);
        CHECK(v.holds);
        // the D_3 witness pair from (12)(45), (23)(45)
        GroupTable A5 = make_family(Family::Alternating, 5);
        std::string w1 = A5.labels[A5.generator("w1")];
        std::string w2 = A5.labels[A5.generator("w2")];
        bool found = false;
        for (const auto& w : v.witnesses)
            if (w.a == w1 && w.b == w2 && w.p == 1) found = true;
        CHECK(found);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(verify_claim(Claim::Lemma2, 4), Error);  // even
        CHECK_THROWS_AS(verify_claim(Claim::Thm3c, 4), Error);   // n < 5
        CHECK_THROWS_AS(verify_claim(Claim::Thm3d, 4), Error);   // not prime
    }
}
