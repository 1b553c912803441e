#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotcount/error.hpp"
#include "knotcount/group.hpp"

using namespace knotcount;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Independent oracle for |SL(2,Z_m)|: count all 2x2 matrices with det = 1.
long long sl2_order_by_enumeration(int m) {
    long long n = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d)
                    if (((a * d - b * c) % m + m) % m == 1 % m) ++n;
    return n;
}

} // namespace

TEST_CASE("group_from_table: trivial group") {
    GroupTable G = group_from_table(1, {"e"}, {0});
    CHECK(G.order == 1);
    CHECK(G.id == 0);
    CHECK(G.inv == std::vector<int>{0});
}

TEST_CASE("group_from_table: Z_2 and Z_3") {
    GroupTable Z2 = group_from_table(2, {"0", "1"}, {0, 1, 1, 0});
    CHECK(Z2.inv == std::vector<int>{0, 1});

    GroupTable Z3 = group_from_table(3, {"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1});
    CHECK(Z3.id == 0);
    CHECK(Z3.inv == std::vector<int>{0, 2, 1});
    // direct axiom check
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) CHECK(Z3.op(Z3.op(a, b), c) == Z3.op(a, Z3.op(b, c)));
}

TEST_CASE("group_from_table rejects non-groups with a witness") {
    // Latin square that is not associative (smallest example: order 5 loop)
    std::vector<int> loop = {
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0,
    };
    CHECK(code_of([&] { group_from_table(5, {}, loop); }) == "NotAGroup");

    CHECK(code_of([&] { group_from_table(2, {"a"}, {0, 1, 1, 0}); }) == "MalformedSpec");
    CHECK(code_of([&] { group_from_table(2, {}, {0, 1, 1}); }) == "MalformedSpec");
    CHECK(code_of([&] { group_from_table(2, {}, {0, 7, 1, 0}); }) == "MalformedSpec");
    // rows repeat an element
    CHECK(code_of([&] { group_from_table(2, {}, {0, 0, 1, 1}); }) == "NotAGroup");
}

TEST_CASE("family orders") {
    CHECK(make_family(Family::Dihedral, 3).order == 6);
    CHECK(make_family(Family::Sl2Zm, 2).order == 6);
    CHECK(make_family(Family::Sl2Zm, 3).order == 24);
    CHECK(make_family(Family::Alternating, 5).order == 60);
    CHECK(make_family(Family::Symmetric, 4).order == 24);
    CHECK(make_family(Family::Cyclic, 7).order == 7);

    for (int m : {2, 3, 4, 5, 6}) CHECK(make_family(Family::Sl2Zm, m).order == sl2_order_by_enumeration(m));
}

TEST_CASE("family parameter validation and order cap") {
    CHECK(code_of([] { make_family(Family::Dihedral, 1); }) == "ParamOutOfRange");
    CHECK(code_of([] { make_family(Family::Sl2Zm, 1); }) == "ParamOutOfRange");
    CHECK(code_of([] { make_family(Family::Symmetric, 8); }) == "ParamOutOfRange"); // 40320 > 5040
    CHECK(code_of([] { make_family(Family::Sl2Zm, 19); }) == "ParamOutOfRange");
    CHECK(make_family(Family::Symmetric, 7).order == 5040); // exactly at the cap
    // the cap is configurable
    CHECK(code_of([] { make_family(Family::Symmetric, 5, 100); }) == "ParamOutOfRange");
}

TEST_CASE("dihedral presentation relations hold on r1, r2") {
    for (int n = 2; n <= 9; ++n) {
        GroupTable G = make_family(Family::Dihedral, n);
        int r1 = G.generator("r1");
        int r2 = G.generator("r2");
        CHECK(G.op(r1, r1) == G.id);
        CHECK(G.op(r2, r2) == G.id);
        CHECK(G.power(G.op(r1, r2), n) == G.id);
        CHECK(G.element_order(G.op(r1, r2)) == n);
    }
}

TEST_CASE("sl2_zm: A,B satisfy the braid relation ABA = BAB") {
    for (int m = 2; m <= 12; ++m) {
        GroupTable G = make_family(Family::Sl2Zm, m);
        int A = G.generator("A");
        int B = G.generator("B");
        CHECK(G.op(G.op(A, B), A) == G.op(G.op(B, A), B));
        CHECK(G.labels[A] == "[[1,1],[0,1]]");
    }
}

TEST_CASE("conj_closure examples") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    SUBCASE("identity seed stays alone") {
        ConjSubset C = conj_closure(D3, {D3.id});
        CHECK(C.members == std::vector<int>{D3.id});
    }
    SUBCASE("one reflection closes to all three") {
        ConjSubset C = conj_closure(D3, {D3.generator("r1")});
        CHECK(C.c() == 3);
        for (int g : C.members) CHECK(D3.element_order(g) == 2);
    }
    SUBCASE("a transposition in S_4 closes to all six") {
        GroupTable S4 = make_family(Family::Symmetric, 4);
        ConjSubset C = conj_closure(S4, {S4.generator("s1")});
        CHECK(C.c() == 6);
    }
    SUBCASE("empty seeds are an error") {
        CHECK_THROWS_AS(conj_closure(D3, {}), Error);
    }
}

TEST_CASE("conj_closure results are conjugation-stable, exhaustively") {
    std::vector<std::pair<GroupTable, std::vector<std::string>>> cases;
    cases.emplace_back(make_family(Family::Dihedral, 6), std::vector<std::string>{"r1", "r2"});
    cases.emplace_back(make_family(Family::Symmetric, 4), std::vector<std::string>{"s1"});
    cases.emplace_back(make_family(Family::Alternating, 5), std::vector<std::string>{"d1"});
    cases.emplace_back(make_family(Family::Sl2Zm, 5), std::vector<std::string>{"A", "B"});
    for (const auto& [G, gens] : cases) {
        std::vector<int> seeds;
        for (const auto& g : gens) seeds.push_back(G.generator(g));
        ConjSubset C = conj_closure(G, seeds);
        for (int g = 0; g < G.order; ++g)
            for (int a : C.members) CHECK(C.contains(G.conj(g, a)));
        CHECK(std::is_sorted(C.members.begin(), C.members.end()));
    }
}

TEST_CASE("commutator subgroup") {
    SUBCASE("abelian groups have trivial commutator subgroup") {
        GroupTable Z6 = make_family(Family::Cyclic, 6);
        CHECK(commutator_subgroup(Z6).members == std::vector<int>{Z6.id});
    }
    SUBCASE("D_3' is the rotation subgroup") {
        GroupTable D3 = make_family(Family::Dihedral, 3);
        Subgroup D = commutator_subgroup(D3);
        CHECK(D.size() == 3);
        for (int g : D.members) CHECK(D3.labels[g].front() == 'r');
    }
    SUBCASE("S_4' = A_4: exactly the even permutations") {
        GroupTable S4 = make_family(Family::Symmetric, 4);
        Subgroup D = commutator_subgroup(S4);
        CHECK(D.size() == 12);
        // oracle: membership must coincide with evenness, read off the
        // one-line labels
        for (int g = 0; g < S4.order; ++g) {
            const std::string& lab = S4.labels[g];
            int inversions = 0;
            for (size_t i = 0; i < lab.size(); ++i)
                for (size_t j = i + 1; j < lab.size(); ++j)
                    if (lab[i] > lab[j]) ++inversions;
            CHECK(D.contains(g) == (inversions % 2 == 0));
        }
    }
    SUBCASE("the commutator subgroup is normal") {
        for (int n = 3; n <= 6; ++n) {
            GroupTable G = make_family(Family::Dihedral, n);
            CHECK(is_normal(G, commutator_subgroup(G)));
        }
    }
}

TEST_CASE("quotient_is_cyclic") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    CHECK(quotient_is_cyclic(D3, commutator_subgroup(D3)));

    GroupTable D4 = make_family(Family::Dihedral, 4);
    CHECK_FALSE(quotient_is_cyclic(D4, commutator_subgroup(D4)));

    GroupTable Z6 = make_family(Family::Cyclic, 6);
    CHECK(quotient_is_cyclic(Z6, generated_subgroup(Z6, {})));

    SUBCASE("D_n/D_n' is cyclic iff n odd, n = 2..12") {
        for (int n = 2; n <= 12; ++n) {
            GroupTable G = make_family(Family::Dihedral, n);
            CHECK(quotient_is_cyclic(G, commutator_subgroup(G)) == (n % 2 == 1));
        }
    }

    SUBCASE("non-normal subgroup is rejected") {
        Subgroup H = generated_subgroup(D3, {D3.generator("r1")});
        CHECK_THROWS_AS(quotient_is_cyclic(D3, H), Error);
    }
}

TEST_CASE("generated_subgroup") {
    GroupTable D3 = make_family(Family::Dihedral, 3);
    CHECK(generated_subgroup(D3, {}).members == std::vector<int>{D3.id});
    CHECK(generated_subgroup(D3, {D3.generator("r1"), D3.generator("r2")}).size() == 6);

    GroupTable S4 = make_family(Family::Symmetric, 4);
    CHECK(generated_subgroup(S4, {S4.generator("s1")}).size() == 2);

    SUBCASE("closure under product and inverse") {
        Subgroup H = generated_subgroup(S4, {S4.generator("s1"), S4.generator("s2")});
        for (int a : H.members) {
            CHECK(H.contains(S4.inv[a]));
            for (int b : H.members) CHECK(H.contains(S4.op(a, b)));
        }
    }
}

TEST_CASE("resolve_subset named shortcuts") {
    GroupTable D5 = make_family(Family::Dihedral, 5);
    CHECK(resolve_subset(D5, "reflections").c() == 5);

    GroupTable S4 = make_family(Family::Symmetric, 4);
    CHECK(resolve_subset(S4, "transpositions").c() == 6);

    GroupTable A5 = make_family(Family::Alternating, 5);
    CHECK(resolve_subset(A5, "double_transpositions").c() == 15);

    SUBCASE("explicit labels") {
        ConjSubset C = resolve_subset(D5, "r^1");
        CHECK(C.c() == 2); // r and r^-1 are conjugate in D_5
    }
    SUBCASE("mismatched shortcut and unknown label") {
        CHECK_THROWS_AS(resolve_subset(S4, "reflections"), Error);
        CHECK_THROWS_AS(resolve_subset(D5, "r^99"), Error);
    }
}

TEST_CASE("subgroup_table reindexes correctly") {
    GroupTable S4 = make_family(Family::Symmetric, 4);
    Subgroup A4 = commutator_subgroup(S4);
    GroupTable T = subgroup_table(S4, A4);
    CHECK(T.order == 12);
    CHECK(T.labels[T.id] == S4.labels[S4.id]);
    // sanity: the reindexed table is a group
    GroupTable revalidated = group_from_table(T.order, T.labels, T.mul);
    CHECK(revalidated.id == T.id);
}

TEST_CASE("exponent and element_order") {
    GroupTable D6 = make_family(Family::Dihedral, 6);
    CHECK(D6.exponent() == 6);
    GroupTable Z8 = make_family(Family::Cyclic, 8);
    CHECK(Z8.exponent() == 8);
}
