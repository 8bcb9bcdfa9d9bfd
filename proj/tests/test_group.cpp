#include "doctest.h"

#include <algorithm>
#include <set>

#include "zcenter/builtin.hpp"
#include "zcenter/errors.hpp"
#include "zcenter/group.hpp"

#include "oracles.hpp"

using namespace zcenter;

TEST_CASE("class structure of the standard small groups") {
    auto sizes = [](const char* name) {
        ClassPartition p = conjugacy_classes(group_by_name(name));
        return p.sizes;
    };
    CHECK(sizes("S_3") == std::vector<long>{1, 2, 3});
    CHECK(sizes("Q8") == std::vector<long>{1, 1, 2, 2, 2});
    CHECK(sizes("D_4") == std::vector<long>{1, 1, 2, 2, 2});
    CHECK(sizes("A_4") == std::vector<long>{1, 3, 4, 4});
    CHECK(sizes("S_4") == std::vector<long>{1, 3, 6, 6, 8});
    CHECK(sizes("D_8") == std::vector<long>{1, 1, 2, 2, 2, 4, 4});
    CHECK(sizes("Q16") == std::vector<long>{1, 1, 2, 2, 2, 4, 4});
    CHECK(sizes("SD16") == std::vector<long>{1, 1, 2, 2, 2, 4, 4});
    CHECK(sizes("Heis_3") == std::vector<long>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(sizes("M27") == std::vector<long>{1, 1, 1, 3, 3, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("classes agree with the orbit-closure oracle on the corpus") {
    for (const std::string& name : builtin_corpus(true)) {
        FiniteGroup g = group_by_name(name);
        ClassPartition p = conjugacy_classes(g);
        auto expected = oracle::conjugacy_classes_by_orbit(g);
        REQUIRE(p.classes == expected);
        long total = 0;
        for (long s : p.sizes) total += s;
        CHECK(total == g.order());
        CHECK(p.classes[0] == std::vector<int>{0});
        for (int i = 0; i < p.h; ++i) {
            CHECK(p.rep[i] == p.classes[i][0]);
            CHECK(g.order() % p.sizes[i] == 0);
            for (int x : p.classes[i]) CHECK(p.class_of[x] == i);
        }
    }
}

TEST_CASE("element orders and exponent") {
    FiniteGroup q8 = group_by_name("Q8");
    std::multiset<long> orders(q8.element_orders().begin(), q8.element_orders().end());
    CHECK(orders == std::multiset<long>{1, 2, 4, 4, 4, 4, 4, 4});
    CHECK(q8.exponent() == 4);
    CHECK(group_by_name("Heis_3").exponent() == 3);
    CHECK(group_by_name("M27").exponent() == 9);
    CHECK(group_by_name("S_4").exponent() == 12);
    FiniteGroup c12 = group_by_name("C_12");
    CHECK(c12.element_order(1) == 12);
    CHECK(c12.power(1, 7) == 7);
    CHECK(c12.power(1, -1) == 11);
}

TEST_CASE("a mutated Cayley table is rejected with a witness") {
    FiniteGroup s3 = group_by_name("S_3");
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = s3.mul(a, b);
    // Swapping two entries in one row keeps it a Latin square candidate row
    // but breaks associativity somewhere.
    std::swap(t[4][2], t[4][3]);
    CHECK_THROWS_AS(FiniteGroup::from_cayley(t), not_a_group);
    try {
        FiniteGroup::from_cayley(t);
    } catch (const not_a_group& e) {
        auto [a, b, c] = e.witness;
        if (a >= 0 && b >= 0 && c >= 0)
            CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
    }
    // A row that is not a permutation is rejected outright.
    auto bad = t;
    bad[1][0] = bad[1][1];
    CHECK_THROWS_AS(FiniteGroup::from_cayley(bad), not_a_group);
}

TEST_CASE("permutation groups enumerate correctly and respect the order cap") {
    CHECK(group_by_name("S_4").order() == 24);
    CHECK(group_by_name("A_4").order() == 12);
    CHECK(group_by_name("A_5").order() == 60);
    CHECK(group_by_name("S_7").order() == 5040);
    CHECK_THROWS_AS(group_by_name("S_8"), order_cap_exceeded);
}

TEST_CASE("centers and upper central series") {
    FiniteGroup d4 = group_by_name("D_4");
    CHECK(center_elements(d4).size() == 2);
    auto series = upper_central_series(d4);
    REQUIRE(series.size() == 3);
    CHECK(series[0].size() == 1);
    CHECK(series[1].size() == 2);
    CHECK(series[2].size() == 8);
    CHECK(is_nilpotent(d4));

    FiniteGroup s3 = group_by_name("S_3");
    CHECK(center_elements(s3).size() == 1);
    CHECK(upper_central_series(s3).size() == 1);
    CHECK_FALSE(is_nilpotent(s3));
    CHECK_FALSE(is_nilpotent(group_by_name("A_4")));
    CHECK(is_nilpotent(group_by_name("C_2xC_2xC_2")));
    CHECK(is_nilpotent(group_by_name("M27")));
    CHECK(upper_central_series(group_by_name("Q16")).size() == 4);
}

TEST_CASE("commutator subgroups") {
    CHECK(commutator_subgroup(group_by_name("S_3")).size() == 3);
    CHECK(commutator_subgroup(group_by_name("D_4")).size() == 2);
    CHECK(commutator_subgroup(group_by_name("Q8")).size() == 2);
    CHECK(commutator_subgroup(group_by_name("A_4")).size() == 4);
    CHECK(commutator_subgroup(group_by_name("S_4")).size() == 12);
    CHECK(commutator_subgroup(group_by_name("C_12")).size() == 1);
    CHECK(commutator_subgroup(group_by_name("Heis_3")).size() == 3);
}

TEST_CASE("quotients") {
    FiniteGroup q8 = group_by_name("Q8");
    auto [k4, proj] = quotient_group(q8, center_elements(q8));
    CHECK(k4.order() == 4);
    CHECK(k4.exponent() == 2);
    for (int x = 0; x < q8.order(); ++x)
        for (int y = 0; y < q8.order(); ++y)
            CHECK(proj[q8.mul(x, y)] == k4.mul(proj[x], proj[y]));

    // A non-normal subgroup is refused.
    FiniteGroup s3 = group_by_name("S_3");
    int refl = -1;
    for (int x = 1; x < 6; ++x)
        if (s3.element_order(x) == 2) refl = x;
    REQUIRE(refl >= 0);
    CHECK_THROWS_AS(make_subgroup(s3, {0, refl}, true), not_normal);
    SubgroupSet h = make_subgroup(s3, {0, refl}, false);
    CHECK_FALSE(h.normal);
    CHECK_THROWS_AS(quotient_group(s3, h), not_normal);

    // S_4 / V4 is S_3.
    FiniteGroup s4 = group_by_name("S_4");
    std::vector<int> v4{0};
    for (int x = 1; x < 24; ++x)
        if (s4.element_order(x) == 2) {
            bool in_v4 = true;  // the Klein four-group is the union of the
                                // identity and the size-3 class
            ClassPartition p = conjugacy_classes(s4);
            in_v4 = p.sizes[p.class_of[x]] == 3;
            if (in_v4) v4.push_back(x);
        }
    REQUIRE(v4.size() == 4);
    auto [q, proj2] = quotient_group(s4, make_subgroup(s4, v4, true));
    CHECK(q.order() == 6);
    CHECK_FALSE(is_nilpotent(q));
}

TEST_CASE("direct products") {
    FiniteGroup c6 = direct_product(group_by_name("C_2"), group_by_name("C_3"));
    CHECK(c6.order() == 6);
    CHECK(c6.exponent() == 6);
    long max_order = 0;
    for (int x = 0; x < 6; ++x) max_order = std::max(max_order, c6.element_order(x));
    CHECK(max_order == 6);  // C_2 x C_3 is cyclic
    CHECK(group_by_name("C_2xC_2xC_2").order() == 8);
    CHECK(group_by_name("C_2xC_2xC_2").exponent() == 2);
    CHECK(conjugacy_classes(direct_product(group_by_name("S_3"), group_by_name("C_2"))).h == 6);
}
