#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "zcenter/builtin.hpp"
#include "zcenter/errors.hpp"
#include "zcenter/iso.hpp"
#include "zcenter/verify.hpp"

using namespace zcenter;

namespace {

IsoContext context(const char* a, const char* b) {
    return make_iso_context(compute_center_data(group_by_name(a)),
                            compute_center_data(group_by_name(b)));
}

std::vector<int> iota_sigma(int h) {
    std::vector<int> s(h);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool is_identity_matrix(const std::vector<std::vector<CycNum>>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (i == j && !a[i][j].is_one()) return false;
            if (i != j && !a[i][j].is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("identity pairing yields the identity matrix with every flag set") {
    for (const char* name : {"C_1", "C_4", "S_3", "Q8", "A_4", "Q16", "M27"}) {
        IsoContext ctx = context(name, name);
        IsoCandidate c = candidate_matrix(ctx, iota_sigma(ctx.g.algebra.h));
        CHECK(is_identity_matrix(c.a));
        CHECK(c.integral);
        CHECK(c.unimodular);
        CHECK(c.normalized);
        CHECK(c.degree_preserving);
        CHECK(c.trace_preserving);
        REQUIRE(c.monomial.has_value());
        CHECK(c.monomial->lambda_row == 0);
        for (long o : c.monomial->xi_order) CHECK(o == 1);
    }
}

TEST_CASE("the C_2 row swap is the sign twist of the identity") {
    IsoContext ctx = context("C_2", "C_2");
    IsoCandidate c = candidate_matrix(ctx, {1, 0});
    CHECK(c.integral);
    CHECK(c.unimodular);
    CHECK(c.a[0][0].is_one());
    CHECK(c.a[1][1] == CycNum::integer(-1));
    CHECK(c.a[0][1].is_zero());
    CHECK(c.a[1][0].is_zero());
    CHECK_FALSE(c.normalized);
    CHECK(c.trace_preserving);
    REQUIRE(c.monomial.has_value());
    CHECK(c.monomial->pi == std::vector<int>{0, 1});
    CHECK(c.monomial->xi[1] == CycNum::integer(-1));
    CHECK(c.monomial->lambda_row == 1);

    IsoCandidate n = normalize(ctx, c);
    CHECK(n.normalized);
    CHECK(is_identity_matrix(n.a));
    CHECK(check_normalized(ctx, n));
    CHECK_FALSE(check_normalized(ctx, c));
}

TEST_CASE("C_4 and the Klein four-group have non-isomorphic centers") {
    IsoContext ctx = context("C_4", "C_2xC_2");
    REQUIRE(ctx.compatible);
    SearchResult s = search_integral_isomorphisms(ctx);
    CHECK(s.space_size == 24);
    CHECK(s.candidates.empty());
}

TEST_CASE("D_4 and Q8: all 24 pairings give unimodular monomial candidates") {
    IsoContext ctx = context("D_4", "Q8");
    SearchResult s = search_integral_isomorphisms(ctx);
    CHECK(s.space_size == 24);
    REQUIRE(s.candidates.size() == 24);
    int normalized = 0;
    for (const auto& c : s.candidates) {
        CHECK(c.unimodular);
        CHECK(c.monomial.has_value());
        CHECK(c.degree_preserving);
        // Composing with the inverse degree-one twist always normalizes.
        normalized += c.normalized ? 1 : 0;
        CHECK(normalize(ctx, c).normalized);
        CHECK(induced_table_identity(ctx, c));
        // Monomial + size preservation forces the Gram matrix of the trace
        // form to be the diagonal of class sizes.
        auto gram = gram_form(ctx, c);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(gram[i][j] ==
                      CycNum::integer(i == j ? ctx.g.algebra.sizes[i] : 0));
    }
    // The twist group of Q8 has order four, so a quarter of the candidates
    // carry the trivial twist and are already normalized.
    CHECK(normalized == 6);
    // Candidates arrive sorted by sigma and are pairwise distinct.
    for (size_t k = 1; k < s.candidates.size(); ++k)
        CHECK(s.candidates[k - 1].sigma < s.candidates[k].sigma);
}

TEST_CASE("self-isomorphisms are closed under composition") {
    IsoContext ctx = context("Q8", "Q8");
    SearchResult s = search_integral_isomorphisms(ctx);
    REQUIRE(s.candidates.size() == 24);
    const int h = 5;
    const auto& c1 = s.candidates[3];
    const auto& c2 = s.candidates[17];
    // Row i of the composite: apply c1 then c2 on class sums, i.e. A1 * A2.
    std::vector<std::vector<CycNum>> prod(h, std::vector<CycNum>(h, CycNum::integer(0)));
    for (int i = 0; i < h; ++i)
        for (int k = 0; k < h; ++k)
            for (int j = 0; j < h; ++j) prod[i][j] += c1.a[i][k] * c2.a[k][j];
    IsoCandidate back = candidate_from_matrix(ctx, prod);
    CHECK(back.unimodular);
    // The pairing composes along the same direction: sigma2 after sigma1.
    for (int l = 0; l < h; ++l) CHECK(back.sigma[l] == c2.sigma[c1.sigma[l]]);

    // Round-trip: every candidate is recovered from its own matrix.
    for (const auto& c : s.candidates) {
        IsoCandidate r = candidate_from_matrix(ctx, c.a);
        CHECK(r.sigma == c.sigma);
    }
}

TEST_CASE("degree-incompatible pairings are refused by the prune and are "
          "genuinely non-unimodular") {
    IsoContext ctx = context("S_3", "S_3");
    // Pairing the degree-2 character with the principal one is pruned.
    CHECK_FALSE(ctx.allowed[2][0]);
    CHECK(ctx.allowed[0][0]);
    CHECK(pruned_space_size(ctx) == 2);
    // Build the pruned pairing anyway: its matrix must not be unimodular
    // (soundness of the prune on this instance).
    IsoCandidate c = candidate_matrix(ctx, {2, 1, 0});
    CHECK_FALSE(c.unimodular);
    CHECK_FALSE(c.degree_preserving);
}

TEST_CASE("every unimodular pairing between C_8 self-centers is a twisted "
          "group automorphism") {
    IsoContext ctx = context("C_8", "C_8");
    SearchResult s = search_integral_isomorphisms(ctx);
    CHECK(s.space_size == 40320);
    REQUIRE(s.candidates.size() == 8);
    for (const auto& c : s.candidates) {
        REQUIRE(c.monomial.has_value());
        // pi must be a group automorphism of C_8 up to the sign twist: the
        // class of g^k maps to the class of g^{ak} for a odd.
        int a = c.monomial->pi[1];
        CHECK((a % 2) == 1);
        for (int k = 0; k < 8; ++k) CHECK(c.monomial->pi[k] == (a * k) % 8);
        for (const auto& x : c.monomial->xi)
            CHECK(x.root_of_unity_order().value() <= 2);
    }
}

TEST_CASE("Galois twists commute with the candidate construction") {
    IsoContext ctx = context("D_8", "Q16");
    SearchResult s = search_integral_isomorphisms(ctx);
    REQUIRE(s.candidates.size() == 16);
    for (const auto& c : s.candidates)
        for (long t : {3L, 5L, 7L}) CHECK(galois_twist_check(ctx, c, t));
    // Also on a non-integral candidate built from a rejected pairing of M27
    // with itself (swapping a linear and a cubic row is pruned).
    IsoContext m = context("M27", "M27");
    CHECK_FALSE(m.allowed[0][9]);
    std::vector<int> sigma = iota_sigma(11);
    std::swap(sigma[0], sigma[9]);
    IsoCandidate bad = candidate_matrix(m, sigma);
    CHECK_FALSE(bad.integral);
    for (long t : {2L, 4L, 5L, 7L, 8L}) CHECK(galois_twist_check(m, bad, t));
}

TEST_CASE("normalization fails without monomial structure") {
    IsoContext ctx = context("C_4", "C_2xC_2");
    // sigma = identity pairing: the matrix exists but is not monomial
    // (fractional entries), so normalize must refuse.
    IsoCandidate c = candidate_matrix(ctx, iota_sigma(4));
    CHECK_FALSE(c.integral);
    CHECK_FALSE(c.monomial.has_value());
    CHECK_THROWS_AS(normalize(ctx, c), not_monomial);
}

TEST_CASE("kronecker filter pigeonholes preserved class sums") {
    std::vector<long> sizes{1, 1, 2, 2, 2};
    // Image supported at a single class of equal size with a root of unity.
    std::vector<CycNum> good(5, CycNum::integer(0));
    good[3] = CycNum::integer(-1);
    auto hit = kronecker_filter(good, sizes, 2);
    REQUIRE(hit.has_value());
    CHECK(*hit == 3);

    // Spread support: norm matches but lands on smaller classes only; the
    // filter reports no forced class.
    std::vector<CycNum> spread(5, CycNum::integer(0));
    spread[0] = CycNum::integer(1);
    spread[1] = CycNum::integer(1);
    CHECK_FALSE(kronecker_filter(spread, sizes, 2).has_value());

    // Violated hypothesis: the norm equation fails.
    std::vector<CycNum> wrong(5, CycNum::integer(0));
    wrong[3] = CycNum::integer(2);
    CHECK_THROWS_AS(kronecker_filter(wrong, sizes, 2), hypothesis_violated);
}

TEST_CASE("budget aborts oversized searches") {
    IsoContext ctx = context("C_8", "C_8");
    SearchOptions opt;
    opt.budget = 1000;
    CHECK_THROWS_AS(search_integral_isomorphisms(ctx, opt), search_space_exceeded);
    CHECK(pruned_space_size(context("C_16", "C_16")) == 20922789888000ull);
}

TEST_CASE("incompatible shapes") {
    IsoContext ctx = context("C_2", "C_3");
    CHECK_FALSE(ctx.compatible);
    SearchResult s = search_integral_isomorphisms(ctx);
    CHECK_FALSE(s.compatible);
    CHECK(s.candidates.empty());
    // Same order, different class counts.
    IsoContext ctx2 = context("S_3", "C_6");
    CHECK_FALSE(ctx2.compatible);
}

TEST_CASE("threaded search matches single-threaded search") {
    IsoContext ctx = context("C_4xC_2", "C_4xC_2");
    SearchResult s1 = search_integral_isomorphisms(ctx, {10'000'000, 1});
    SearchResult s8 = search_integral_isomorphisms(ctx, {10'000'000, 8});
    REQUIRE(s1.candidates.size() == 32);
    REQUIRE(s8.candidates.size() == 32);
    for (size_t k = 0; k < s1.candidates.size(); ++k) {
        CHECK(s1.candidates[k].sigma == s8.candidates[k].sigma);
        CHECK(s1.candidates[k].a == s8.candidates[k].a);
    }
}

TEST_CASE("quotient square for the centers commutes on a D_4 to Q8 candidate") {
    IsoContext ctx = context("D_4", "Q8");
    SearchResult s = search_integral_isomorphisms(ctx);
    int checked = 0;
    for (const auto& c : s.candidates) {
        if (!c.monomial) continue;
        IsoCandidate n = normalize(ctx, c);
        QuotientSquareReport r = verify_quotient_square(ctx, n, center_elements(ctx.g.group),
                                         center_elements(ctx.gp.group));
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.subgroup_order == 2);
        CHECK(r.quotient_classes == 4);
        ++checked;
    }
    CHECK(checked == 24);

    // Mismatched supports: |N| = 4 on the left vs the center on the right.
    IsoCandidate n0 = normalize(ctx, s.candidates[0]);
    SubgroupSet r4;  // the cyclic subgroup generated by the rotation
    {
        const FiniteGroup& d4 = ctx.g.group;
        std::vector<int> elems{0, 1, 2, 3};
        r4 = make_subgroup(d4, elems, true);
    }
    QuotientSquareReport r = verify_quotient_square(ctx, n0, r4, center_elements(ctx.gp.group));
    CHECK(r.verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("csc and c4 verdicts on hand-checked pairs") {
    {
        IsoContext ctx = context("S_4", "S_4");
        CscReport r = verify_csc(ctx, {}, make_echo(ctx, "S_4", "S_4"));
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.search.candidates.size() == 4);
    }
    {
        IsoContext ctx = context("Q8", "D_4");
        C4Report r = verify_c4(ctx, {}, make_echo(ctx, "Q8", "D_4"));
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.iso_exists);
        CHECK(r.tables_identical);
    }
    {
        IsoContext ctx = context("C_4", "C_2xC_2");
        C4Report r = verify_c4(ctx, {}, make_echo(ctx, "C_4", "C_2xC_2"));
        CHECK(r.verdict == Verdict::pass);
        CHECK_FALSE(r.iso_exists);
        CHECK_FALSE(r.tables_identical);
    }
    {
        IsoContext ctx = context("D_8", "SD16");
        C4Report r = verify_c4(ctx, {}, make_echo(ctx, "D_8", "SD16"));
        CHECK(r.verdict == Verdict::pass);
        CHECK_FALSE(r.iso_exists);
        CHECK_FALSE(r.tables_identical);
    }
    {
        IsoContext ctx = context("S_3", "S_3");
        CHECK_THROWS_AS(
            verify_nilpotent_theorem(ctx, {}, make_echo(ctx, "S_3", "S_3")),
            not_nilpotent);
    }
}

TEST_CASE("table matching is invariant under a column shuffle") {
    CenterData a = compute_center_data(group_by_name("Q8"));
    CenterData b = compute_center_data(group_by_name("D_4"));
    CHECK(tables_identical_by_matching(a.table, b.table));
    CHECK(tables_identical_by_matching(a.table, a.table));
    CenterData c8 = compute_center_data(group_by_name("C_8"));
    CenterData cc = compute_center_data(group_by_name("C_4xC_2"));
    CHECK_FALSE(tables_identical_by_matching(c8.table, cc.table));
    CenterData h3 = compute_center_data(group_by_name("Heis_3"));
    CenterData m27 = compute_center_data(group_by_name("M27"));
    CHECK(tables_identical_by_matching(h3.table, m27.table));
}
