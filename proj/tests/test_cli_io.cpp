#include "doctest.h"

#include <set>

#include "zcenter/builtin.hpp"
#include "zcenter/errors.hpp"
#include "zcenter/group_spec.hpp"
#include "zcenter/iso.hpp"
#include "zcenter/report.hpp"
#include "zcenter/verify.hpp"

using namespace zcenter;

TEST_CASE("builtin constructors produce the advertised groups") {
    CHECK(group_by_name("C_7").order() == 7);
    CHECK(group_by_name("D_6").order() == 12);
    CHECK(group_by_name("D_1").order() == 2);
    CHECK(group_by_name("Q8").order() == 8);
    CHECK(group_by_name("Q16").order() == 16);
    CHECK(group_by_name("SD16").order() == 16);
    CHECK(group_by_name("Heis_3").order() == 27);
    CHECK(group_by_name("M27").order() == 27);
    CHECK(group_by_name("Q16").exponent() == 8);
    CHECK(group_by_name("SD16").exponent() == 8);
    // Q16 has a unique element of order 2 (generalized quaternion signature).
    const FiniteGroup q16 = group_by_name("Q16");
    int involutions = 0;
    for (int x = 0; x < 16; ++x)
        if (q16.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
    // SD16 has more than one involution, distinguishing it from Q16.
    const FiniteGroup sd16 = group_by_name("SD16");
    involutions = 0;
    for (int x = 0; x < 16; ++x)
        if (sd16.element_order(x) == 2) ++involutions;
    CHECK(involutions == 5);

    CHECK(is_builtin_name("C_12"));
    CHECK(is_builtin_name("A_5"));
    CHECK(is_builtin_name("M27"));
    CHECK_FALSE(is_builtin_name("C_"));
    CHECK_FALSE(is_builtin_name("C_0"));
    CHECK_FALSE(is_builtin_name("F_20"));
    CHECK_THROWS_AS(builtin_group("E_8"), unknown_name);
}

TEST_CASE("name expressions build direct products") {
    CHECK(group_by_name("C_2xC_3").order() == 6);
    CHECK(group_by_name("C_2xC_2xC_2").order() == 8);
    CHECK(group_by_name("C_4\xC3\x97" "C_2").order() == 8);  // times sign
    CHECK(group_by_name("Q8xC_3").order() == 24);
    CHECK_THROWS_AS(group_by_name("C_2x"), unknown_name);
    CHECK_THROWS_AS(group_by_name("xC_2"), unknown_name);
    CHECK_THROWS_AS(group_by_name("C_2xZ_9"), unknown_name);
}

TEST_CASE("corpus and pair lists") {
    auto corpus = builtin_corpus(false);
    CHECK(corpus.size() == 21);
    auto extended = builtin_corpus(true);
    CHECK(extended.size() == 23);
    for (const auto& name : extended) CHECK(group_by_name(name).order() <= 48);

    CHECK(nilpotent_pairs(false).size() == 21);   // C(5,2)+5 + C(3,2)+3
    CHECK(nilpotent_pairs(true).size() == 22);
    CHECK(table_identity_pairs(false).size() == 22);
    for (const auto& [a, b] : nilpotent_pairs(true)) {
        CHECK(is_nilpotent(group_by_name(a)));
        CHECK(is_nilpotent(group_by_name(b)));
        CHECK(group_by_name(a).order() == group_by_name(b).order());
    }
}

TEST_CASE("JSON group specs") {
    CHECK(parse_group_spec_text(R"({"kind":"named","name":"C_2"})").order() == 2);
    CHECK(parse_group_spec_text(R"({"kind":"named","name":"Q8"})").order() == 8);
    CHECK(conjugacy_classes(parse_group_spec_text(R"({"kind":"named","name":"Q8"})")).h == 5);
    CHECK(parse_group_spec_text(R"({"kind":"product","parts":["C_2","C_2"]})").exponent() == 2);
    CHECK(parse_group_spec_text(
              R"({"kind":"product","parts":["C_3",{"kind":"named","name":"S_3"}]})")
              .order() == 18);
    CHECK(parse_group_spec_text(R"({"kind":"cayley","table":[[0,1],[1,0]]})").order() == 2);
    CHECK(parse_group_spec_text(
              R"({"kind":"perm","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]})")
              .order() == 24);
    CHECK(parse_group_spec_text(R"("C_2xC_2")").order() == 4);

    CHECK_THROWS_AS(parse_group_spec_text("not json"), parse_error);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"wedge"})"), parse_error);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"cayley"})"), parse_error);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"perm","degree":3})"), parse_error);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"named","name":"Z99"})"), unknown_name);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"cayley","table":[[0,0],[0,0]]})"),
                    not_a_group);
    CHECK_THROWS_AS(parse_group_spec_text(R"({"kind":"product","parts":[]})"), parse_error);
}

TEST_CASE("path detection for CLI group arguments") {
    CHECK(looks_like_path("specs/q8.json"));
    CHECK(looks_like_path("./q8"));
    CHECK(looks_like_path("q8.json"));
    CHECK_FALSE(looks_like_path("Q8"));
    CHECK_FALSE(looks_like_path("C_2xC_2"));
}

TEST_CASE("reports are deterministic and carry the contract fields") {
    IsoContext ctx = make_iso_context(compute_center_data(group_by_name("Q8")),
                                      compute_center_data(group_by_name("D_4")));
    PairEcho echo = make_echo(ctx, "Q8", "D_4");
    SearchResult s = search_integral_isomorphisms(ctx);
    ordered_json r1 = json_iso_report(echo, ctx.g, ctx.gp, s, true, -1);
    ordered_json r2 = json_iso_report(echo, ctx.g, ctx.gp, s, true, -1);
    CHECK(r1.dump(2) == r2.dump(2));
    CHECK(r1["pair"]["g"]["name"] == "Q8");
    CHECK(r1["search"]["candidate_count"] == 24);
    CHECK(r1["search"]["candidates"][0].contains("matrix"));
    CHECK(r1["search"]["candidates"][0]["sigma"].is_array());

    // Truncation cap keeps the exact count.
    ordered_json capped = json_iso_report(echo, ctx.g, ctx.gp, s, true, 3);
    CHECK(capped["search"]["candidates"].size() == 3);
    CHECK(capped["search"]["candidate_count"] == 24);
    CHECK(capped["search"]["candidates_truncated"] == true);

    ordered_json envelope = report_envelope("iso Q8 D_4", json_iso_report(echo, ctx.g, ctx.gp, s, false, -1), false, 1.5);
    CHECK(envelope["engine"] == engine_version());
    CHECK(envelope["command"] == "iso Q8 D_4");
    CHECK(envelope["indexing"] == "0-based");
    CHECK(envelope["timing"].is_null());
    ordered_json timed = report_envelope("iso", ordered_json::object(), true, 1.5);
    CHECK(timed["timing"]["seconds"] == 1.5);
}

TEST_CASE("matrices render as exact cyclotomic text") {
    std::vector<std::vector<CycNum>> m{
        {CycNum::integer(1), CycNum::rational(1, 2)},
        {CycNum::zeta(4), CycNum::integer(0)}};
    ordered_json j = json_matrix(m);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(CycNum::parse(j[r][c].get<std::string>()) == m[r][c]);

    CenterData d = compute_center_data(group_by_name("S_3"));
    ordered_json ct = json_chartable_report("S_3", d);
    CHECK(ct["degrees"] == ordered_json::array({1, 1, 2}));
    CHECK(CycNum::parse(ct["rows"][2][1].get<std::string>()) == CycNum::integer(-1));
    CHECK(CycNum::parse(ct["block_idempotents"][0][0].get<std::string>()) ==
          CycNum::rational(1, 6));
}

TEST_CASE("verdict names") {
    CHECK(verdict_name(Verdict::pass) == "pass");
    CHECK(verdict_name(Verdict::fail) == "fail");
    CHECK(verdict_name(Verdict::hypothesis_not_met) == "hypothesis-not-met");
}
