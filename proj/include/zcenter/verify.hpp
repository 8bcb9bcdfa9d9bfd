#pragma once

#include <string>
#include <vector>

#include "zcenter/iso.hpp"

namespace zcenter {

// A theorem check ends in one of three states: the claimed implication held,
// it failed with an exact witness, or its hypothesis was not met (which is
// not a counterexample).
enum class Verdict { pass, fail, hypothesis_not_met };

std::string verdict_name(Verdict v);

struct PairEcho {
    std::string name_g, name_gp;
    long order_g = 0, order_gp = 0;
    int h_g = 0, h_gp = 0;
};

PairEcho make_echo(const IsoContext& ctx, std::string name_g, std::string name_gp);

// Class sum correspondence: every unimodular candidate is monomial exactly
// when it preserves the character degrees.
struct CscReport {
    PairEcho pair;
    SearchResult search;
    Verdict verdict = Verdict::pass;
    std::string witness;
};

CscReport verify_csc(const IsoContext& ctx, const SearchOptions& opt, PairEcho echo);

// Quotient square for a normalized candidate and normal subgroups with
// matching class supports: equal orders, matched subgroup sums, commuting
// projection matrices, and a normalized induced candidate on the quotients.
struct QuotientSquareReport {
    Verdict verdict = Verdict::pass;
    std::string witness;
    long subgroup_order = 0;
    long subgroup_order_p = 0;
    int quotient_classes = 0;
};

QuotientSquareReport verify_quotient_square(const IsoContext& ctx, const IsoCandidate& c,
                             const SubgroupSet& n, const SubgroupSet& np);

// For nilpotent pairs: (a) every found candidate is monomial and
// degree-preserving; (b) normalized candidates map the classes inside each
// upper-central term onto those of the partner; (c) size-one class sums map
// to size-one class sums up to a root of unity.
struct NilpotentReport {
    PairEcho pair;
    SearchResult search;
    Verdict verdict = Verdict::pass;
    std::string witness;
};

NilpotentReport verify_nilpotent_theorem(const IsoContext& ctx, const SearchOptions& opt,
                                         PairEcho echo);

// Two independent computations of "the centers are isomorphic": the
// unimodular-candidate search, and direct character-table matching.
struct C4Report {
    PairEcho pair;
    SearchResult search;
    bool iso_exists = false;
    bool tables_identical = false;
    Verdict verdict = Verdict::pass;
    std::string witness;
};

C4Report verify_c4(const IsoContext& ctx, const SearchOptions& opt, PairEcho echo);

// Is there a column bijection preserving class sizes and a row bijection
// making the two tables equal entry-wise? Degree-one twists are subsumed:
// twisting by a linear character permutes the irreducible characters.
bool tables_identical_by_matching(const CharTable& t, const CharTable& tp);

}  // namespace zcenter
