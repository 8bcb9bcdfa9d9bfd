#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "zcenter/iso.hpp"
#include "zcenter/verify.hpp"

namespace zcenter {

using ordered_json = nlohmann::ordered_json;

std::string engine_version();

// All reports use 0-based class and row indices throughout.
ordered_json json_group_echo(const std::string& name, const CenterData& d);
ordered_json json_pair_echo(const PairEcho& e);
ordered_json json_matrix(const std::vector<std::vector<CycNum>>& a);
ordered_json json_candidate(const IsoCandidate& c, bool full);
// limit < 0 keeps every candidate record; otherwise the list is capped and
// the report notes the truncation (candidate_count is always exact).
ordered_json json_search(const SearchResult& s, bool full, long long limit = -1);

ordered_json json_classes_report(const std::string& name, const CenterData& d);
ordered_json json_chartable_report(const std::string& name, const CenterData& d);
ordered_json json_iso_report(const PairEcho& e, const CenterData& g,
                             const CenterData& gp, const SearchResult& s, bool full,
                             long long limit = -1);
ordered_json json_csc_report(const CscReport& r, bool full);
ordered_json json_nilpotent_report(const NilpotentReport& r, bool full);
ordered_json json_c4_report(const C4Report& r, bool full);
ordered_json json_quotient_square_report(const QuotientSquareReport& r);

// Wraps a command body into the common envelope (engine version, command
// echo, indexing note, optional timing in seconds).
ordered_json report_envelope(const std::string& command, ordered_json body,
                             bool with_timing, double seconds);

}  // namespace zcenter
