#include "zcenter/report.hpp"

#include <limits>

namespace zcenter {

namespace {

// Integers that fit a 64-bit value are emitted as JSON numbers; anything
// larger falls back to a decimal string so the report stays exact.
ordered_json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

ordered_json int_matrix(const std::vector<std::vector<Int>>& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(int_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::string engine_version() { return "zcenter 1.0.0"; }

ordered_json json_group_echo(const std::string& name, const CenterData& d) {
    ordered_json j;
    j["name"] = name;
    j["order"] = d.algebra.group_order;
    j["class_count"] = d.algebra.h;
    j["exponent"] = d.algebra.conductor;
    return j;
}

ordered_json json_pair_echo(const PairEcho& e) {
    ordered_json j;
    j["g"] = {{"name", e.name_g}, {"order", e.order_g}, {"class_count", e.h_g}};
    j["g_prime"] = {{"name", e.name_gp}, {"order", e.order_gp}, {"class_count", e.h_gp}};
    return j;
}

ordered_json json_matrix(const std::vector<std::vector<CycNum>>& a) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : a) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json json_candidate(const IsoCandidate& c, bool full) {
    ordered_json j;
    j["sigma"] = c.sigma;
    j["integral"] = c.integral;
    j["unimodular"] = c.unimodular;
    j["normalized"] = c.normalized;
    j["degree_preserving"] = c.degree_preserving;
    j["trace_preserving"] = c.trace_preserving;
    j["monomial"] = c.monomial.has_value();
    if (full) {
        j["matrix"] = json_matrix(c.a);
        if (c.integral) j["matrix_integer"] = int_matrix(c.a_int);
        if (c.monomial) {
            const MonomialData& m = *c.monomial;
            ordered_json xi = ordered_json::array();
            for (const auto& v : m.xi) xi.push_back(v.str());
            j["monomial_data"] = {{"pi", m.pi},
                                  {"xi", std::move(xi)},
                                  {"xi_order", m.xi_order},
                                  {"lambda_row", m.lambda_row}};
        }
    }
    return j;
}

ordered_json json_search(const SearchResult& s, bool full, long long limit) {
    ordered_json j;
    j["compatible"] = s.compatible;
    j["space_size"] = s.space_size;
    j["candidate_count"] = s.candidates.size();
    std::size_t shown = s.candidates.size();
    if (limit >= 0 && shown > (std::size_t)limit) shown = (std::size_t)limit;
    j["candidates_truncated"] = shown < s.candidates.size();
    ordered_json list = ordered_json::array();
    for (std::size_t k = 0; k < shown; ++k)
        list.push_back(json_candidate(s.candidates[k], full));
    j["candidates"] = std::move(list);
    return j;
}

ordered_json json_classes_report(const std::string& name, const CenterData& d) {
    ordered_json j;
    j["group"] = json_group_echo(name, d);
    ordered_json classes = ordered_json::array();
    for (int i = 0; i < d.classes.h; ++i) {
        ordered_json c;
        c["index"] = i;
        c["size"] = d.classes.sizes[i];
        c["representative"] = d.classes.rep[i];
        c["representative_order"] = d.group.element_order(d.classes.rep[i]);
        c["inverse_class"] = d.algebra.inv_class[i];
        c["members"] = d.classes.classes[i];
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    ordered_json sc = ordered_json::array();
    for (int i = 0; i < d.algebra.h; ++i) {
        ordered_json plane = ordered_json::array();
        for (int jj = 0; jj < d.algebra.h; ++jj) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < d.algebra.h; ++k)
                row.push_back(int_to_json(d.algebra.sc(i, jj, k)));
            plane.push_back(std::move(row));
        }
        sc.push_back(std::move(plane));
    }
    j["structure_constants"] = std::move(sc);
    return j;
}

ordered_json json_chartable_report(const std::string& name, const CenterData& d) {
    ordered_json j;
    j["group"] = json_group_echo(name, d);
    j["conductor"] = d.table.conductor;
    j["class_sizes"] = d.table.sizes;
    ordered_json orders = ordered_json::array();
    for (int i = 0; i < d.classes.h; ++i)
        orders.push_back(d.group.element_order(d.classes.rep[i]));
    j["representative_orders"] = std::move(orders);
    j["degrees"] = d.table.degrees;
    j["rows"] = json_matrix(d.table.x);
    ordered_json idem = ordered_json::array();
    for (int l = 0; l < d.table.h; ++l) {
        CentralElement e = block_idempotent(d.table, d.algebra, l);
        ordered_json coeffs = ordered_json::array();
        for (const auto& v : e.coeff) coeffs.push_back(v.str());
        idem.push_back(std::move(coeffs));
    }
    j["block_idempotents"] = std::move(idem);
    return j;
}

ordered_json json_iso_report(const PairEcho& e, const CenterData& g,
                             const CenterData& gp, const SearchResult& s, bool full,
                             long long limit) {
    ordered_json j;
    j["pair"] = json_pair_echo(e);
    bool nil_g = is_nilpotent(g.group);
    bool nil_gp = is_nilpotent(gp.group);
    j["nilpotent"] = {{"g", nil_g}, {"g_prime", nil_gp}};
    j["search"] = json_search(s, full, limit);
    bool all_monomial = true, all_deg = true;
    for (const auto& c : s.candidates) {
        all_monomial = all_monomial && c.monomial.has_value();
        all_deg = all_deg && c.degree_preserving;
    }
    j["all_monomial"] = all_monomial;
    j["all_degree_preserving"] = all_deg;
    if (!(nil_g && nil_gp) && !s.candidates.empty()) {
        // For non-nilpotent inputs monomiality is not guaranteed; surface the
        // per-candidate outcome prominently.
        ordered_json open = ordered_json::array();
        for (const auto& c : s.candidates)
            open.push_back({{"sigma", c.sigma},
                            {"monomial", c.monomial.has_value()},
                            {"degree_preserving", c.degree_preserving}});
        j["non_nilpotent_candidate_summary"] = std::move(open);
    }
    return j;
}

namespace {

ordered_json verdict_body(const PairEcho& pair, const SearchResult& search,
                          Verdict verdict, const std::string& witness, bool full) {
    ordered_json j;
    j["pair"] = json_pair_echo(pair);
    j["search"] = json_search(search, full);
    j["verdict"] = verdict_name(verdict);
    j["witness"] = witness.empty() ? ordered_json(nullptr) : ordered_json(witness);
    return j;
}

}  // namespace

ordered_json json_csc_report(const CscReport& r, bool full) {
    return verdict_body(r.pair, r.search, r.verdict, r.witness, full);
}

ordered_json json_nilpotent_report(const NilpotentReport& r, bool full) {
    return verdict_body(r.pair, r.search, r.verdict, r.witness, full);
}

ordered_json json_c4_report(const C4Report& r, bool full) {
    ordered_json j;
    j["pair"] = json_pair_echo(r.pair);
    j["search"] = json_search(r.search, full);
    j["center_isomorphism_exists"] = r.iso_exists;
    j["character_tables_identical"] = r.tables_identical;
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness.empty() ? ordered_json(nullptr) : ordered_json(r.witness);
    return j;
}

ordered_json json_quotient_square_report(const QuotientSquareReport& r) {
    ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness.empty() ? ordered_json(nullptr) : ordered_json(r.witness);
    j["subgroup_order"] = r.subgroup_order;
    j["subgroup_order_p"] = r.subgroup_order_p;
    j["quotient_classes"] = r.quotient_classes;
    return j;
}

ordered_json report_envelope(const std::string& command, ordered_json body,
                             bool with_timing, double seconds) {
    ordered_json j;
    j["engine"] = engine_version();
    j["command"] = command;
    j["indexing"] = "0-based";
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    if (with_timing)
        j["timing"] = {{"seconds", seconds}};
    else
        j["timing"] = nullptr;
    return j;
}

}  // namespace zcenter
