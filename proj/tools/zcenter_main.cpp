#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zcenter/builtin.hpp"
#include "zcenter/char_table.hpp"
#include "zcenter/errors.hpp"
#include "zcenter/group_spec.hpp"
#include "zcenter/iso.hpp"
#include "zcenter/report.hpp"
#include "zcenter/verify.hpp"

namespace {

using namespace zcenter;

struct Options {
    std::string json_path;
    long long budget = 10'000'000;
    int threads = 1;
    bool all = false;
    bool timing = false;
    bool extended = false;
};

void emit_report(const ordered_json& report, const Options& o) {
    std::string text = report.dump(2);
    text += '\n';
    std::cout << text << std::flush;
    if (!o.json_path.empty()) {
        std::ofstream out(o.json_path, std::ios::binary);
        if (!out) throw parse_error("cannot write report file: " + o.json_path);
        out << text;
    }
}

int finish(const std::string& command, ordered_json body, const Options& o,
           std::chrono::steady_clock::time_point t0, int code) {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit_report(report_envelope(command, std::move(body), o.timing, secs), o);
    return code;
}

int verdict_code(Verdict v) { return v == Verdict::fail ? 1 : 0; }

IsoContext context_for(const std::string& a, const std::string& b) {
    CenterData g = compute_center_data(group_from_arg(a));
    CenterData gp = compute_center_data(group_from_arg(b));
    return make_iso_context(std::move(g), std::move(gp));
}

int run_classes(const std::string& arg, const Options& o,
                std::chrono::steady_clock::time_point t0) {
    CenterData d = compute_center_data(group_from_arg(arg));
    return finish("classes " + arg, json_classes_report(arg, d), o, t0, 0);
}

int run_chartable(const std::string& arg, const Options& o,
                  std::chrono::steady_clock::time_point t0) {
    CenterData d = compute_center_data(group_from_arg(arg));
    return finish("chartable " + arg, json_chartable_report(arg, d), o, t0, 0);
}

int run_iso(const std::string& a, const std::string& b, const Options& o,
            std::chrono::steady_clock::time_point t0) {
    IsoContext ctx = context_for(a, b);
    PairEcho echo = make_echo(ctx, a, b);
    SearchResult s = search_integral_isomorphisms(ctx, {o.budget, o.threads});
    long long limit = o.all ? -1 : 25;
    return finish("iso " + a + " " + b,
                  json_iso_report(echo, ctx.g, ctx.gp, s, true, limit), o, t0, 0);
}

int run_verify_csc(const std::string& a, const std::string& b, const Options& o,
                   std::chrono::steady_clock::time_point t0) {
    IsoContext ctx = context_for(a, b);
    CscReport r = verify_csc(ctx, {o.budget, o.threads}, make_echo(ctx, a, b));
    return finish("verify-csc " + a + " " + b, json_csc_report(r, false), o, t0,
                  verdict_code(r.verdict));
}

int run_verify_nilpotent(const std::string& a, const std::string& b, const Options& o,
                         std::chrono::steady_clock::time_point t0) {
    IsoContext ctx = context_for(a, b);
    NilpotentReport r =
        verify_nilpotent_theorem(ctx, {o.budget, o.threads}, make_echo(ctx, a, b));
    return finish("verify-nilpotent " + a + " " + b, json_nilpotent_report(r, false), o,
                  t0, verdict_code(r.verdict));
}

int run_verify_c4(const std::string& a, const std::string& b, const Options& o,
                  std::chrono::steady_clock::time_point t0) {
    IsoContext ctx = context_for(a, b);
    C4Report r = verify_c4(ctx, {o.budget, o.threads}, make_echo(ctx, a, b));
    return finish("verify-c4 " + a + " " + b, json_c4_report(r, false), o, t0,
                  verdict_code(r.verdict));
}

// ---------------------------------------------------------------------------
// selftest: library-wide invariant suites over the builtin corpus.

struct CheckLog {
    int passed = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok)
            ++passed;
        else
            failures.push_back(what);
    }
};

bool cyc_eq(const CycNum& a, const CycNum& b) { return CycNum::cmp(a, b) == 0; }

// Deterministic small coefficients for the algebra spot checks.
std::vector<CycNum> pseudo_random_coeffs(const ClassAlgebra& a, unsigned seed) {
    std::vector<CycNum> v(a.h);
    unsigned long long state = 0x9E3779B97F4A7C15ull * (seed + 1);
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int i = 0; i < a.h; ++i) {
        long c0 = (long)(next() % 5) - 2;
        v[i] = CycNum::integer(c0);
        if (a.conductor > 1 && next() % 3 == 0) {
            long c1 = (long)(next() % 3) - 1;
            long k = 1 + (long)(next() % (unsigned long long)a.conductor);
            v[i] = v[i] + CycNum::zeta_power(a.conductor, k).scaled(Int(c1), Int(1));
        }
    }
    return v;
}

void selftest_group_core(const CenterData& d, CheckLog& log) {
    const FiniteGroup& g = d.group;
    const ClassPartition& p = d.classes;
    int n = g.order();

    bool conj_ok = true;
    for (int t = 0; t < n && conj_ok; ++t)
        for (int x = 0; x < n; ++x)
            if (p.class_of[g.conjugate(t, x)] != p.class_of[x]) {
                conj_ok = false;
                break;
            }
    log.expect(conj_ok, "conjugation permutes the classes");

    bool cent_ok = true;
    for (int x = 0; x < n && cent_ok; ++x) {
        long cent = 0;
        for (int y = 0; y < n; ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++cent;
        if (p.sizes[p.class_of[x]] * cent != n) cent_ok = false;
    }
    log.expect(cent_ok, "class size times centralizer order equals the group order");

    auto series = upper_central_series(g);
    bool ucs_ok = !series.empty() && series.front().size() == 1;
    for (std::size_t k = 0; k + 1 < series.size() && ucs_ok; ++k) {
        if (series[k + 1].size() <= series[k].size()) ucs_ok = false;
        for (int e : series[k].elements)
            if (!series[k + 1].contains(e)) ucs_ok = false;
    }
    for (const auto& term : series) {
        try {
            make_subgroup(g, term.elements, true);
        } catch (const error&) {
            ucs_ok = false;
        }
    }
    if (series.size() > 1) {
        std::vector<int> size_one;
        for (int i = 0; i < p.h; ++i)
            if (p.sizes[i] == 1) size_one.push_back(p.rep[i]);
        std::sort(size_one.begin(), size_one.end());
        ucs_ok = ucs_ok && size_one == series[1].elements;
    }
    log.expect(ucs_ok, "upper central series is an increasing chain of normal "
                       "subgroups starting at the size-one classes");

    SubgroupSet z = center_elements(g);
    if (z.size() > 1 && z.size() < n) {
        auto [q, proj] = quotient_group(g, z);
        ClassPartition pq = conjugacy_classes(q);
        bool onto_ok = true;
        std::vector<char> covered(pq.h, 0);
        for (int i = 0; i < p.h && onto_ok; ++i) {
            int target = pq.class_of[proj[p.rep[i]]];
            covered[target] = 1;
            for (int e : p.classes[i])
                if (pq.class_of[proj[e]] != target) onto_ok = false;
        }
        for (char c : covered) onto_ok = onto_ok && c;
        log.expect(onto_ok, "projection maps classes onto quotient classes");
    }
}

void selftest_class_algebra(const CenterData& d, CheckLog& log) {
    const ClassAlgebra& a = d.algebra;
    for (unsigned seed = 0; seed < 3; ++seed) {
        CentralElement x = make_central(a, pseudo_random_coeffs(a, 2 * seed));
        CentralElement y = make_central(a, pseudo_random_coeffs(a, 2 * seed + 1));
        CentralElement xy = multiply(a, x, y);

        CentralElement sx = star(a, x);
        bool inv_ok = true;
        CentralElement ssx = star(a, sx);
        for (int i = 0; i < a.h; ++i)
            inv_ok = inv_ok && cyc_eq(ssx.coeff[i], x.coeff[i]);
        log.expect(inv_ok, "star is an involution");

        CentralElement sxy = star(a, xy);
        CentralElement sx_sy = multiply(a, sx, star(a, y));
        bool hom_ok = true;
        for (int i = 0; i < a.h; ++i)
            hom_ok = hom_ok && cyc_eq(sxy.coeff[i], sx_sy.coeff[i]);
        log.expect(hom_ok, "star is multiplicative");

        CycNum lhs = trace1(a, multiply(a, x, star(a, y)));
        CycNum rhs = CycNum::integer(0);
        for (int i = 0; i < a.h; ++i)
            rhs = rhs + (x.coeff[i] * y.coeff[i].conj()).scaled(Int(a.sizes[i]), Int(1));
        log.expect(cyc_eq(lhs, rhs), "trace form matches the weighted inner product");

        log.expect(cyc_eq(augmentation(a, xy),
                          augmentation(a, x) * augmentation(a, y)),
                   "augmentation is multiplicative");
    }
}

void selftest_char_table(const CenterData& d, CheckLog& log) {
    const ClassAlgebra& a = d.algebra;
    const CharTable& t = d.table;

    std::vector<CentralElement> idem;
    idem.reserve(t.h);
    for (int l = 0; l < t.h; ++l) idem.push_back(block_idempotent(t, a, l));

    bool orth_ok = true;
    for (int l = 0; l < t.h && orth_ok; ++l)
        for (int m = 0; m <= l && orth_ok; ++m) {
            CentralElement prod = multiply(a, idem[l], idem[m]);
            for (int i = 0; i < a.h; ++i) {
                const CycNum& want = (l == m) ? idem[l].coeff[i] : CycNum::integer(0);
                if (!cyc_eq(prod.coeff[i], want)) orth_ok = false;
            }
        }
    log.expect(orth_ok, "block idempotents are orthogonal idempotents");

    CentralElement sum = zero_element(a);
    for (const auto& e : idem) sum = add(a, sum, e);
    CentralElement one = unit_element(a);
    bool sum_ok = true;
    for (int i = 0; i < a.h; ++i) sum_ok = sum_ok && cyc_eq(sum.coeff[i], one.coeff[i]);
    log.expect(sum_ok, "block idempotents sum to the identity");

    bool omega_ok = true;
    std::vector<std::vector<CycNum>> omega(t.h, std::vector<CycNum>(t.h));
    for (int l = 0; l < t.h; ++l)
        for (int i = 0; i < t.h; ++i)
            omega[l][i] = t.at(l, i).scaled(Int(a.sizes[i]), Int(t.degrees[l]));
    for (int l = 0; l < t.h && omega_ok; ++l)
        for (int i = 0; i < t.h && omega_ok; ++i)
            for (int j = 0; j < t.h; ++j) {
                CycNum rhs = CycNum::integer(0);
                for (int k = 0; k < t.h; ++k)
                    rhs = rhs + omega[l][k].scaled(a.sc(i, j, k), Int(1));
                if (!cyc_eq(omega[l][i] * omega[l][j], rhs)) {
                    omega_ok = false;
                    break;
                }
            }
    log.expect(omega_ok, "central characters are algebra homomorphisms");

    auto row_key = [&t](const std::vector<CycNum>& row) {
        std::vector<std::string> k;
        k.reserve(t.h);
        for (const auto& v : row) k.push_back(v.str());
        return k;
    };
    std::set<std::vector<std::string>> rows;
    for (const auto& row : t.x) rows.insert(row_key(row));
    bool galois_ok = true;
    for (long u = 2; u < t.conductor; ++u) {
        if (std::gcd(u, t.conductor) != 1) continue;
        for (const auto& row : t.x) {
            std::vector<CycNum> tw;
            tw.reserve(t.h);
            for (const auto& v : row) tw.push_back(v.galois(u));
            if (!rows.count(row_key(tw))) galois_ok = false;
        }
    }
    log.expect(galois_ok, "Galois conjugation permutes the rows");

    long commutator = commutator_subgroup(d.group).size();
    log.expect((long)linear_character_rows(t).size() * commutator == t.group_order,
               "number of degree-one rows equals the abelianization order");
}

int run_selftest(const Options& o, std::chrono::steady_clock::time_point t0) {
    ordered_json groups = ordered_json::array();
    bool all_ok = true;
    for (const std::string& name : builtin_corpus(o.extended)) {
        CenterData d = compute_center_data(group_by_name(name));
        CheckLog log;
        selftest_group_core(d, log);
        selftest_class_algebra(d, log);
        selftest_char_table(d, log);
        ordered_json j;
        j["name"] = name;
        j["order"] = d.algebra.group_order;
        j["class_count"] = d.algebra.h;
        j["checks_passed"] = log.passed;
        j["failures"] = log.failures;
        all_ok = all_ok && log.failures.empty();
        groups.push_back(std::move(j));
    }
    ordered_json body;
    body["groups"] = std::move(groups);
    body["all_passed"] = all_ok;
    return finish(o.extended ? "selftest --extended" : "selftest", std::move(body), o,
                  t0, all_ok ? 0 : 1);
}

// ---------------------------------------------------------------------------
// corpus: the full verification sweep, optionally over extra spec files.

int run_corpus(const std::string& dir, const Options& o,
               std::chrono::steady_clock::time_point t0) {
    SearchOptions sopt{o.budget, o.threads};
    bool all_ok = true;
    ordered_json pairs = ordered_json::array();

    for (const auto& [na, nb] : nilpotent_pairs(o.extended)) {
        IsoContext ctx = context_for(na, nb);
        PairEcho echo = make_echo(ctx, na, nb);
        NilpotentReport nil = verify_nilpotent_theorem(ctx, sopt, echo);
        CscReport csc = verify_csc(ctx, sopt, echo);
        C4Report c4 = verify_c4(ctx, sopt, echo);

        // Quotient square over the group centers for every normalized
        // candidate (monomial candidates, normalized first).
        int square_checks = 0;
        Verdict square = Verdict::pass;
        SubgroupSet zg = center_elements(ctx.g.group);
        SubgroupSet zgp = center_elements(ctx.gp.group);
        for (const auto& c : nil.search.candidates) {
            if (!c.monomial) continue;
            IsoCandidate cn = normalize(ctx, c);
            QuotientSquareReport nr = verify_quotient_square(ctx, cn, zg, zgp);
            ++square_checks;
            if (nr.verdict == Verdict::fail) square = Verdict::fail;
            else if (nr.verdict == Verdict::hypothesis_not_met && square == Verdict::pass)
                square = Verdict::hypothesis_not_met;
        }

        bool pair_ok = nil.verdict != Verdict::fail && csc.verdict != Verdict::fail &&
                       c4.verdict != Verdict::fail && square != Verdict::fail;
        all_ok = all_ok && pair_ok;
        ordered_json j;
        j["g"] = na;
        j["g_prime"] = nb;
        j["candidates"] = nil.search.candidates.size();
        j["nilpotent_monomiality"] = verdict_name(nil.verdict);
        j["class_sum_correspondence"] = verdict_name(csc.verdict);
        j["iso_vs_table_identity"] = verdict_name(c4.verdict);
        j["center_quotient_square"] = {{"checked", square_checks},
                                       {"verdict", verdict_name(square)}};
        pairs.push_back(std::move(j));
    }

    // The cross-validation pairs that are not part of the monomiality sweep.
    ordered_json extra = ordered_json::array();
    auto nil_pairs = nilpotent_pairs(o.extended);
    for (const auto& pr : table_identity_pairs(o.extended)) {
        if (std::find(nil_pairs.begin(), nil_pairs.end(), pr) != nil_pairs.end())
            continue;
        IsoContext ctx = context_for(pr.first, pr.second);
        C4Report c4 = verify_c4(ctx, sopt, make_echo(ctx, pr.first, pr.second));
        all_ok = all_ok && c4.verdict != Verdict::fail;
        extra.push_back({{"g", pr.first},
                         {"g_prime", pr.second},
                         {"center_isomorphism_exists", c4.iso_exists},
                         {"character_tables_identical", c4.tables_identical},
                         {"iso_vs_table_identity", verdict_name(c4.verdict)}});
    }

    // Identity pipeline over any user-provided spec files.
    ordered_json files = ordered_json::array();
    if (!dir.empty()) {
        std::vector<std::filesystem::path> paths;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                paths.push_back(entry.path());
        std::sort(paths.begin(), paths.end());
        for (const auto& path : paths) {
            CenterData d1 = compute_center_data(group_from_arg(path.string()));
            CenterData d2 = compute_center_data(group_from_arg(path.string()));
            IsoContext ctx = make_iso_context(std::move(d1), std::move(d2));
            std::vector<int> id(ctx.g.algebra.h);
            std::iota(id.begin(), id.end(), 0);
            IsoCandidate c = candidate_matrix(ctx, id);
            bool ok = c.unimodular && c.normalized && c.monomial.has_value() &&
                      c.degree_preserving && c.trace_preserving;
            all_ok = all_ok && ok;
            files.push_back({{"file", path.string()},
                             {"order", ctx.g.algebra.group_order},
                             {"class_count", ctx.g.algebra.h},
                             {"identity_candidate_ok", ok}});
        }
    }

    ordered_json body;
    body["pairs"] = std::move(pairs);
    body["cross_validation_only_pairs"] = std::move(extra);
    body["files"] = std::move(files);
    body["all_passed"] = all_ok;
    std::string cmd = "corpus";
    if (!dir.empty()) cmd += " " + dir;
    if (o.extended) cmd += " --extended";
    return finish(cmd, std::move(body), o, t0, all_ok ? 0 : 1);
}

struct EngineFailure {
    std::string type;
    std::string message;
    int code = 2;
};

}  // namespace

int main(int argc, char** argv) {
    auto t0 = std::chrono::steady_clock::now();
    Options opts;
    std::string arg_g, arg_gp, arg_dir;
    int rc = 0;

    CLI::App app{"Exact engine for centers of integral group rings: class sums, "
                 "character tables, and unimodular center isomorphisms"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto add_common = [&opts](CLI::App* sub, bool with_search) {
        sub->add_option("--json", opts.json_path, "also write the report to this file");
        sub->add_flag("--timing", opts.timing, "include wall-clock timing in the report");
        if (with_search) {
            sub->add_option("--budget", opts.budget,
                            "abort when the pruned pairing space exceeds this size")
                ->check(CLI::PositiveNumber);
            sub->add_option("--threads", opts.threads, "search worker threads")
                ->check(CLI::Range(1, 256));
        }
    };

    CLI::App* classes = app.add_subcommand("classes", "conjugacy classes and structure constants");
    classes->add_option("group", arg_g, "builtin name expression or spec file")->required();
    add_common(classes, false);
    classes->callback([&] { rc = run_classes(arg_g, opts, t0); });

    CLI::App* chartable = app.add_subcommand("chartable", "exact character table and block idempotents");
    chartable->add_option("group", arg_g, "builtin name expression or spec file")->required();
    add_common(chartable, false);
    chartable->callback([&] { rc = run_chartable(arg_g, opts, t0); });

    CLI::App* iso = app.add_subcommand("iso", "enumerate unimodular center isomorphisms");
    iso->add_option("group", arg_g, "source group")->required();
    iso->add_option("group_prime", arg_gp, "target group")->required();
    iso->add_flag("--all", opts.all, "report every candidate record (no cap)");
    add_common(iso, true);
    iso->callback([&] { rc = run_iso(arg_g, arg_gp, opts, t0); });

    CLI::App* csc = app.add_subcommand("verify-csc", "class-sum correspondence check");
    csc->add_option("group", arg_g)->required();
    csc->add_option("group_prime", arg_gp)->required();
    add_common(csc, true);
    csc->callback([&] { rc = run_verify_csc(arg_g, arg_gp, opts, t0); });

    CLI::App* nil = app.add_subcommand("verify-nilpotent", "monomiality of every candidate (nilpotent pairs)");
    nil->add_option("group", arg_g)->required();
    nil->add_option("group_prime", arg_gp)->required();
    add_common(nil, true);
    nil->callback([&] { rc = run_verify_nilpotent(arg_g, arg_gp, opts, t0); });

    CLI::App* c4 = app.add_subcommand("verify-c4", "center isomorphism vs character-table identity");
    c4->add_option("group", arg_g)->required();
    c4->add_option("group_prime", arg_gp)->required();
    add_common(c4, true);
    c4->callback([&] { rc = run_verify_c4(arg_g, arg_gp, opts, t0); });

    CLI::App* corpus = app.add_subcommand("corpus", "full verification sweep over the builtin pairs");
    corpus->add_option("dir", arg_dir, "directory of extra group spec JSON files")
        ->check(CLI::ExistingDirectory);
    corpus->add_flag("--extended", opts.extended, "include the order-27 pair");
    add_common(corpus, true);
    corpus->callback([&] { rc = run_corpus(arg_dir, opts, t0); });

    CLI::App* selftest = app.add_subcommand("selftest", "library invariant suites over the builtin corpus");
    selftest->add_flag("--extended", opts.extended, "include the order-27 groups");
    add_common(selftest, false);
    selftest->callback([&] { rc = run_selftest(opts, t0); });

    EngineFailure failure;
    bool failed = false;
    try {
        app.parse(argc, argv);
        return rc;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const search_space_exceeded& e) {
        failure = {"search_space_exceeded", e.what(), 3};
        failed = true;
    } catch (const internal_error& e) {
        failure = {"internal_error", e.what(), 1};
        failed = true;
    } catch (const not_nilpotent& e) {
        failure = {"not_nilpotent", e.what(), 2};
        failed = true;
    } catch (const not_a_group& e) {
        failure = {"not_a_group", e.what(), 2};
        failed = true;
    } catch (const unknown_name& e) {
        failure = {"unknown_name", e.what(), 2};
        failed = true;
    } catch (const parse_error& e) {
        failure = {"parse_error", e.what(), 2};
        failed = true;
    } catch (const error& e) {
        failure = {"input_error", e.what(), 2};
        failed = true;
    } catch (const std::exception& e) {
        failure = {"unexpected_error", e.what(), 1};
        failed = true;
    }

    if (failed) {
        ordered_json body;
        body["error"] = {{"type", failure.type}, {"message", failure.message}};
        std::string cmd;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) cmd += ' ';
            cmd += argv[i];
        }
        try {
            emit_report(report_envelope(cmd, std::move(body), false, 0.0), opts);
        } catch (const std::exception&) {
            std::cerr << failure.type << ": " << failure.message << "\n";
        }
        return failure.code;
    }
    return rc;
}
