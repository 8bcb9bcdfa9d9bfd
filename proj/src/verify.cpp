#include "zcenter/verify.hpp"

#include <algorithm>
#include <sstream>

#include "zcenter/errors.hpp"

namespace zcenter {

namespace {

std::string sigma_str(const std::vector<int>& sigma) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
    os << ']';
    return os.str();
}

std::vector<int> mapped_support(const MonomialData& md, const std::vector<int>& support) {
    std::vector<int> out;
    out.reserve(support.size());
    for (int i : support) out.push_back(md.pi[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "unknown";
}

PairEcho make_echo(const IsoContext& ctx, std::string name_g, std::string name_gp) {
    PairEcho e;
    e.name_g = std::move(name_g);
    e.name_gp = std::move(name_gp);
    e.order_g = ctx.g.group.order();
    e.order_gp = ctx.gp.group.order();
    e.h_g = ctx.g.algebra.h;
    e.h_gp = ctx.gp.algebra.h;
    return e;
}

CscReport verify_csc(const IsoContext& ctx, const SearchOptions& opt, PairEcho echo) {
    CscReport r;
    r.pair = std::move(echo);
    r.search = search_integral_isomorphisms(ctx, opt);
    for (const auto& c : r.search.candidates) {
        bool mono = c.monomial.has_value();
        bool deg = degree_preservation(ctx, c);
        if (mono != deg) {
            r.verdict = Verdict::fail;
            std::ostringstream os;
            os << "sigma=" << sigma_str(c.sigma) << " monomial=" << (mono ? "yes" : "no")
               << " degree_preserving=" << (deg ? "yes" : "no");
            r.witness = os.str();
            return r;
        }
    }
    return r;
}

QuotientSquareReport verify_quotient_square(const IsoContext& ctx, const IsoCandidate& c,
                             const SubgroupSet& n, const SubgroupSet& np) {
    QuotientSquareReport r;
    if (!c.monomial || !check_normalized(ctx, c))
        throw hypothesis_violated("quotient square requires a normalized monomial candidate");
    const auto& md = *c.monomial;

    auto support = support_in_subgroup(ctx.g.algebra, n);
    auto support_p = support_in_subgroup(ctx.gp.algebra, np);
    if (mapped_support(md, support) != support_p) {
        r.verdict = Verdict::hypothesis_not_met;
        r.witness = "candidate does not map the subgroup classes onto the partner's";
        return r;
    }

    r.subgroup_order = n.size();
    r.subgroup_order_p = np.size();
    if (n.size() != np.size()) {
        r.verdict = Verdict::fail;
        r.witness = "matched normal subgroups have different orders";
        return r;
    }

    // Image of the subgroup sum: N-hat psi must equal N'-hat.
    auto nhat = subgroup_sum_image(ctx.g.algebra, n);
    auto nphat = subgroup_sum_image(ctx.gp.algebra, np);
    {
        const int h = ctx.g.algebra.h;
        std::vector<CycNum> image(h, CycNum::integer(0));
        for (int j = 0; j < h; ++j)
            for (int i = 0; i < h; ++i) image[j] += nhat.coeff[i] * c.a[i][j];
        for (int j = 0; j < h; ++j)
            if (!(image[j] == nphat.coeff[j])) {
                r.verdict = Verdict::fail;
                r.witness = "subgroup sum image differs from the partner subgroup sum";
                return r;
            }
    }

    auto [qg, proj] = quotient_group(ctx.g.group, n);
    auto [qgp, proj_p] = quotient_group(ctx.gp.group, np);
    IsoContext qctx = make_iso_context(compute_center_data(std::move(qg)),
                                       compute_center_data(std::move(qgp)));
    r.quotient_classes = qctx.g.algebra.h;
    auto pmat = quotient_map(ctx.g.algebra, proj, qctx.g.algebra);
    auto pmat_p = quotient_map(ctx.gp.algebra, proj_p, qctx.gp.algebra);

    // Induced matrix on the quotient centers: row i of A * P' equals m_i times
    // the row of A-bar at the image class, uniformly over each fiber.
    const int h = ctx.g.algebra.h;
    const int hq = qctx.g.algebra.h;
    const int hqp = qctx.gp.algebra.h;
    std::vector<std::vector<CycNum>> abar(hq, std::vector<CycNum>(hqp, CycNum::integer(0)));
    std::vector<char> have(hq, 0);
    for (int i = 0; i < h; ++i) {
        int k = -1;
        long mult = 0;
        for (int kk = 0; kk < hq; ++kk)
            if (pmat[i][kk] != 0) {
                k = kk;
                mult = pmat[i][kk];
                break;
            }
        std::vector<CycNum> row(hqp, CycNum::integer(0));
        for (int jq = 0; jq < hqp; ++jq) {
            CycNum s = CycNum::integer(0);
            for (int j = 0; j < h; ++j)
                if (pmat_p[j][jq] != 0) s += c.a[i][j].scaled(Int(pmat_p[j][jq]), Int(1));
            row[jq] = s.scaled(Int(1), Int(mult));
        }
        if (!have[k]) {
            abar[k] = row;
            have[k] = 1;
        } else {
            for (int jq = 0; jq < hqp; ++jq)
                if (!(abar[k][jq] == row[jq])) {
                    r.verdict = Verdict::fail;
                    r.witness = "projection of the candidate is not constant on a quotient class";
                    return r;
                }
        }
    }

    // Commuting square: A * P' = P * A-bar.
    for (int i = 0; i < h; ++i)
        for (int jq = 0; jq < hqp; ++jq) {
            CycNum lhs = CycNum::integer(0);
            for (int j = 0; j < h; ++j)
                if (pmat_p[j][jq] != 0) lhs += c.a[i][j].scaled(Int(pmat_p[j][jq]), Int(1));
            CycNum rhs = CycNum::integer(0);
            for (int k = 0; k < hq; ++k)
                if (pmat[i][k] != 0) rhs += abar[k][jq].scaled(Int(pmat[i][k]), Int(1));
            if (!(lhs == rhs)) {
                r.verdict = Verdict::fail;
                r.witness = "quotient square does not commute";
                return r;
            }
        }

    // The induced map must itself be a normalized candidate on the quotients.
    try {
        IsoCandidate cbar = candidate_from_matrix(qctx, abar);
        if (!cbar.normalized) {
            r.verdict = Verdict::fail;
            r.witness = "induced quotient candidate is not normalized";
        }
    } catch (const internal_error& e) {
        r.verdict = Verdict::fail;
        r.witness = std::string("induced quotient map is not an isomorphism candidate: ") + e.what();
    }
    return r;
}

NilpotentReport verify_nilpotent_theorem(const IsoContext& ctx, const SearchOptions& opt,
                                         PairEcho echo) {
    if (!is_nilpotent(ctx.g.group)) throw not_nilpotent(echo.name_g);
    if (!is_nilpotent(ctx.gp.group)) throw not_nilpotent(echo.name_gp);

    NilpotentReport r;
    r.pair = std::move(echo);
    r.search = search_integral_isomorphisms(ctx, opt);

    for (const auto& c : r.search.candidates) {
        if (!c.monomial || !degree_preservation(ctx, c)) {
            r.verdict = Verdict::fail;
            r.witness = "sigma=" + sigma_str(c.sigma) + " is not monomial and degree-preserving";
            return r;
        }
    }

    // Upper-central-series supports must correspond for normalized candidates.
    auto series = upper_central_series(ctx.g.group);
    auto series_p = upper_central_series(ctx.gp.group);
    while (series.size() < series_p.size()) series.push_back(series.back());
    while (series_p.size() < series.size()) series_p.push_back(series_p.back());
    for (const auto& c : r.search.candidates) {
        if (!check_normalized(ctx, c)) continue;
        for (size_t nidx = 0; nidx < series.size(); ++nidx) {
            auto sup = support_in_subgroup(ctx.g.algebra, series[nidx]);
            auto sup_p = support_in_subgroup(ctx.gp.algebra, series_p[nidx]);
            if (mapped_support(*c.monomial, sup) != sup_p) {
                r.verdict = Verdict::fail;
                std::ostringstream os;
                os << "sigma=" << sigma_str(c.sigma) << " breaks the class support of term "
                   << nidx << " of the upper central series";
                r.witness = os.str();
                return r;
            }
        }
    }

    // Size-one class sums are central units of finite order: their images
    // must again be size-one class sums scaled by a root of unity.
    for (const auto& c : r.search.candidates) {
        for (int i = 0; i < ctx.g.algebra.h; ++i) {
            if (ctx.g.algebra.sizes[i] != 1) continue;
            int col = -1;
            bool ok = true;
            for (int j = 0; j < ctx.gp.algebra.h && ok; ++j) {
                if (c.a[i][j].is_zero()) continue;
                if (col >= 0)
                    ok = false;
                else
                    col = j;
            }
            ok = ok && col >= 0 && ctx.gp.algebra.sizes[col] == 1 &&
                 c.a[i][col].root_of_unity_order().has_value();
            if (!ok) {
                r.verdict = Verdict::fail;
                std::ostringstream os;
                os << "sigma=" << sigma_str(c.sigma) << " maps central class " << i
                   << " to a non-central image";
                r.witness = os.str();
                return r;
            }
        }
    }
    return r;
}

bool tables_identical_by_matching(const CharTable& t, const CharTable& tp) {
    if (t.h != tp.h || t.group_order != tp.group_order) return false;
    const int h = t.h;
    {
        auto d1 = t.degrees, d2 = tp.degrees;
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        if (d1 != d2) return false;
        auto s1 = t.sizes, s2 = tp.sizes;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }

    // Column fingerprints: class size plus the sorted multiset of values.
    auto column_key = [](const CharTable& tab, int j) {
        std::vector<CycNum> vals;
        vals.reserve(tab.h);
        for (int l = 0; l < tab.h; ++l) vals.push_back(tab.x[l][j]);
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    std::vector<std::vector<int>> column_options(h);
    for (int j = 0; j < h; ++j) {
        auto key = column_key(t, j);
        for (int jp = 0; jp < h; ++jp) {
            if (t.sizes[j] != tp.sizes[jp]) continue;
            if (column_key(tp, jp) == key) column_options[j].push_back(jp);
        }
        if (column_options[j].empty()) return false;
    }

    // With the column bijection fixed, a row bijection exists exactly when the
    // re-indexed rows of one table form the same multiset as the other's rows.
    std::vector<std::vector<CycNum>> rows_p(h);
    for (int l = 0; l < h; ++l) rows_p[l] = tp.x[l];
    std::sort(rows_p.begin(), rows_p.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            int c = CycNum::cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    std::vector<int> kappa(h, -1);
    std::vector<char> used(h, 0);
    auto match = [&](auto&& self, int j) -> bool {
        if (j == h) {
            std::vector<std::vector<CycNum>> rows(h, std::vector<CycNum>(h));
            for (int l = 0; l < h; ++l)
                for (int jj = 0; jj < h; ++jj) rows[l][kappa[jj]] = t.x[l][jj];
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                for (size_t i = 0; i < a.size(); ++i) {
                    int c = CycNum::cmp(a[i], b[i]);
                    if (c != 0) return c < 0;
                }
                return false;
            });
            for (int l = 0; l < h; ++l)
                for (int jj = 0; jj < h; ++jj)
                    if (!(rows[l][jj] == rows_p[l][jj])) return false;
            return true;
        }
        for (int jp : column_options[j]) {
            if (used[jp]) continue;
            used[jp] = 1;
            kappa[j] = jp;
            if (self(self, j + 1)) return true;
            used[jp] = 0;
        }
        kappa[j] = -1;
        return false;
    };
    return match(match, 0);
}

C4Report verify_c4(const IsoContext& ctx, const SearchOptions& opt, PairEcho echo) {
    if (!is_nilpotent(ctx.g.group)) throw not_nilpotent(echo.name_g);
    if (!is_nilpotent(ctx.gp.group)) throw not_nilpotent(echo.name_gp);

    C4Report r;
    r.pair = std::move(echo);
    if (ctx.compatible) r.search = search_integral_isomorphisms(ctx, opt);
    r.iso_exists = !r.search.candidates.empty();
    r.tables_identical = tables_identical_by_matching(ctx.g.table, ctx.gp.table);
    if (r.iso_exists != r.tables_identical) {
        r.verdict = Verdict::fail;
        r.witness = std::string("search says ") + (r.iso_exists ? "isomorphic" : "non-isomorphic") +
                    " but table matching says " + (r.tables_identical ? "identical" : "different");
    }
    return r;
}

}  // namespace zcenter
