#include "zcenter/iso.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "zcenter/errors.hpp"
#include "zcenter/modp.hpp"

namespace zcenter {

namespace {

// Coefficient vector of the block idempotent e_l in the class-sum basis.
std::vector<CycNum> idempotent_coeffs(const CharTable& t, int l) {
    std::vector<CycNum> v(t.h);
    for (int i = 0; i < t.h; ++i)
        v[i] = t.x[l][t.inv_class[i]].scaled(Int(t.degrees[l]), Int(t.group_order));
    return v;
}

// Minimal generating set of the unit group of Z/m, found greedily.
std::vector<long> unit_group_generators(long m) {
    if (m <= 2) return {};
    std::vector<long> gens;
    std::vector<char> reached(m, 0);
    reached[1] = 1;
    long have = 1, want = euler_phi(m);
    for (long t = 2; t < m && have < want; ++t) {
        if (gcd_long(t, m) != 1 || reached[t]) continue;
        gens.push_back(t);
        // Re-close under all generators from scratch (m is tiny).
        std::fill(reached.begin(), reached.end(), 0);
        reached[1] = 1;
        std::vector<long> queue{1};
        have = 1;
        while (!queue.empty()) {
            long x = queue.back();
            queue.pop_back();
            for (long g : gens) {
                long y = x * g % m;
                if (!reached[y]) {
                    reached[y] = 1;
                    ++have;
                    queue.push_back(y);
                }
            }
        }
    }
    return gens;
}

void check_sigma(const IsoContext& ctx, const std::vector<int>& sigma) {
    int h = ctx.g.algebra.h;
    if ((int)sigma.size() != h) throw internal_error("pairing has wrong length");
    std::vector<char> seen(h, 0);
    for (int m : sigma) {
        if (m < 0 || m >= h || seen[m]) throw internal_error("pairing is not a permutation");
        seen[m] = 1;
    }
}

bool prefilter_pass(const IsoContext& ctx, const std::vector<int>& sigma) {
    const int h = ctx.g.algebra.h;
    const long p = ctx.prime;
    modp::Mat base(h, h);
    for (size_t t = 0; t < ctx.twists.size(); ++t) {
        const auto& up = ctx.u_p[t];
        const auto& wp = ctx.w_p[t];
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) {
                long v = 0;
                for (int l = 0; l < h; ++l) v = (v + up[i][l] * wp[sigma[l]][j]) % p;
                if (t == 0)
                    base.at(i, j) = v;
                else if (v != base.at(i, j))
                    return false;
            }
    }
    long d = modp::det(base, p);
    return d == 1 || d == p - 1;
}

}  // namespace

CenterData compute_center_data(FiniteGroup g) {
    CenterData d;
    d.group = std::move(g);
    d.classes = conjugacy_classes(d.group);
    d.algebra = structure_constants(d.group, d.classes);
    d.table = character_table(d.group, d.classes, d.algebra);
    return d;
}

IsoContext make_iso_context(CenterData g, CenterData gp) {
    IsoContext ctx;
    ctx.g = std::move(g);
    ctx.gp = std::move(gp);
    ctx.compatible = ctx.g.group.order() == ctx.gp.group.order() &&
                     ctx.g.algebra.h == ctx.gp.algebra.h;
    if (!ctx.compatible) return ctx;

    const int h = ctx.g.algebra.h;
    const long n = ctx.g.group.order();
    ctx.conductor = lcm_long(ctx.g.table.conductor, ctx.gp.table.conductor);

    ctx.u.assign(h, std::vector<CycNum>(h));
    ctx.w.assign(h, std::vector<CycNum>(h));
    for (int i = 0; i < h; ++i)
        for (int l = 0; l < h; ++l)
            ctx.u[i][l] = ctx.g.table.x[l][ctx.g.algebra.inv_class[i]]
                              .scaled(Int(ctx.g.algebra.sizes[i]),
                                      Int(ctx.g.table.degrees[l]) * n)
                              .embedded(ctx.conductor);
    for (int m = 0; m < h; ++m)
        for (int j = 0; j < h; ++j)
            ctx.w[m][j] = ctx.gp.table.x[m][j]
                              .scaled(Int(ctx.gp.table.degrees[m]), Int(1))
                              .embedded(ctx.conductor);

    ctx.allowed.assign(h, std::vector<char>(h, 0));
    for (int l = 0; l < h; ++l)
        for (int m = 0; m < h; ++m) {
            long d = ctx.g.table.degrees[l], dp = ctx.gp.table.degrees[m];
            ctx.allowed[l][m] = (dp * dp) % d == 0 && (d * d) % dp == 0;
        }

    ctx.prime = modp::splitting_prime(n, ctx.conductor);
    ctx.zroot = modp::root_of_unity(ctx.prime, ctx.conductor);
    ctx.twists = {1};
    for (long t : unit_group_generators(ctx.conductor)) ctx.twists.push_back(t);
    ctx.u_p.resize(ctx.twists.size());
    ctx.w_p.resize(ctx.twists.size());
    for (size_t t = 0; t < ctx.twists.size(); ++t) {
        long zt = modp::pow_mod(ctx.zroot, ctx.twists[t], ctx.prime);
        ctx.u_p[t].assign(h, std::vector<long>(h));
        ctx.w_p[t].assign(h, std::vector<long>(h));
        for (int i = 0; i < h; ++i)
            for (int l = 0; l < h; ++l)
                ctx.u_p[t][i][l] = modp::eval_cyclotomic(ctx.u[i][l], ctx.conductor, zt, ctx.prime);
        for (int m = 0; m < h; ++m)
            for (int j = 0; j < h; ++j)
                ctx.w_p[t][m][j] = modp::eval_cyclotomic(ctx.w[m][j], ctx.conductor, zt, ctx.prime);
    }
    return ctx;
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pr = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return 0;
            std::swap(m[k], m[pr]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

std::optional<MonomialData> is_monomial(const IsoContext& ctx,
                                        const std::vector<std::vector<CycNum>>& a) {
    const int h = ctx.g.algebra.h;
    MonomialData md;
    md.pi.assign(h, -1);
    md.xi.assign(h, CycNum::integer(0));
    md.xi_order.assign(h, 0);
    std::vector<char> hit(h, 0);
    for (int i = 0; i < h; ++i) {
        int col = -1;
        for (int j = 0; j < h; ++j) {
            if (a[i][j].is_zero()) continue;
            if (col >= 0) return std::nullopt;
            col = j;
        }
        if (col < 0) return std::nullopt;
        auto ord = a[i][col].root_of_unity_order();
        if (!ord) return std::nullopt;
        if (hit[col]) throw internal_error("monomial rows collide on a column");
        hit[col] = 1;
        md.pi[i] = col;
        md.xi[col] = a[i][col].conj();  // inverse of a root of unity
    }
    for (int j = 0; j < h; ++j) md.xi_order[j] = *md.xi[j].root_of_unity_order();
    for (int m : linear_character_rows(ctx.gp.table)) {
        bool match = true;
        for (int j = 0; j < h && match; ++j)
            if (!(ctx.gp.table.x[m][j] == md.xi[j])) match = false;
        if (match) {
            md.lambda_row = m;
            break;
        }
    }
    if (md.lambda_row < 0)
        throw internal_error("monomial coefficients do not form a linear character");
    return md;
}

IsoCandidate candidate_matrix(const IsoContext& ctx, const std::vector<int>& sigma) {
    if (!ctx.compatible)
        throw internal_error("candidate construction requires equal order and class count");
    check_sigma(ctx, sigma);
    const int h = ctx.g.algebra.h;
    const auto& t = ctx.g.table;
    const auto& tp = ctx.gp.table;

    IsoCandidate c;
    c.sigma = sigma;
    c.a.assign(h, std::vector<CycNum>(h));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            CycNum s = CycNum::integer(0);
            for (int l = 0; l < h; ++l) s += ctx.u[i][l] * ctx.w[sigma[l]][j];
            c.a[i][j] = std::move(s);
        }

    // X A = M X', row by row: sum_k chi_l(g_k) a_kj = (d'_{sigma l}/d_l) chi'_{sigma l}(g'_j).
    for (int l = 0; l < h; ++l)
        for (int j = 0; j < h; ++j) {
            CycNum lhs = CycNum::integer(0);
            for (int k = 0; k < h; ++k) lhs += t.x[l][k] * c.a[k][j];
            CycNum rhs = tp.x[sigma[l]][j].scaled(Int(tp.degrees[sigma[l]]), Int(t.degrees[l]));
            if (!(lhs == rhs)) throw internal_error("candidate matrix violates X A = M X'");
        }

    c.integral = true;
    c.a_int.assign(h, std::vector<Int>(h));
    for (int i = 0; i < h && c.integral; ++i)
        for (int j = 0; j < h; ++j) {
            auto v = c.a[i][j].as_integer();
            if (!v) {
                c.integral = false;
                c.a_int.clear();
                break;
            }
            c.a_int[i][j] = *v;
        }
    if (c.integral) {
        Int d = integer_determinant(c.a_int);
        c.unimodular = d == 1 || d == -1;
    }

    c.degree_preserving = true;
    for (int l = 0; l < h; ++l)
        if (t.degrees[l] != tp.degrees[sigma[l]]) {
            c.degree_preserving = false;
            break;
        }

    c.trace_preserving = true;
    for (int i = 0; i < h; ++i)
        if (!(c.a[i][0] == CycNum::integer(i == 0 ? 1 : 0))) {
            c.trace_preserving = false;
            break;
        }

    c.normalized = true;
    for (int i = 0; i < h; ++i) {
        CycNum s = CycNum::integer(0);
        for (int j = 0; j < h; ++j) s += c.a[i][j].scaled(Int(ctx.gp.algebra.sizes[j]), Int(1));
        if (!(s == CycNum::integer(ctx.g.algebra.sizes[i]))) {
            c.normalized = false;
            break;
        }
    }

    c.monomial = is_monomial(ctx, c.a);
    return c;
}

IsoCandidate candidate_from_matrix(const IsoContext& ctx,
                                   const std::vector<std::vector<CycNum>>& a) {
    if (!ctx.compatible)
        throw internal_error("candidate construction requires equal order and class count");
    const int h = ctx.g.algebra.h;
    std::vector<std::vector<CycNum>> targets(h);
    for (int m = 0; m < h; ++m) targets[m] = idempotent_coeffs(ctx.gp.table, m);
    std::vector<int> sigma(h, -1);
    std::vector<char> taken(h, 0);
    for (int l = 0; l < h; ++l) {
        auto v = idempotent_coeffs(ctx.g.table, l);
        std::vector<CycNum> image(h, CycNum::integer(0));
        for (int j = 0; j < h; ++j)
            for (int i = 0; i < h; ++i) image[j] += v[i] * a[i][j];
        for (int m = 0; m < h; ++m) {
            if (taken[m]) continue;
            bool eq = true;
            for (int j = 0; j < h && eq; ++j)
                if (!(image[j] == targets[m][j])) eq = false;
            if (eq) {
                sigma[l] = m;
                taken[m] = 1;
                break;
            }
        }
        if (sigma[l] < 0)
            throw internal_error("matrix does not permute the block idempotents");
    }
    IsoCandidate c = candidate_matrix(ctx, sigma);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (!(c.a[i][j] == a[i][j]))
                throw internal_error("matrix is not the candidate of its idempotent pairing");
    return c;
}

IsoCandidate normalize(const IsoContext& ctx, const IsoCandidate& c) {
    if (!c.monomial)
        throw not_monomial("normalize requires a monomial candidate");
    const int h = ctx.g.algebra.h;
    const auto& lambda = ctx.gp.table.x[c.monomial->lambda_row];
    std::vector<std::vector<CycNum>> b(h, std::vector<CycNum>(h));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) b[i][j] = c.a[i][j] * lambda[j];
    IsoCandidate r = candidate_from_matrix(ctx, b);
    if (!r.normalized || !r.monomial)
        throw internal_error("normalization did not produce a normalized monomial candidate");
    for (int i = 0; i < h; ++i)
        if (!r.a[i][r.monomial->pi[i]].is_one())
            throw internal_error("normalized monomial candidate is not a class-sum permutation");
    return r;
}

bool check_normalized(const IsoContext& ctx, const IsoCandidate& c) {
    const int h = ctx.g.algebra.h;
    for (int i = 0; i < h; ++i) {
        CycNum s = CycNum::integer(0);
        for (int j = 0; j < h; ++j) s += c.a[i][j].scaled(Int(ctx.gp.algebra.sizes[j]), Int(1));
        if (!(s == CycNum::integer(ctx.g.algebra.sizes[i]))) return false;
    }
    return true;
}

bool check_trace_preserving(const IsoCandidate& c) {
    for (size_t i = 0; i < c.a.size(); ++i)
        if (!(c.a[i][0] == CycNum::integer(i == 0 ? 1 : 0))) return false;
    return true;
}

bool degree_preservation(const IsoContext& ctx, const IsoCandidate& c) {
    for (int l = 0; l < ctx.g.algebra.h; ++l)
        if (ctx.g.table.degrees[l] != ctx.gp.table.degrees[c.sigma[l]]) return false;
    return true;
}

bool induced_table_identity(const IsoContext& ctx, const IsoCandidate& c) {
    if (!c.monomial) throw hypothesis_violated("table identity requires a monomial candidate");
    if (!degree_preservation(ctx, c))
        throw hypothesis_violated("table identity requires a degree-preserving candidate");
    const int h = ctx.g.algebra.h;
    const auto& pi = c.monomial->pi;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            CycNum rhs = c.monomial->xi[pi[j]].conj() * ctx.gp.table.x[c.sigma[i]][pi[j]];
            if (!(ctx.g.table.x[i][j] == rhs)) return false;
        }
    return true;
}

std::optional<int> kronecker_filter(const std::vector<CycNum>& coeffs,
                                    const std::vector<long>& sizes, long target) {
    if (coeffs.size() != sizes.size())
        throw hypothesis_violated("coefficient and size vectors differ in length");
    CycNum s = CycNum::integer(0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].den() != 1)
            throw hypothesis_violated("coefficients must be algebraic integers");
        s += coeffs[i].abs_squared().scaled(Int(sizes[i]), Int(1));
    }
    if (!(s == CycNum::integer(target)))
        throw hypothesis_violated("norm sum does not equal the target class size");
    int found = -1;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero() && sizes[i] >= target) {
            found = (int)i;
            break;
        }
    if (found < 0) return std::nullopt;
    if (!coeffs[found].root_of_unity_order())
        throw internal_error("pigeonhole entry is not a root of unity");
    for (size_t i = 0; i < coeffs.size(); ++i)
        if ((int)i != found && !coeffs[i].is_zero())
            throw internal_error("pigeonhole image has extra support");
    return found;
}

bool galois_twist_check(const IsoContext& ctx, const IsoCandidate& c, long t) {
    const int h = ctx.g.algebra.h;
    std::vector<int> it(h), jt(h);
    for (int i = 0; i < h; ++i) {
        it[i] = ctx.g.classes.class_of[ctx.g.group.power(ctx.g.classes.rep[i], t)];
        if (ctx.g.algebra.sizes[it[i]] != ctx.g.algebra.sizes[i])
            throw internal_error("power map changed a class size");
    }
    for (int j = 0; j < h; ++j)
        jt[j] = ctx.gp.classes.class_of[ctx.gp.group.power(ctx.gp.classes.rep[j], t)];
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (!(c.a[i][j].galois(t) == c.a[it[i]][jt[j]])) return false;
    return true;
}

std::vector<std::vector<CycNum>> gram_form(const IsoContext& ctx, const IsoCandidate& c) {
    const int h = ctx.g.algebra.h;
    const long n = ctx.g.group.order();
    std::vector<std::vector<CycNum>> gram(h, std::vector<CycNum>(h, CycNum::integer(0)));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            CycNum s = CycNum::integer(0);
            for (int k = 0; k < h; ++k)
                s += (c.a[i][k] * c.a[j][k].conj()).scaled(Int(ctx.gp.algebra.sizes[k]), Int(1));
            gram[i][j] = std::move(s);
        }
    // Direct expansion of the same form through the character sums.
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            CycNum s = CycNum::integer(0);
            for (int l = 0; l < h; ++l) {
                long dp = ctx.gp.table.degrees[c.sigma[l]];
                long d = ctx.g.table.degrees[l];
                CycNum term = ctx.g.table.x[l][ctx.g.algebra.inv_class[i]] * ctx.g.table.x[l][j];
                s += term.scaled(Int(ctx.g.algebra.sizes[i]) * ctx.g.algebra.sizes[j] * dp * dp,
                                 Int(n) * d * d);
            }
            if (!(s == gram[i][j]))
                throw internal_error("Gram matrix disagrees with its character expansion");
        }
    return gram;
}

unsigned long long pruned_space_size(const IsoContext& ctx) {
    if (!ctx.compatible) return 0;
    const int h = ctx.g.algebra.h;
    if (h <= 20) {
        // Permanent of the allowed matrix by subset dynamic programming.
        std::vector<unsigned long long> dp((size_t)1 << h, 0);
        dp[0] = 1;
        for (size_t mask = 0; mask + 1 < dp.size(); ++mask) {
            if (dp[mask] == 0) continue;
            int row = __builtin_popcountll(mask);
            for (int m = 0; m < h; ++m)
                if (ctx.allowed[row][m] && !(mask >> m & 1)) dp[mask | (1ull << m)] += dp[mask];
        }
        return dp.back();
    }
    // Saturating product upper bound; anything this large exceeds any
    // realistic budget anyway.
    unsigned long long bound = 1;
    for (int l = 0; l < h; ++l) {
        unsigned long long row = 0;
        for (int m = 0; m < h; ++m) row += ctx.allowed[l][m];
        if (row == 0) return 0;
        if (bound > ~0ull / row) return ~0ull;
        bound *= row;
    }
    return bound;
}

namespace {

// Exact early-exit scan: rows 1..h-1 first (row 0 is always the first unit
// vector), bailing at the first non-integer entry. Most pairings die on their
// first entry, so this keeps the full candidate build for near-hits only.
bool integral_prescan(const IsoContext& ctx, const std::vector<int>& sigma) {
    const int h = ctx.g.algebra.h;
    for (int step = 0; step < h; ++step) {
        int i = (step + 1) % h;
        for (int j = 0; j < h; ++j) {
            CycNum s = CycNum::integer(0);
            for (int l = 0; l < h; ++l) s += ctx.u[i][l] * ctx.w[sigma[l]][j];
            if (!s.as_integer()) return false;
        }
    }
    return true;
}

void dfs_sigma(const IsoContext& ctx, std::vector<int>& sigma, std::vector<char>& used,
               int level, std::vector<IsoCandidate>& out) {
    const int h = ctx.g.algebra.h;
    if (level == h) {
        if (!prefilter_pass(ctx, sigma)) return;
        if (!integral_prescan(ctx, sigma)) return;
        IsoCandidate c = candidate_matrix(ctx, sigma);
        if (c.unimodular) out.push_back(std::move(c));
        return;
    }
    for (int m = 0; m < h; ++m) {
        if (used[m] || !ctx.allowed[level][m]) continue;
        used[m] = 1;
        sigma[level] = m;
        dfs_sigma(ctx, sigma, used, level + 1, out);
        used[m] = 0;
    }
    sigma[level] = -1;
}

}  // namespace

SearchResult search_integral_isomorphisms(const IsoContext& ctx, const SearchOptions& opt) {
    SearchResult res;
    res.compatible = ctx.compatible;
    if (!ctx.compatible) return res;
    res.space_size = pruned_space_size(ctx);
    if (opt.budget >= 0 && res.space_size > (unsigned long long)opt.budget)
        throw search_space_exceeded("pruned pairing space of size " +
                                    std::to_string(res.space_size) +
                                    " exceeds the budget " +
                                    std::to_string(opt.budget));

    const int h = ctx.g.algebra.h;
    const int prefix_len = std::min(2, h);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> partial;
        std::vector<char> used(h, 0);
        auto collect = [&](auto&& self, int level) -> void {
            if (level == prefix_len) {
                prefixes.push_back(partial);
                return;
            }
            for (int m = 0; m < h; ++m) {
                if (used[m] || !ctx.allowed[level][m]) continue;
                used[m] = 1;
                partial.push_back(m);
                self(self, level + 1);
                partial.pop_back();
                used[m] = 0;
            }
        };
        collect(collect, 0);
    }

    int nthreads = std::max(1, opt.threads);
    nthreads = std::min<int>(nthreads, std::max<size_t>(1, prefixes.size()));
    std::vector<std::vector<IsoCandidate>> found(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);
    auto work = [&](int tid) {
        try {
            std::vector<int> sigma(h, -1);
            std::vector<char> used(h, 0);
            for (size_t idx = tid; idx < prefixes.size(); idx += nthreads) {
                for (int l = 0; l < prefix_len; ++l) {
                    sigma[l] = prefixes[idx][l];
                    used[sigma[l]] = 1;
                }
                dfs_sigma(ctx, sigma, used, prefix_len, found[tid]);
                for (int l = 0; l < prefix_len; ++l) used[prefixes[idx][l]] = 0;
            }
        } catch (...) {
            errors[tid] = std::current_exception();
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (auto& part : found)
        for (auto& c : part) res.candidates.push_back(std::move(c));
    std::sort(res.candidates.begin(), res.candidates.end(),
              [](const IsoCandidate& x, const IsoCandidate& y) { return x.sigma < y.sigma; });
    return res;
}

}  // namespace zcenter
