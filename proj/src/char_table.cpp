#include "zcenter/char_table.hpp"

#include <algorithm>

#include "zcenter/errors.hpp"
#include "zcenter/modp.hpp"

namespace zcenter {

namespace {

using modp::Mat;

// Split the common eigenspaces of the class matrices over F_p. Returns one
// column vector per central character, scaled so the identity coordinate is 1.
std::vector<std::vector<long>> central_characters_mod_p(const ClassAlgebra& a, long p) {
    int h = a.h;
    std::vector<Mat> spaces;
    {
        Mat full(h, h);
        for (int i = 0; i < h; ++i) full.at(i, i) = 1;
        spaces.push_back(full);
    }
    for (int i = 1; i < h; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.cols > 1) all_split = false;
        if (all_split) break;
        Mat mi(h, h);
        for (int j = 0; j < h; ++j)
            for (int k = 0; k < h; ++k) {
                Int r = a.sc(i, j, k) % p;
                long v = r.convert_to<long>();
                mi.at(j, k) = v < 0 ? v + p : v;
            }
        std::vector<Mat> next;
        for (auto& s : spaces) {
            if (s.cols <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            Mat t = modp::restrict_operator(mi, s, p);
            auto roots = modp::distinct_roots(modp::charpoly(t, p), p);
            int covered = 0;
            for (long lam : roots) {
                Mat shifted = t;
                for (int d = 0; d < t.rows; ++d)
                    shifted.at(d, d) = ((shifted.at(d, d) - lam) % p + p) % p;
                Mat k = modp::kernel_basis(shifted, p);
                if (k.cols == 0) continue;
                covered += k.cols;
                next.push_back(modp::mat_mul(s, k, p));
            }
            if (covered != s.cols)
                throw internal_error("class matrix failed to act semisimply mod p");
        }
        spaces = std::move(next);
    }
    std::vector<std::vector<long>> omega;
    for (const auto& s : spaces) {
        if (s.cols != 1)
            throw internal_error("common eigenspaces did not split to dimension one");
        std::vector<long> v(h);
        for (int i = 0; i < h; ++i) v[i] = s.at(i, 0);
        if (v[0] == 0) throw internal_error("central character vanishes on the identity");
        long s0 = modp::inv_mod(v[0], p);
        for (auto& e : v) e = e * s0 % p;
        omega.push_back(std::move(v));
    }
    if ((int)omega.size() != h)
        throw internal_error("wrong number of central characters");
    std::sort(omega.begin(), omega.end());
    if (std::adjacent_find(omega.begin(), omega.end()) != omega.end())
        throw internal_error("central characters are not distinct mod p");
    return omega;
}

long recover_degree(const std::vector<long>& om, const ClassAlgebra& a, long p) {
    long s = 0;
    for (int i = 0; i < a.h; ++i)
        s = (s + om[i] * om[a.inv_class[i]] % p * modp::inv_mod(a.sizes[i] % p, p)) % p;
    long target = a.group_order % p * modp::inv_mod(s, p) % p;
    long found = 0;
    for (long d = 1; d * d <= a.group_order; ++d)
        if (d * d % p == target) {
            if (found != 0) throw internal_error("degree recovery is ambiguous");
            found = d;
        }
    if (found == 0 || a.group_order % found != 0)
        throw internal_error("degree recovery failed");
    return found;
}

}  // namespace

CharTable character_table(const FiniteGroup& g, const ClassPartition& p, const ClassAlgebra& a) {
    const int h = a.h;
    const long n = a.group_order;
    const long N = a.conductor;
    const long prime = modp::splitting_prime(n, N);
    const long z = modp::root_of_unity(prime, N);

    auto omega = central_characters_mod_p(a, prime);

    // Per-class data for the lift: order of the representative and the class
    // of each of its powers.
    std::vector<long> rep_order(h);
    std::vector<std::vector<int>> power_class(h);
    for (int i = 0; i < h; ++i) {
        long r = g.element_order(p.rep[i]);
        rep_order[i] = r;
        power_class[i].resize(r);
        for (long t = 0; t < r; ++t) power_class[i][t] = p.class_of[g.power(p.rep[i], t)];
    }

    struct Row {
        long degree;
        std::vector<CycNum> values;
        std::vector<long> mod_p;  // chi mod prime, kept for the lift sanity check
    };
    std::vector<Row> rows;
    rows.reserve(h);
    for (const auto& om : omega) {
        Row row;
        row.degree = recover_degree(om, a, prime);
        row.mod_p.resize(h);
        for (int i = 0; i < h; ++i)
            row.mod_p[i] = row.degree % prime * om[i] % prime * modp::inv_mod(a.sizes[i] % prime, prime) % prime;
        row.values.resize(h);
        for (int i = 0; i < h; ++i) {
            long r = rep_order[i];
            long rinv = modp::inv_mod(r % prime, prime);
            // chi(g_i) = sum_k m_k zeta_r^k with m_k the multiplicity of the
            // eigenvalue zeta_r^k of the representing matrix; the m_k are
            // genuine machine integers in [0, degree] < prime.
            CycNum value = CycNum::integer(0);
            long msum = 0;
            for (long k = 0; k < r; ++k) {
                long mk = 0;
                for (long t = 0; t < r; ++t) {
                    long e = (k * t) % r * (N / r) % N;
                    long zpow = modp::pow_mod(z, (N - e) % N == 0 ? 0 : ((N - e) % N), prime);
                    mk = (mk + row.mod_p[power_class[i][t]] * zpow) % prime;
                }
                mk = mk * rinv % prime;
                msum += mk;
                if (mk != 0)
                    value += CycNum::zeta_power(N, (k * (N / r)) % N).scaled(Int(mk), Int(1));
            }
            if (msum != row.degree)
                throw internal_error("eigenvalue multiplicities do not sum to the degree");
            if (modp::eval_cyclotomic(value, N, z, prime) != row.mod_p[i])
                throw internal_error("lifted character value disagrees mod p");
            row.values[i] = std::move(value);
        }
        rows.push_back(std::move(row));
    }

    // Canonical order: principal first, then (degree, value tuple).
    auto value_less = [](const Row& x, const Row& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        for (int i = 0; i < (int)x.values.size(); ++i) {
            int c = CycNum::cmp(x.values[i], y.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    int principal = -1;
    for (int l = 0; l < h; ++l) {
        bool all_one = true;
        for (const auto& v : rows[l].values)
            if (!v.is_one()) {
                all_one = false;
                break;
            }
        if (all_one) {
            if (principal >= 0) throw internal_error("principal character is not unique");
            principal = l;
        }
    }
    if (principal < 0) throw internal_error("principal character is missing");
    std::swap(rows[0], rows[principal]);
    std::sort(rows.begin() + 1, rows.end(), value_less);

    CharTable t;
    t.h = h;
    t.group_order = n;
    t.conductor = N;
    t.sizes = a.sizes;
    t.inv_class = a.inv_class;
    t.degrees.reserve(h);
    for (auto& row : rows) {
        t.degrees.push_back(row.degree);
        t.x.push_back(std::move(row.values));
    }

    // Exact verification of the defining identities.
    Int degree_square_sum = 0;
    for (int l = 0; l < h; ++l) {
        if (n % t.degrees[l] != 0) throw internal_error("degree does not divide the group order");
        degree_square_sum += Int(t.degrees[l]) * Int(t.degrees[l]);
        if (!(t.x[l][0] == CycNum::integer(t.degrees[l])))
            throw internal_error("identity column disagrees with the recovered degree");
        for (int i = 0; i < h; ++i)
            if (!(t.x[l][i].conj() == t.x[l][t.inv_class[i]]))
                throw internal_error("conjugate value does not match the inverse class");
    }
    if (degree_square_sum != Int(n))
        throw internal_error("degree squares do not sum to the group order");
    for (int l = 0; l < h; ++l)
        for (int m = l; m < h; ++m) {
            CycNum s = CycNum::integer(0);
            for (int i = 0; i < h; ++i)
                s += (t.x[l][i] * t.x[m][t.inv_class[i]]).scaled(Int(t.sizes[i]), Int(1));
            if (!(s == CycNum::integer(l == m ? n : 0)))
                throw internal_error("row orthogonality fails");
        }
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            CycNum s = CycNum::integer(0);
            for (int l = 0; l < h; ++l) s += t.x[l][i] * t.x[l][t.inv_class[j]];
            CycNum expect = i == j ? CycNum::rational(Int(n), Int(t.sizes[i])) : CycNum::integer(0);
            if (!(s == expect)) throw internal_error("column orthogonality fails");
        }
    return t;
}

std::vector<int> linear_character_rows(const CharTable& t) {
    std::vector<int> rows;
    for (int l = 0; l < t.h; ++l)
        if (t.degrees[l] == 1) rows.push_back(l);
    return rows;
}

CentralElement block_idempotent(const CharTable& t, const ClassAlgebra& a, int l) {
    if (t.h != a.h || t.group_order != a.group_order)
        throw internal_error("character table does not match the algebra");
    if (l < 0 || l >= t.h) throw internal_error("character row out of range");
    CentralElement e = zero_element(a);
    for (int i = 0; i < a.h; ++i)
        e.coeff[i] = t.x[l][a.inv_class[i]].scaled(Int(t.degrees[l]), Int(t.group_order));
    return e;
}

}  // namespace zcenter
