#include "zcenter/modp.hpp"

#include <cmath>

#include "zcenter/errors.hpp"

namespace zcenter::modp {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long pow_mod(long b, long e, long p) {
    b %= p;
    if (b < 0) b += p;
    long r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long inv_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw internal_error("division by zero mod p");
    return pow_mod(a, p - 2, p);
}

long splitting_prime(long order, long exponent) {
    if (order < 1 || exponent < 1) throw internal_error("bad splitting_prime arguments");
    double bound = 2.0 * std::sqrt((double)order);
    for (long p = exponent + 1;; p += exponent) {
        if ((double)p > bound && is_prime(p)) return p;
    }
}

long root_of_unity(long p, long n) {
    if ((p - 1) % n != 0) throw internal_error("no root of unity of this order mod p");
    std::vector<long> prime_factors;
    long m = n;
    for (long d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long a = 1; a < p; ++a) {
        long z = pow_mod(a, (p - 1) / n, p);
        bool exact = true;
        for (long q : prime_factors)
            if (pow_mod(z, n / q, p) == 1) {
                exact = false;
                break;
            }
        if (exact) return z;
    }
    throw internal_error("no primitive root of unity found");
}

long eval_cyclotomic(const CycNum& v, long m, long z, long p) {
    if (m % v.conductor() != 0) throw internal_error("conductor does not divide modulus order");
    long e = m / v.conductor();
    long num = 0;
    const auto& cs = v.coeffs();
    for (size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        Int r = cs[k] % p;
        long rl = r.convert_to<long>();
        if (rl < 0) rl += p;
        num = (num + rl * pow_mod(z, (long)(e * (long)k % m), p)) % p;
    }
    Int dr = v.den() % p;
    long d = dr.convert_to<long>();
    if (d == 0) throw internal_error("denominator vanishes mod p");
    return num * inv_mod(d, p) % p;
}

Mat mat_mul(const Mat& x, const Mat& y, long p) {
    if (x.cols != y.rows) throw internal_error("matrix shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = (z.at(i, j) + v * y.at(k, j)) % p;
        }
    return z;
}

Mat restrict_operator(const Mat& m, const Mat& basis, long p) {
    Mat image = mat_mul(m, basis, p);
    // Gaussian elimination on [basis | image]; basis columns are independent,
    // so every image column has unique coordinates.
    int n = basis.rows, d = basis.cols;
    Mat aug(n, d + image.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) aug.at(i, j) = basis.at(i, j);
        for (int j = 0; j < image.cols; ++j) aug.at(i, d + j) = image.at(i, j);
    }
    int row = 0;
    std::vector<int> pivot_row(d, -1);
    for (int col = 0; col < d && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (aug.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) throw internal_error("basis columns are dependent");
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.a[(size_t)pr * aug.cols + j], aug.a[(size_t)row * aug.cols + j]);
        long iv = inv_mod(aug.at(row, col), p);
        for (int j = 0; j < aug.cols; ++j) aug.at(row, j) = aug.at(row, j) * iv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            long f = aug.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < aug.cols; ++j)
                aug.at(r, j) = ((aug.at(r, j) - f * aug.at(row, j)) % p + p) % p;
        }
        pivot_row[col] = row;
        ++row;
    }
    for (int r = row; r < n; ++r)
        for (int j = d; j < aug.cols; ++j)
            if (aug.at(r, j) != 0) throw internal_error("subspace is not invariant");
    Mat t(d, image.cols);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < image.cols; ++j) t.at(i, j) = aug.at(pivot_row[i], d + j);
    return t;
}

std::vector<long> charpoly(Mat m, long p) {
    if (m.rows != m.cols) throw internal_error("charpoly of non-square matrix");
    int n = m.rows;
    // Similarity reduction to upper Hessenberg form.
    for (int j = 0; j + 2 < n; ++j) {
        int pr = -1;
        for (int r = j + 1; r < n; ++r)
            if (m.at(r, j) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(m.a[(size_t)pr * n + c], m.a[(size_t)(j + 1) * n + c]);
            for (int r = 0; r < n; ++r) std::swap(m.a[(size_t)r * n + pr], m.a[(size_t)r * n + j + 1]);
        }
        long piv_inv = inv_mod(m.at(j + 1, j), p);
        for (int i = j + 2; i < n; ++i) {
            long f = m.at(i, j) * piv_inv % p;
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) m.at(i, c) = ((m.at(i, c) - f * m.at(j + 1, c)) % p + p) % p;
            for (int r = 0; r < n; ++r) m.at(r, j + 1) = (m.at(r, j + 1) + f * m.at(r, i)) % p;
        }
    }
    // Leading-principal-minor recurrence for Hessenberg matrices.
    std::vector<std::vector<long>> q(n + 1);
    q[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const auto& prev = q[k - 1];
        std::vector<long> cur(k + 1, 0);
        long diag = m.at(k - 1, k - 1) % p;
        for (int t = 0; t < (int)prev.size(); ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % p;
            cur[t] = ((cur[t] - diag * prev[t]) % p + p) % p;
        }
        long prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = prod * m.at(i, i - 1) % p;
            long f = m.at(i - 1, k - 1) * prod % p;
            if (f == 0) continue;
            const auto& pm = q[i - 1];
            for (int t = 0; t < (int)pm.size(); ++t)
                cur[t] = ((cur[t] - f * pm[t]) % p + p) % p;
        }
        q[k] = std::move(cur);
    }
    return q[n];
}

std::vector<long> distinct_roots(const std::vector<long>& poly, long p) {
    std::vector<long> roots;
    for (long x = 0; x < p; ++x) {
        long v = 0;
        for (int i = (int)poly.size() - 1; i >= 0; --i) v = (v * x + poly[i]) % p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

Mat kernel_basis(Mat a, long p) {
    int n = a.rows, c = a.cols;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(c, false);
    int row = 0;
    for (int col = 0; col < c && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (a.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < c; ++j) std::swap(a.a[(size_t)pr * c + j], a.a[(size_t)row * c + j]);
        long iv = inv_mod(a.at(row, col), p);
        for (int j = 0; j < c; ++j) a.at(row, j) = a.at(row, j) * iv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            long f = a.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < c; ++j) a.at(r, j) = ((a.at(r, j) - f * a.at(row, j)) % p + p) % p;
        }
        is_pivot[col] = true;
        pivot_col_of_row.push_back(col);
        ++row;
    }
    int free_count = 0;
    for (int col = 0; col < c; ++col)
        if (!is_pivot[col]) ++free_count;
    Mat k(c, free_count);
    int out = 0;
    for (int col = 0; col < c; ++col) {
        if (is_pivot[col]) continue;
        k.at(col, out) = 1;
        for (int r = 0; r < (int)pivot_col_of_row.size(); ++r) {
            long v = a.at(r, col);
            if (v != 0) k.at(pivot_col_of_row[r], out) = (p - v) % p;
        }
        ++out;
    }
    return k;
}

long det(Mat a, long p) {
    if (a.rows != a.cols) throw internal_error("determinant of non-square matrix");
    int n = a.rows;
    long d = 1;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return 0;
        if (pr != col) {
            for (int j = 0; j < n; ++j) std::swap(a.a[(size_t)pr * n + j], a.a[(size_t)col * n + j]);
            d = p - d;
        }
        d = d * a.at(col, col) % p;
        long iv = inv_mod(a.at(col, col), p);
        for (int r = col + 1; r < n; ++r) {
            long f = a.at(r, col) * iv % p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a.at(r, j) = ((a.at(r, j) - f * a.at(col, j)) % p + p) % p;
        }
    }
    return d % p;
}

}  // namespace zcenter::modp
