#pragma once

#include <vector>

#include "zcenter/cyclotomic.hpp"

// Dense linear algebra over a small prime field F_p, sized for class-algebra
// matrices (dimension = number of conjugacy classes).
namespace zcenter::modp {

bool is_prime(long n);
long pow_mod(long b, long e, long p);
long inv_mod(long a, long p);

// Smallest prime p with p ≡ 1 (mod exponent) and p > 2*sqrt(order). Such a
// prime never divides the group order: a prime divisor of the order divides
// the exponent and therefore cannot be 1 mod it.
long splitting_prime(long order, long exponent);

// Element of multiplicative order exactly n in F_p; requires n | p-1.
long root_of_unity(long p, long n);

// Image of a cyclotomic number under zeta_m -> z, where z has order m mod p,
// v's conductor divides m, and p does not divide v's denominator.
long eval_cyclotomic(const CycNum& v, long m, long z, long p);

struct Mat {
    int rows = 0, cols = 0;
    std::vector<long> a;
    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
    long& at(int r, int c) { return a[(size_t)r * cols + c]; }
    long at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

Mat mat_mul(const Mat& x, const Mat& y, long p);

// Solve m * basis = basis * t for t, where the columns of basis are
// independent and span an m-invariant subspace.
Mat restrict_operator(const Mat& m, const Mat& basis, long p);

// Monic characteristic polynomial, coefficients low to high, computed via
// Hessenberg reduction (valid for any p, including p <= dimension).
std::vector<long> charpoly(Mat m, long p);

// Distinct roots in F_p by direct scan.
std::vector<long> distinct_roots(const std::vector<long>& poly, long p);

// Columns spanning the null space of a.
Mat kernel_basis(Mat a, long p);

long det(Mat a, long p);

}  // namespace zcenter::modp
