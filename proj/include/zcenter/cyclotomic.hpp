#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zcenter/errors.hpp"

namespace zcenter {

using Int = boost::multiprecision::cpp_int;

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Shared per-conductor data: the cyclotomic polynomial Phi_N and its degree.
// Contexts are built once and cached for the life of the process.
struct CycloContext {
    long conductor;
    long degree;                  // phi(N)
    std::vector<Int> min_poly;    // Phi_N, monic, length degree+1
};

const CycloContext& cyclo_context(long n);

// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}
// modulo Phi_N, with a single positive denominator. Canonical form:
// gcd(all numerators, denominator) = 1. The power basis is free over Q,
// so coefficient-wise equality of canonical forms decides equality.
class CycNum {
  public:
    CycNum();  // zero at conductor 1

    static CycNum integer(Int v);
    static CycNum rational(Int num, Int den);
    static CycNum zeta(long n);                  // primitive n-th root
    static CycNum zeta_power(long n, long k);    // zeta_n^k
    static CycNum from_coeffs(long n, std::vector<Int> coeffs, Int den = 1);

    long conductor() const { return conductor_; }
    const std::vector<Int>& coeffs() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const;
    bool is_one() const;

    // Coefficient map Q(zeta_N) -> Q(zeta_M) for N | M, zeta_N = zeta_M^{M/N}.
    CycNum embedded(long m) const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(const Int& num, const Int& den) const;
    CycNum pow(unsigned long e) const;

    // Complex conjugation z -> z^{N-1}; the identity on Q.
    CycNum conj() const;

    // Field automorphism z -> z^t, gcd(t, N) = 1. Throws not_coprime.
    CycNum galois(long t) const;

    std::optional<Int> as_integer() const;
    std::optional<std::pair<Int, Int>> as_rational() const;

    // Exact multiplicative-order test: succeeds iff a^k = 1 for some
    // k <= lcm(2, N), returning the least such k. Complete because the
    // roots of unity in Q(zeta_N) are exactly <-1, zeta_N>.
    std::optional<long> root_of_unity_order() const;

    CycNum abs_squared() const;  // a * conj(a)

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // Deterministic total order (arbitrary but fixed): compare at the
    // common conductor by (denominator, coefficient tuple).
    static int cmp(const CycNum& a, const CycNum& b);
    bool operator<(const CycNum& o) const { return cmp(*this, o) < 0; }

    std::string str() const;
    static CycNum parse(const std::string& text);

  private:
    long conductor_;
    std::vector<Int> num_;
    Int den_;

    void canonicalize();
    static std::pair<CycNum, CycNum> to_common(const CycNum& a, const CycNum& b);
};

}  // namespace zcenter
