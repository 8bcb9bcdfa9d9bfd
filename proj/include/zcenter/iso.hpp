#pragma once

#include <optional>
#include <vector>

#include "zcenter/char_table.hpp"
#include "zcenter/class_algebra.hpp"
#include "zcenter/cyclotomic.hpp"
#include "zcenter/group.hpp"

namespace zcenter {

// Everything derived from one group that the engine needs: classes, the
// class algebra, and the exact character table.
struct CenterData {
    FiniteGroup group;
    ClassPartition classes;
    ClassAlgebra algebra;
    CharTable table;
};

CenterData compute_center_data(FiniteGroup g);

// Certificate that a candidate maps every class sum to a root of unity times
// a class sum: C_i psi = xi_{pi(i)}^{-1} C'_{pi(i)}, and j -> xi_j is a linear
// character of G' (lambda_row indexes it in the target table).
struct MonomialData {
    std::vector<int> pi;        // class permutation, source class -> target class
    std::vector<CycNum> xi;     // indexed by target classes; xi[pi[i]]^{-1} = A[i][pi[i]]
    std::vector<long> xi_order; // multiplicative orders of the xi
    int lambda_row = -1;        // degree-1 row of the target table with values xi
};

// A center homomorphism candidate: the character pairing sigma together with
// the unique matrix A satisfying X A = M X' (rows of A are the images of the
// class sums in the target class-sum basis), plus decided flags.
struct IsoCandidate {
    std::vector<int> sigma;
    std::vector<std::vector<CycNum>> a;
    bool integral = false;          // every entry a rational integer
    bool unimodular = false;        // integral and det = +-1
    bool normalized = false;        // compatible with the augmentations
    bool degree_preserving = false;
    bool trace_preserving = false;  // first column = first unit vector
    std::optional<MonomialData> monomial;
    std::vector<std::vector<Int>> a_int;  // present iff integral
};

// Precomputed data for one ordered pair of groups: the factor matrices of the
// character-sum formula below, the degree-based pruning graph, and a sound
// mod-p prefilter.
struct IsoContext {
    CenterData g, gp;
    bool compatible = false;  // same order and same class count
    long conductor = 1;       // lcm of the two table conductors

    // a_ij = sum_l u[i][l] * w[sigma(l)][j]
    std::vector<std::vector<CycNum>> u;  // u[i][l] = |C_i| chi_l(g_i^{-1}) / (chi_l(1) |G|)
    std::vector<std::vector<CycNum>> w;  // w[m][j] = chi'_m(1) chi'_m(g'_j)

    // allowed[l][m]: the two degree-divisibility conditions that every
    // unimodular candidate must satisfy (linear rows pair with linear rows
    // as a special case).
    std::vector<std::vector<char>> allowed;

    // Mod-p data: a prime p = 1 (mod conductor), a root of unity z of that
    // order, and the u/w images under zeta -> z^t for t = 1 and a generating
    // set of the Galois group. Rational entries look identical under every t
    // and a unimodular matrix keeps det = +-1 mod p, so filtering on these
    // two conditions never rejects a valid candidate.
    long prime = 0;
    long zroot = 0;
    std::vector<long> twists;  // twists[0] = 1, then unit-group generators
    std::vector<std::vector<std::vector<long>>> u_p;  // [t][i][l]
    std::vector<std::vector<std::vector<long>>> w_p;  // [t][m][j]
};

IsoContext make_iso_context(CenterData g, CenterData gp);

// Build the candidate of a given character pairing via the explicit
// orthogonality formula; asserts X A = M X' exactly and decides all flags.
IsoCandidate candidate_matrix(const IsoContext& ctx, const std::vector<int>& sigma);

// Recover sigma from a matrix by following the block idempotents, then
// rebuild via candidate_matrix and assert the input is reproduced.
IsoCandidate candidate_from_matrix(const IsoContext& ctx,
                                   const std::vector<std::vector<CycNum>>& a);

struct SearchOptions {
    long long budget = 10'000'000;
    int threads = 1;
};

struct SearchResult {
    bool compatible = false;
    unsigned long long space_size = 0;  // pairings surviving the degree prunes
    std::vector<IsoCandidate> candidates;  // the unimodular ones, sorted by sigma
};

// Exhaustive, complete enumeration of the unimodular candidates.
// Throws search_space_exceeded when space_size > budget.
SearchResult search_integral_isomorphisms(const IsoContext& ctx,
                                          const SearchOptions& opt = {});

unsigned long long pruned_space_size(const IsoContext& ctx);

std::optional<MonomialData> is_monomial(const IsoContext& ctx,
                                        const std::vector<std::vector<CycNum>>& a);

// Compose with the twist C'_j -> lambda'(g'_j) C'_j; the result maps class
// sums to class sums (permutation matrix) and is normalized.
IsoCandidate normalize(const IsoContext& ctx, const IsoCandidate& c);

bool check_normalized(const IsoContext& ctx, const IsoCandidate& c);
bool check_trace_preserving(const IsoCandidate& c);
bool degree_preservation(const IsoContext& ctx, const IsoCandidate& c);

// For a monomial, degree-preserving candidate: the source table equals the
// target table after the induced row/column reorderings and the degree-one
// twist. Throws hypothesis_violated when the preconditions fail.
bool induced_table_identity(const IsoContext& ctx, const IsoCandidate& c);

// Root-of-unity pigeonhole: coeffs are the target-basis coefficients of the
// image of a class sum of size `target` whose inner product is preserved
// (hypothesis checked: sum |a_i|^2 |C'_i| = target). If a nonzero entry sits
// at a class at least as large, it must be the only entry and a root of unity.
std::optional<int> kronecker_filter(const std::vector<CycNum>& coeffs,
                                    const std::vector<long>& sizes, long target);

// The Galois automorphism zeta -> zeta^t commutes with the candidate formula:
// entry-wise galois(t) equals the matrix re-indexed along the power maps
// g_i -> g_i^t, g'_j -> g'_j^t.
bool galois_twist_check(const IsoContext& ctx, const IsoCandidate& c, long t);

// A D' A^* (D' = diag of target class sizes, A^* conjugate transpose), the
// Gram matrix of the preserved bilinear form; asserted against its direct
// character-sum expansion.
std::vector<std::vector<CycNum>> gram_form(const IsoContext& ctx, const IsoCandidate& c);

// Exact determinant by fraction-free elimination.
Int integer_determinant(std::vector<std::vector<Int>> m);

}  // namespace zcenter
