#pragma once

#include <utility>
#include <vector>

#include "zcenter/errors.hpp"

namespace zcenter {

// Finite group on elements 0..n-1 with 0 the identity, stored as a
// validated Cayley table. Immutable after construction.
class FiniteGroup {
  public:
    FiniteGroup() = default;  // empty placeholder; order() == 0 until assigned

    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table);
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         long order_cap = 10000);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[(size_t)a * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conjugate(int x, int g) const { return mul(mul(x, g), inverse_[x]); }
    int power(int g, long k) const;
    long element_order(int g) const { return element_order_[g]; }
    long exponent() const { return exponent_; }
    const std::vector<int>& inverse_table() const { return inverse_; }
    const std::vector<long>& element_orders() const { return element_order_; }

  private:
    void finish_validation(bool skip_associativity);

    int n_ = 0;
    std::vector<int> table_;  // flattened n*n
    std::vector<int> inverse_;
    std::vector<long> element_order_;
    long exponent_ = 1;
};

// Conjugacy classes in canonical order: the identity class first, the rest
// by (size, minimal representative index).
struct ClassPartition {
    int h = 0;
    std::vector<std::vector<int>> classes;  // each sorted ascending
    std::vector<int> rep;                   // minimal element per class
    std::vector<long> sizes;
    std::vector<int> class_of;              // length n
};

ClassPartition conjugacy_classes(const FiniteGroup& g);

struct SubgroupSet {
    std::vector<int> elements;  // sorted, contains 0
    bool normal = false;

    bool contains(int x) const;
    long size() const { return (long)elements.size(); }
};

// Validates closure under product and inverse (and conjugation when
// `expect_normal`), throwing not_a_group / not_normal otherwise.
SubgroupSet make_subgroup(const FiniteGroup& g, std::vector<int> elements,
                          bool expect_normal);

SubgroupSet center_elements(const FiniteGroup& g);

// Z_0 = 1 < Z_1 <= ... listed while strictly increasing; the group is
// nilpotent iff the last term is the whole group.
std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);

SubgroupSet commutator_subgroup(const FiniteGroup& g);

// Cosets ordered by minimal member; second component maps each element of g
// to its coset index. Throws not_normal with a conjugation witness.
std::pair<FiniteGroup, std::vector<int>> quotient_group(const FiniteGroup& g,
                                                        const SubgroupSet& n);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace zcenter
