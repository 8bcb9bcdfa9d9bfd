#pragma once

#include <vector>

#include "zcenter/class_algebra.hpp"
#include "zcenter/cyclotomic.hpp"
#include "zcenter/group.hpp"

namespace zcenter {

// Ordinary character table with exact cyclotomic entries. Rows are ordered
// canonically: the principal character first, then ascending by degree with
// ties broken by the lexicographic order of the value tuple. Columns follow
// the canonical conjugacy-class order.
struct CharTable {
    int h = 0;
    long group_order = 0;
    long conductor = 1;  // group exponent; every entry lives in Q(zeta_conductor)
    std::vector<long> degrees;
    std::vector<std::vector<CycNum>> x;  // x[row][class]
    std::vector<long> sizes;
    std::vector<int> inv_class;

    const CycNum& at(int row, int cls) const { return x[row][cls]; }
};

// Dixon's modular method: split common eigenspaces of the class matrices over
// F_p, recover degrees, then lift each value exactly as a non-negative integer
// combination of roots of unity. Orthogonality is re-checked exactly.
CharTable character_table(const FiniteGroup& g, const ClassPartition& p, const ClassAlgebra& a);

// Row indices of the degree-one characters.
std::vector<int> linear_character_rows(const CharTable& t);

// e_l = (chi_l(1)/|G|) * sum_i chi_l(g_i^{-1}) C_i as a central element.
CentralElement block_idempotent(const CharTable& t, const ClassAlgebra& a, int l);

}  // namespace zcenter
