#pragma once

#include <vector>

#include "zcenter/cyclotomic.hpp"
#include "zcenter/group.hpp"

namespace zcenter {

// The center of the integral group ring in its class-sum basis: integer
// structure constants c_ijk with C_i C_j = sum_k c_ijk C_k, the class-size
// vector, and the inverse-class involution.
struct ClassAlgebra {
    int algebra_id = 0;
    int h = 0;
    long group_order = 0;
    long conductor = 1;              // exponent of the group
    std::vector<long> sizes;
    std::vector<int> inv_class;      // i -> index of the class of inverses
    std::vector<Int> c;              // dense h*h*h
    ClassPartition classes;

    const Int& sc(int i, int j, int k) const {
        return c[((size_t)i * h + j) * h + k];
    }
};

ClassAlgebra structure_constants(const FiniteGroup& g, const ClassPartition& p);

struct CentralElement {
    int algebra_id = 0;
    std::vector<CycNum> coeff;
};

CentralElement zero_element(const ClassAlgebra& a);
CentralElement unit_element(const ClassAlgebra& a);
CentralElement class_sum(const ClassAlgebra& a, int i);
CentralElement make_central(const ClassAlgebra& a, std::vector<CycNum> coeff);

CentralElement add(const ClassAlgebra& a, const CentralElement& x, const CentralElement& y);
CentralElement multiply(const ClassAlgebra& a, const CentralElement& x, const CentralElement& y);
CycNum augmentation(const ClassAlgebra& a, const CentralElement& x);
CycNum trace1(const ClassAlgebra& a, const CentralElement& x);
CentralElement star(const ClassAlgebra& a, const CentralElement& x);

// Indices of the classes contained in a normal subgroup; throws
// not_class_closed if some class meets the set only partially.
std::vector<int> support_in_subgroup(const ClassAlgebra& a, const SubgroupSet& n);

// The sum over the subgroup's elements as a central element.
CentralElement subgroup_sum_image(const ClassAlgebra& a, const SubgroupSet& n);

// Matrix of the natural projection restricted to the center, rows indexed by
// classes of g, columns by classes of the quotient: row i carries a single
// entry m with C_i pi = m * Cbar.
std::vector<std::vector<long>> quotient_map(const ClassAlgebra& a,
                                            const std::vector<int>& projection,
                                            const ClassAlgebra& quotient_algebra);

}  // namespace zcenter
