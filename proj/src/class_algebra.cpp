#include "zcenter/class_algebra.hpp"

#include <atomic>

#include "zcenter/errors.hpp"

namespace zcenter {

namespace {

std::atomic<int> next_algebra_id{1};

void check_same_algebra(const ClassAlgebra& a, const CentralElement& x) {
    if (x.algebra_id != a.algebra_id || (int)x.coeff.size() != a.h)
        throw internal_error("central element does not belong to this algebra");
}

}  // namespace

ClassAlgebra structure_constants(const FiniteGroup& g, const ClassPartition& p) {
    ClassAlgebra a;
    a.algebra_id = next_algebra_id.fetch_add(1);
    a.h = p.h;
    a.group_order = g.order();
    a.conductor = g.exponent();
    a.sizes = p.sizes;
    a.classes = p;
    a.inv_class.resize(p.h);
    for (int i = 0; i < p.h; ++i) a.inv_class[i] = p.class_of[g.inv(p.rep[i])];

    const long n = g.order();
    a.c.assign((size_t)p.h * p.h * p.h, Int(0));
    std::vector<long> count((size_t)n, 0);
    std::vector<int> touched;
    touched.reserve((size_t)n);

    for (int i = 0; i < p.h; ++i) {
        for (int j = 0; j < p.h; ++j) {
            touched.clear();
            for (int x : p.classes[i]) {
                for (int y : p.classes[j]) {
                    int z = g.mul(x, y);
                    if (count[z]++ == 0) touched.push_back(z);
                }
            }
            // The pair count is a class function of the product: every member
            // of a class must be hit equally often, and the hits must account
            // for all |C_i||C_j| products.
            long total = 0;
            for (int z : touched) {
                long m = count[z];
                long k = p.class_of[z];
                if (m != count[p.rep[k]])
                    throw internal_error("structure constant not constant on a class");
                total += m;
            }
            if (total != (long)p.sizes[i] * p.sizes[j])
                throw internal_error("structure constant counts do not cover all products");
            for (int k = 0; k < p.h; ++k)
                a.c[((size_t)i * p.h + j) * p.h + k] = Int(count[p.rep[k]]);
            for (int z : touched) count[z] = 0;
        }
    }

    for (int j = 0; j < p.h; ++j)
        for (int k = 0; k < p.h; ++k)
            if (a.sc(0, j, k) != Int(j == k ? 1 : 0))
                throw internal_error("identity class is not a multiplicative unit");
    for (int i = 0; i < p.h; ++i)
        for (int j = 0; j < p.h; ++j)
            for (int k = 0; k < p.h; ++k)
                if (a.sc(i, j, k) != a.sc(j, i, k))
                    throw internal_error("class multiplication is not commutative");
    return a;
}

CentralElement zero_element(const ClassAlgebra& a) {
    CentralElement x;
    x.algebra_id = a.algebra_id;
    x.coeff.assign(a.h, CycNum::integer(0));
    return x;
}

CentralElement unit_element(const ClassAlgebra& a) {
    CentralElement x = zero_element(a);
    x.coeff[0] = CycNum::integer(1);
    return x;
}

CentralElement class_sum(const ClassAlgebra& a, int i) {
    if (i < 0 || i >= a.h) throw internal_error("class index out of range");
    CentralElement x = zero_element(a);
    x.coeff[i] = CycNum::integer(1);
    return x;
}

CentralElement make_central(const ClassAlgebra& a, std::vector<CycNum> coeff) {
    if ((int)coeff.size() != a.h)
        throw internal_error("coefficient vector has wrong length");
    CentralElement x;
    x.algebra_id = a.algebra_id;
    x.coeff = std::move(coeff);
    return x;
}

CentralElement add(const ClassAlgebra& a, const CentralElement& x, const CentralElement& y) {
    check_same_algebra(a, x);
    check_same_algebra(a, y);
    CentralElement z = zero_element(a);
    for (int i = 0; i < a.h; ++i) z.coeff[i] = x.coeff[i] + y.coeff[i];
    return z;
}

CentralElement multiply(const ClassAlgebra& a, const CentralElement& x, const CentralElement& y) {
    check_same_algebra(a, x);
    check_same_algebra(a, y);
    CentralElement z = zero_element(a);
    for (int i = 0; i < a.h; ++i) {
        if (x.coeff[i].is_zero()) continue;
        for (int j = 0; j < a.h; ++j) {
            if (y.coeff[j].is_zero()) continue;
            CycNum prod = x.coeff[i] * y.coeff[j];
            for (int k = 0; k < a.h; ++k) {
                const Int& cijk = a.sc(i, j, k);
                if (cijk == 0) continue;
                z.coeff[k] += prod.scaled(cijk, Int(1));
            }
        }
    }
    return z;
}

CycNum augmentation(const ClassAlgebra& a, const CentralElement& x) {
    check_same_algebra(a, x);
    CycNum s = CycNum::integer(0);
    for (int i = 0; i < a.h; ++i) s += x.coeff[i].scaled(Int(a.sizes[i]), Int(1));
    return s;
}

CycNum trace1(const ClassAlgebra& a, const CentralElement& x) {
    check_same_algebra(a, x);
    return x.coeff[0];
}

CentralElement star(const ClassAlgebra& a, const CentralElement& x) {
    check_same_algebra(a, x);
    CentralElement y = zero_element(a);
    for (int j = 0; j < a.h; ++j) y.coeff[j] = x.coeff[a.inv_class[j]].conj();
    return y;
}

std::vector<int> support_in_subgroup(const ClassAlgebra& a, const SubgroupSet& n) {
    std::vector<int> support;
    for (int i = 0; i < a.h; ++i) {
        long hit = 0;
        for (int x : a.classes.classes[i])
            if (n.contains(x)) ++hit;
        if (hit == 0) continue;
        if (hit != a.sizes[i])
            throw not_class_closed("class " + std::to_string(i) +
                                   " meets the subgroup only partially");
        support.push_back(i);
    }
    return support;
}

CentralElement subgroup_sum_image(const ClassAlgebra& a, const SubgroupSet& n) {
    CentralElement x = zero_element(a);
    for (int i : support_in_subgroup(a, n)) x.coeff[i] = CycNum::integer(1);
    return x;
}

std::vector<std::vector<long>> quotient_map(const ClassAlgebra& a,
                                            const std::vector<int>& projection,
                                            const ClassAlgebra& q) {
    if ((long)projection.size() != a.group_order)
        throw internal_error("projection has wrong domain size");
    std::vector<std::vector<long>> m(a.h, std::vector<long>(q.h, 0));
    std::vector<long> hits((size_t)q.group_order, 0);
    for (int i = 0; i < a.h; ++i) {
        std::vector<int> touched;
        for (int x : a.classes.classes[i]) {
            int u = projection[x];
            if (u < 0 || u >= (int)q.group_order)
                throw internal_error("projection value out of range");
            if (hits[u]++ == 0) touched.push_back(u);
        }
        int k = q.classes.class_of[projection[a.classes.rep[i]]];
        // The image of a class is a single full quotient class, covered with
        // uniform multiplicity.
        long mult = hits[touched.front()];
        if ((long)touched.size() != q.sizes[k] || mult * q.sizes[k] != a.sizes[i])
            throw internal_error("class image does not cover a quotient class evenly");
        for (int u : touched) {
            if (q.classes.class_of[u] != k || hits[u] != mult)
                throw internal_error("class image is not uniform over a quotient class");
            hits[u] = 0;
        }
        m[i][k] = mult;
    }
    return m;
}

}  // namespace zcenter
