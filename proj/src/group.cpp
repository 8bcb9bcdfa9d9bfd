#include "zcenter/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace zcenter {

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    int n = (int)table.size();
    if (n < 1) throw not_a_group("empty Cayley table");
    g.n_ = n;
    g.table_.resize((size_t)n * n);
    for (int i = 0; i < n; ++i) {
        if ((int)table[i].size() != n)
            throw not_a_group("Cayley table is not square at row " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw not_a_group("Cayley table entry out of range at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")",
                                  i, j, -1);
            g.table_[(size_t)i * n + j] = v;
        }
    }
    g.finish_validation(false);
    return g;
}

void FiniteGroup::finish_validation(bool skip_associativity) {
    int n = n_;
    for (int i = 0; i < n; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i)
            throw not_a_group("element 0 is not an identity", i, -1, -1);
    }
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = mul(i, j);
            if (seen[v]) throw not_a_group("row " + std::to_string(i) + " repeats element " +
                                               std::to_string(v),
                                           i, j, -1);
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = mul(j, i);
            if (seen[v]) throw not_a_group("column " + std::to_string(i) + " repeats element " +
                                               std::to_string(v),
                                           j, i, -1);
            seen[v] = 1;
        }
    }
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (mul(i, j) == 0) {
                inverse_[i] = j;
                break;
            }
        if (inverse_[i] < 0) throw not_a_group("no inverse for element " + std::to_string(i), i, -1, -1);
        if (mul(inverse_[i], i) != 0)
            throw not_a_group("one-sided inverse for element " + std::to_string(i), i, -1, -1);
    }
    if (!skip_associativity) {
        auto check = [&](int a, int b, int c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw not_a_group("associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")",
                                  a, b, c);
        };
        if (n <= 64) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) check(a, b, c);
        } else {
            // Too many triples to enumerate; sample deterministically.
            std::mt19937_64 rng(0xA550C1A7ULL ^ (unsigned long long)n);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int t = 0; t < 200000; ++t) check(pick(rng), pick(rng), pick(rng));
        }
    }
    element_order_.assign(n, 0);
    exponent_ = 1;
    for (int i = 0; i < n; ++i) {
        long ord = 1;
        int acc = i;
        while (acc != 0) {
            acc = mul(acc, i);
            ++ord;
        }
        element_order_[i] = ord;
        exponent_ = std::lcm(exponent_, ord);
    }
    if (n % exponent_ != 0)
        throw internal_error("group exponent does not divide the order");
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators,
                                           long order_cap) {
    if (degree < 0) throw error("negative permutation degree");
    for (size_t s = 0; s < generators.size(); ++s) {
        const auto& p = generators[s];
        if ((int)p.size() != degree)
            throw error("generator " + std::to_string(s) + " has wrong degree");
        std::vector<char> seen(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw error("generator " + std::to_string(s) + " is not a bijection");
            seen[v] = 1;
        }
    }
    // Breadth-first closure from the identity; x*s applies x first, then s.
    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    elems.push_back(identity);
    index[identity] = 0;
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (const auto& s : generators) {
            std::vector<int> prod(degree);
            for (int pt = 0; pt < degree; ++pt) prod[pt] = s[elems[cur][pt]];
            auto [it, inserted] = index.emplace(prod, (int)elems.size());
            if (inserted) {
                if ((long)elems.size() + 1 > order_cap)
                    throw order_cap_exceeded("permutation closure exceeds order cap " +
                                             std::to_string(order_cap));
                elems.push_back(std::move(prod));
                work.push(it->second);
            }
        }
    }
    int n = (int)elems.size();
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize((size_t)n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> prod(degree);
            for (int pt = 0; pt < degree; ++pt) prod[pt] = elems[j][elems[i][pt]];
            auto it = index.find(prod);
            if (it == index.end()) throw internal_error("closure is not closed");
            g.table_[(size_t)i * n + j] = it->second;
        }
    }
    // Associativity holds for composed bijections; validate the rest.
    g.finish_validation(true);
    return g;
}

int FiniteGroup::power(int g, long k) const {
    if (k < 0) {
        g = inverse_[g];
        k = -k;
    }
    k %= element_order_[g];
    int acc = 0;
    while (k-- > 0) acc = mul(acc, g);
    return acc;
}

ClassPartition conjugacy_classes(const FiniteGroup& g) {
    int n = g.order();
    ClassPartition p;
    p.class_of.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int e = 0; e < n; ++e) {
        if (p.class_of[e] >= 0) continue;
        std::vector<int> orbit;
        std::vector<char> in_orbit(n, 0);
        for (int x = 0; x < n; ++x) {
            int c = g.conjugate(x, e);
            if (!in_orbit[c]) {
                in_orbit[c] = 1;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        int id = (int)raw.size();
        for (int m : orbit) p.class_of[m] = id;
        raw.push_back(std::move(orbit));
    }
    std::vector<int> order_ids(raw.size());
    std::iota(order_ids.begin(), order_ids.end(), 0);
    std::sort(order_ids.begin(), order_ids.end(), [&](int a, int b) {
        bool ida = raw[a][0] == 0, idb = raw[b][0] == 0;
        if (ida != idb) return ida;
        if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
        return raw[a][0] < raw[b][0];
    });
    p.h = (int)raw.size();
    p.classes.resize(p.h);
    p.rep.resize(p.h);
    p.sizes.resize(p.h);
    for (int k = 0; k < p.h; ++k) {
        p.classes[k] = std::move(raw[order_ids[k]]);
        p.rep[k] = p.classes[k][0];
        p.sizes[k] = (long)p.classes[k].size();
        for (int m : p.classes[k]) p.class_of[m] = k;
    }
    return p;
}

bool SubgroupSet::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

SubgroupSet make_subgroup(const FiniteGroup& g, std::vector<int> elements,
                          bool expect_normal) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SubgroupSet s;
    s.elements = std::move(elements);
    if (s.elements.empty() || s.elements[0] != 0)
        throw not_a_group("subgroup does not contain the identity");
    for (int a : s.elements) {
        if (!s.contains(g.inv(a)))
            throw not_a_group("subgroup not closed under inverse", a, -1, -1);
        for (int b : s.elements)
            if (!s.contains(g.mul(a, b)))
                throw not_a_group("subgroup not closed under product", a, b, -1);
    }
    if (expect_normal) {
        for (int x = 0; x < g.order(); ++x)
            for (int a : s.elements)
                if (!s.contains(g.conjugate(x, a)))
                    throw not_normal("subgroup is not normal", x, a);
        s.normal = true;
    }
    return s;
}

SubgroupSet center_elements(const FiniteGroup& g) {
    std::vector<int> z;
    for (int e = 0; e < g.order(); ++e) {
        bool central = true;
        for (int x = 0; x < g.order() && central; ++x)
            central = g.mul(e, x) == g.mul(x, e);
        if (central) z.push_back(e);
    }
    return make_subgroup(g, std::move(z), true);
}

std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g) {
    int n = g.order();
    std::vector<SubgroupSet> series;
    std::vector<char> in_z(n, 0);
    in_z[0] = 1;
    series.push_back(make_subgroup(g, {0}, true));
    for (;;) {
        // Next term: elements whose every commutator lands in the current one.
        std::vector<int> next;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                int comm = g.mul(g.mul(g.inv(e), g.inv(x)), g.mul(e, x));
                ok = in_z[comm];
            }
            if (ok) next.push_back(e);
        }
        if ((long)next.size() == series.back().size()) break;
        for (int e : next) in_z[e] = 1;
        series.push_back(make_subgroup(g, std::move(next), true));
        if (series.back().size() == n) break;
    }
    return series;
}

bool is_nilpotent(const FiniteGroup& g) {
    auto series = upper_central_series(g);
    return series.back().size() == g.order();
}

SubgroupSet commutator_subgroup(const FiniteGroup& g) {
    int n = g.order();
    std::vector<char> in_s(n, 0);
    std::vector<int> members;
    auto add = [&](int e) {
        if (!in_s[e]) {
            in_s[e] = 1;
            members.push_back(e);
        }
    };
    add(0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            add(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j < members.size(); ++j) add(g.mul(members[i], members[j]));
    return make_subgroup(g, std::move(members), true);
}

std::pair<FiniteGroup, std::vector<int>> quotient_group(const FiniteGroup& g,
                                                        const SubgroupSet& nsub) {
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int a : nsub.elements)
            if (!nsub.contains(g.conjugate(x, a)))
                throw not_normal("cannot form quotient by a non-normal subgroup", x, a);
    // Cosets keyed by minimal member.
    std::vector<int> coset_min(n, -1);
    for (int e = 0; e < n; ++e) {
        if (coset_min[e] >= 0) continue;
        std::vector<int> coset;
        for (int a : nsub.elements) coset.push_back(g.mul(e, a));
        int mn = *std::min_element(coset.begin(), coset.end());
        for (int c : coset) coset_min[c] = mn;
    }
    std::vector<int> mins;
    for (int e = 0; e < n; ++e)
        if (coset_min[e] == e) mins.push_back(e);
    std::sort(mins.begin(), mins.end());
    std::vector<int> coset_index(n, -1);
    for (size_t k = 0; k < mins.size(); ++k)
        for (int e = 0; e < n; ++e)
            if (coset_min[e] == mins[k]) coset_index[e] = (int)k;
    int q = (int)mins.size();
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = coset_index[g.mul(mins[i], mins[j])];
    return {FiniteGroup::from_cayley(table), coset_index};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> table((size_t)na * nb,
                                        std::vector<int>((size_t)na * nb));
    for (int i1 = 0; i1 < na; ++i1)
        for (int i2 = 0; i2 < nb; ++i2)
            for (int j1 = 0; j1 < na; ++j1)
                for (int j2 = 0; j2 < nb; ++j2)
                    table[i1 * nb + i2][j1 * nb + j2] =
                        a.mul(i1, j1) * nb + b.mul(i2, j2);
    return FiniteGroup::from_cayley(table);
}

}  // namespace zcenter
