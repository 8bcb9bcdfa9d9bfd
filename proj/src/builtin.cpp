#include "zcenter/builtin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "zcenter/errors.hpp"

namespace zcenter {

namespace {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup::from_cayley(t);
}

// Group of order 2m on pairs (i, j), i mod m, j mod 2, with
//   (i1, j1) * (i2, j2) = (i1 + i2 * t^{j1} + e * [j1 & j2] mod m, j1 xor j2).
// This is the standard 2-cocycle presentation covering the dihedral (t = -1,
// e = 0), semidihedral (m = 8, t = 3, e = 0), and generalized quaternion
// (t = -1, e = m/2) families.
FiniteGroup two_cocycle_extension(int m, int t, int e) {
    int n = 2 * m;
    int tm = ((t % m) + m) % m;
    auto idx = [m](int i, int j) { return i + m * j; };
    std::vector<std::vector<int>> tab(n, std::vector<int>(n));
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int act = j1 ? tm : 1;
                    int i = (i1 + i2 * act + e * (j1 & j2)) % m;
                    tab[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    return FiniteGroup::from_cayley(tab);
}

FiniteGroup dihedral(int n) { return two_cocycle_extension(n, -1, 0); }

// Modular group of order 27 (exponent 9): C_9 x| C_3 with the generator of
// C_3 acting as multiplication by 4 (an element of order 3 in (Z/9)^*).
FiniteGroup m27() {
    auto idx = [](int i, int j) { return i + 9 * j; };
    int pw4[3] = {1, 4, 7};  // 4^j mod 9
    std::vector<std::vector<int>> tab(27, std::vector<int>(27));
    for (int i1 = 0; i1 < 9; ++i1)
        for (int j1 = 0; j1 < 3; ++j1)
            for (int i2 = 0; i2 < 9; ++i2)
                for (int j2 = 0; j2 < 3; ++j2)
                    tab[idx(i1, j1)][idx(i2, j2)] =
                        idx((i1 + i2 * pw4[j1]) % 9, (j1 + j2) % 3);
    return FiniteGroup::from_cayley(tab);
}

// Heisenberg group over F_3 (order 27, exponent 3): triples (a, b, c) with
//   (a1, b1, c1) * (a2, b2, c2) = (a1 + a2, b1 + b2, c1 + c2 + a1 * b2).
FiniteGroup heis3() {
    auto idx = [](int a, int b, int c) { return a + 3 * b + 9 * c; };
    std::vector<std::vector<int>> tab(27, std::vector<int>(27));
    for (int a1 = 0; a1 < 3; ++a1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2)
                            tab[idx(a1, b1, c1)][idx(a2, b2, c2)] =
                                idx((a1 + a2) % 3, (b1 + b2) % 3,
                                    (c1 + c2 + a1 * b2) % 3);
    return FiniteGroup::from_cayley(tab);
}

FiniteGroup symmetric(int n) {
    if (n <= 1) return cyclic(1);
    std::vector<std::vector<int>> gens;
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(transposition);
    if (n > 2) gens.push_back(cycle);
    return FiniteGroup::from_permutations(n, gens);
}

FiniteGroup alternating(int n) {
    if (n <= 2) return cyclic(1);
    std::vector<std::vector<int>> gens;
    for (int k = 2; k < n; ++k) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        p[0] = 1;
        p[1] = k;
        p[k] = 0;  // the 3-cycle (0 1 k)
        gens.push_back(std::move(p));
    }
    return FiniteGroup::from_permutations(n, gens);
}

// Parses a positive integer suffix; returns -1 if malformed.
int parse_suffix(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return -1;
    int value = 0;
    for (std::size_t k = prefix.size(); k < name.size(); ++k) {
        char c = name[k];
        if (c < '0' || c > '9') return -1;
        value = value * 10 + (c - '0');
        if (value > 100000) return -1;
    }
    return value > 0 ? value : -1;
}

}  // namespace

bool is_builtin_name(const std::string& name) {
    if (name == "Q8" || name == "Q16" || name == "SD16" || name == "Heis_3" ||
        name == "M27")
        return true;
    return parse_suffix(name, "C_") > 0 || parse_suffix(name, "D_") > 0 ||
           parse_suffix(name, "S_") > 0 || parse_suffix(name, "A_") > 0;
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "Q8") return two_cocycle_extension(4, -1, 2);
    if (name == "Q16") return two_cocycle_extension(8, -1, 4);
    if (name == "SD16") return two_cocycle_extension(8, 3, 0);
    if (name == "Heis_3") return heis3();
    if (name == "M27") return m27();
    if (int n = parse_suffix(name, "C_"); n > 0) return cyclic(n);
    if (int n = parse_suffix(name, "D_"); n > 0) return dihedral(n);
    if (int n = parse_suffix(name, "S_"); n > 0) return symmetric(n);
    if (int n = parse_suffix(name, "A_"); n > 0) return alternating(n);
    throw unknown_name("unknown group name: \"" + name + "\"");
}

FiniteGroup group_by_name(const std::string& expr) {
    // Split on "x" or a UTF-8 times sign; factor names never contain either.
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t k = 0; k < expr.size(); ++k) {
        if (expr[k] == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else if (k + 1 < expr.size() && expr[k] == '\xC3' && expr[k + 1] == '\x97') {
            parts.push_back(cur);
            cur.clear();
            ++k;
        } else {
            cur += expr[k];
        }
    }
    parts.push_back(cur);
    for (auto& p : parts) {
        while (!p.empty() && p.front() == ' ') p.erase(p.begin());
        while (!p.empty() && p.back() == ' ') p.pop_back();
        if (p.empty()) throw unknown_name("malformed group expression: \"" + expr + "\"");
    }
    FiniteGroup g = builtin_group(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k)
        g = direct_product(g, builtin_group(parts[k]));
    return g;
}

std::vector<std::string> builtin_corpus(bool extended) {
    std::vector<std::string> names = {
        "C_1",     "C_2",   "C_3",  "C_4",  "C_2xC_2",       "C_6",
        "S_3",     "C_8",   "C_4xC_2", "C_2xC_2xC_2", "D_4", "Q8",
        "C_3xC_3", "C_12",  "A_4",  "D_6",  "C_16",          "D_8",
        "SD16",    "Q16",   "S_4"};
    if (extended) {
        names.push_back("Heis_3");
        names.push_back("M27");
    }
    return names;
}

std::vector<std::pair<std::string, std::string>> nilpotent_pairs(bool extended) {
    std::vector<std::string> order8 = {"D_4", "Q8", "C_8", "C_4xC_2", "C_2xC_2xC_2"};
    std::vector<std::string> order16 = {"D_8", "SD16", "Q16"};
    std::vector<std::pair<std::string, std::string>> pairs;
    auto all_pairs = [&pairs](const std::vector<std::string>& family) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i; j < family.size(); ++j)
                pairs.emplace_back(family[i], family[j]);
    };
    all_pairs(order8);
    all_pairs(order16);
    if (extended) pairs.emplace_back("Heis_3", "M27");
    return pairs;
}

std::vector<std::pair<std::string, std::string>> table_identity_pairs(bool extended) {
    auto pairs = nilpotent_pairs(extended);
    pairs.emplace_back("C_4", "C_2xC_2");
    return pairs;
}

}  // namespace zcenter
