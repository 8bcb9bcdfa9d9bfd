#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zcenter/group.hpp"

namespace zcenter {

// Base constructor names: C_n, D_n (dihedral of order 2n), Q8, Q16, SD16,
// S_n, A_n, Heis_3 (order 27, exponent 3), M27 (order 27, exponent 9).
bool is_builtin_name(const std::string& name);
FiniteGroup builtin_group(const std::string& name);

// Name expressions: base names joined by "x" or the times sign build direct
// products, e.g. "C_2xC_2" or "C_4×C_2".
FiniteGroup group_by_name(const std::string& expr);

// The fixed verification corpus, ordered by group order.
std::vector<std::string> builtin_corpus(bool extended);

// Same-order nilpotent pairs for the monomiality sweep (order 8 and the
// order-16 maximal-class family; extended adds the order-27 pair).
std::vector<std::pair<std::string, std::string>> nilpotent_pairs(bool extended);

// Pairs for the center-isomorphism vs table-identity cross-validation.
std::vector<std::pair<std::string, std::string>> table_identity_pairs(bool extended);

}  // namespace zcenter
