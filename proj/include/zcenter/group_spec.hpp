#pragma once

#include <string>

#include "zcenter/group.hpp"

namespace zcenter {

// Parses a JSON group description. Supported kinds:
//   {"kind": "cayley",  "table": [[0,1],[1,0]]}
//   {"kind": "perm",    "degree": 4, "generators": [[1,0,2,3],[1,2,3,0]]}
//   {"kind": "named",   "name": "Q8"}            (name expressions allowed)
//   {"kind": "product", "parts": [... names or nested specs ...]}
FiniteGroup parse_group_spec_text(const std::string& text);

// Resolves a CLI group argument: a path (contains '/', ends in ".json", or
// names an existing file) is read as a JSON spec; anything else is treated
// as a builtin name expression.
FiniteGroup group_from_arg(const std::string& arg);
bool looks_like_path(const std::string& arg);

// JSON Schema for the spec format, for documentation and the repository copy.
extern const char* const group_spec_schema_json;

}  // namespace zcenter
