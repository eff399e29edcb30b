#pragma once

#include <string>

#include "ncgraph/finite_group.hpp"

namespace ncg {

// Raised for unreadable files, malformed JSON, schema violations and
// tables failing the group axioms; the message carries the diagnostics of
// the underlying validation.
struct InvalidTableFile : GroupError {
  using GroupError::GroupError;
};

// Expected document: {"order": n, "names": [n strings], "table": n x n}.
// "order" and "names" may be omitted; names default to the element index.
FiniteGroup parse_group_json(const std::string& text);

FiniteGroup load_group_json(const std::string& path);

std::string group_to_json(const FiniteGroup& g);

}  // namespace ncg
