#ifndef NFORGE_ALGEBRA_JSON_HPP_
#define NFORGE_ALGEBRA_JSON_HPP_

#include <string>

#include "nforge/nelson.hpp"

namespace nforge {

// Stable JSON schema for algebras: carrier as [left, right] member arrays,
// tables as index matrices, constants as indices. Keys are emitted sorted,
// so identical algebras serialize byte-identically.
std::string algebra_to_json(const NelsonAlgebra& a, int indent = 2);

// Accepts either the bare algebra object or a {"algebra": ...} wrapper (the
// build command writes the latter). Provenance comes back as Imported: the
// underlying Heyting algebra is not serialized, so T is unavailable on
// loaded algebras.
NelsonAlgebra algebra_from_json(const std::string& text);
NelsonAlgebra algebra_from_json_file(const std::string& path);

}  // namespace nforge

#endif  // NFORGE_ALGEBRA_JSON_HPP_
