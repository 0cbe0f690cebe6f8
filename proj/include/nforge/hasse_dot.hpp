#ifndef NFORGE_HASSE_DOT_HPP_
#define NFORGE_HASSE_DOT_HPP_

#include <string>

#include "nforge/nelson.hpp"

namespace nforge {

// Graphviz digraph of the covering relation, nodes in canonical carrier
// order and labeled with both pair representations. Join-irreducible
// elements are boxed; fixed points of the irreducible involution get a
// double border.
std::string hasse_dot(const NelsonAlgebra& a, const std::string& graph_name = "algebra");

}  // namespace nforge

#endif  // NFORGE_HASSE_DOT_HPP_
