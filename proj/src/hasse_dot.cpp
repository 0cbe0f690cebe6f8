#include "nforge/hasse_dot.hpp"

#include <algorithm>

namespace nforge {

std::string hasse_dot(const NelsonAlgebra& a, const std::string& graph_name) {
  FiniteLattice lat = a.lattice_view();
  IrreducibleMap inv = irreducible_involution(a);
  std::vector<int> fixed = inv.fixed_points();

  auto irreducible = [&inv](int i) {
    return std::count(inv.irreducibles.begin(), inv.irreducibles.end(), i) > 0;
  };
  auto is_fixed = [&fixed](int i) {
    return std::count(fixed.begin(), fixed.end(), i) > 0;
  };

  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (int i = 0; i < a.size(); ++i) {
    const PairElement& e = a.element(i);
    PairElement other{e.left, e.right.complement()};
    std::string inc = a.rep() == PairRep::Increasing ? e.to_string()
                                                     : other.to_string();
    std::string dis = a.rep() == PairRep::Increasing ? other.to_string()
                                                     : e.to_string();
    out += "  n" + std::to_string(i) + " [label=\"inc " + inc + "\\ndis " +
           dis + "\"";
    if (irreducible(i)) out += " shape=box";
    if (is_fixed(i)) out += " peripheries=2";
    out += "];\n";
  }
  for (auto [lo, hi] : lat.covers()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace nforge
