#include "nforge/approx.hpp"

#include <algorithm>
#include <set>

namespace nforge {

PointSet lower_approx(const QuasiOrder& r, PointSet x) {
  std::uint64_t out = 0;
  for (int i = 0; i < r.size(); ++i) {
    if (r.successors(i).subset_of(x)) out |= std::uint64_t{1} << i;
  }
  return PointSet(r.universe(), out);
}

PointSet upper_approx(const QuasiOrder& r, PointSet x) {
  std::uint64_t out = 0;
  for (int i = 0; i < r.size(); ++i) {
    if (r.successors(i).intersects(x)) out |= std::uint64_t{1} << i;
  }
  return PointSet(r.universe(), out);
}

SetLattice lower_topology(const QuasiOrder& r) {
  // Every open is a union of neighborhoods R(x), so generate the
  // union-closure of the rows instead of scanning all 2^n subsets.
  std::set<std::uint64_t> opens = {0};
  for (int i = 0; i < r.size(); ++i) {
    std::uint64_t row = r.successors(i).bits();
    std::vector<std::uint64_t> extended;
    extended.reserve(opens.size());
    for (std::uint64_t o : opens) extended.push_back(o | row);
    opens.insert(extended.begin(), extended.end());
  }
  std::vector<PointSet> elems;
  elems.reserve(opens.size());
  for (std::uint64_t o : opens) elems.emplace_back(r.universe(), o);
  return SetLattice(r.universe(), std::move(elems));
}

SetLattice upper_topology(const QuasiOrder& r) {
  // Duality: X is open in T_R iff -X is in T^R.
  SetLattice lower = lower_topology(r);
  std::vector<PointSet> elems;
  for (const PointSet& o : lower.elements()) {
    elems.push_back(o.complement());
  }
  return SetLattice(r.universe(), std::move(elems));
}

}  // namespace nforge
