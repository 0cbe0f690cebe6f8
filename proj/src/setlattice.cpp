#include "nforge/setlattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace nforge {

SetLattice::SetLattice(Universe u, std::vector<PointSet> elements)
    : u_(u), elems_(std::move(elements)) {
  for (const PointSet& e : elems_) {
    if (e.universe() != u_) {
      throw std::invalid_argument("set lattice element over wrong universe");
    }
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || !elems_.front().is_empty() ||
      elems_.back() != PointSet::full(u_)) {
    throw std::invalid_argument("set lattice must contain {} and U");
  }
}

bool SetLattice::contains(PointSet x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int SetLattice::index_of(PointSet x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) {
    throw std::invalid_argument("set " + x.to_string() +
                                " is not a lattice element");
  }
  return static_cast<int>(it - elems_.begin());
}

PointSet SetLattice::interior(PointSet z) const {
  PointSet acc = PointSet::empty(u_);
  for (const PointSet& e : elems_) {
    if (e.subset_of(z)) acc = acc | e;
  }
  return acc;
}

bool is_lattice_closed(const SetLattice& l) {
  for (const PointSet& a : l.elements()) {
    for (const PointSet& b : l.elements()) {
      if (!l.contains(a | b) || !l.contains(a & b)) return false;
    }
  }
  return true;
}

}  // namespace nforge
