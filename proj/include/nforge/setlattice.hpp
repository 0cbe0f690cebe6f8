#ifndef NFORGE_SETLATTICE_HPP_
#define NFORGE_SETLATTICE_HPP_

#include <vector>

#include "nforge/pointset.hpp"

namespace nforge {

// A finite family of point sets closed under union and intersection, with
// bottom = {} and top = U. Elements are kept sorted by mask value so every
// index is canonical. Meet and join are set intersection and union.
class SetLattice {
 public:
  SetLattice(Universe u, std::vector<PointSet> elements);

  Universe universe() const { return u_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<PointSet>& elements() const { return elems_; }
  PointSet element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  PointSet bottom() const { return elems_.front(); }
  PointSet top() const { return elems_.back(); }

  bool contains(PointSet x) const;
  // Canonical index; throws if x is not an element.
  int index_of(PointSet x) const;

  // Largest element contained in z (z need not be an element). For a lower
  // topology this is the interior operator, i.e. the lower approximation.
  PointSet interior(PointSet z) const;

  friend bool operator==(const SetLattice& a, const SetLattice& b) {
    return a.u_ == b.u_ && a.elems_ == b.elems_;
  }

 private:
  Universe u_;
  std::vector<PointSet> elems_;
};

// Exhaustive check that the family really is closed under pairwise union and
// intersection and contains the bounds. Quadratic; meant for suites.
bool is_lattice_closed(const SetLattice& l);

}  // namespace nforge

#endif  // NFORGE_SETLATTICE_HPP_
