#ifndef NFORGE_APPROX_HPP_
#define NFORGE_APPROX_HPP_

#include "nforge/pointset.hpp"
#include "nforge/relation.hpp"
#include "nforge/setlattice.hpp"

namespace nforge {

// X_R = {x | R(x) subset of X}.
PointSet lower_approx(const QuasiOrder& r, PointSet x);

// X^R = {x | R(x) meets X}.
PointSet upper_approx(const QuasiOrder& r, PointSet x);

// T_R(U): all R-closed sets, i.e. all lower approximations. Closed under
// arbitrary unions and intersections.
SetLattice lower_topology(const QuasiOrder& r);

// T^R(U): all upper approximations; the complements of the lower topology.
SetLattice upper_topology(const QuasiOrder& r);

}  // namespace nforge

#endif  // NFORGE_APPROX_HPP_
