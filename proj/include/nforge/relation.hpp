#ifndef NFORGE_RELATION_HPP_
#define NFORGE_RELATION_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "nforge/pointset.hpp"

namespace nforge {

using PointPair = std::pair<int, int>;

// A reflexive transitive relation on a finite universe, stored as one
// successor mask per point (row i = R(i)). Immutable after construction.
class QuasiOrder {
 public:
  // Rows must already be reflexive and transitive; throws otherwise.
  static QuasiOrder from_rows(Universe u, std::vector<std::uint64_t> rows);

  static QuasiOrder identity(Universe u);
  static QuasiOrder full(Universe u);

  // Strict constructor: diagonal pairs are implied, but the listed pairs
  // plus the diagonal must already be transitive. Throws naming a missing
  // pair otherwise.
  static QuasiOrder from_pairs(Universe u, const std::vector<PointPair>& pairs);

  // Smallest quasiorder containing the given pairs. If `added` is non-null
  // it receives the pairs the closure introduced (beyond diagonal + input).
  static QuasiOrder closure(Universe u, const std::vector<PointPair>& pairs,
                            std::vector<PointPair>* added = nullptr);

  Universe universe() const { return u_; }
  int size() const { return u_.size(); }
  bool relates(int i, int j) const { return (rows_[i] >> j) & 1; }
  PointSet successors(int i) const { return PointSet(u_, rows_[i]); }

  // R(X) = {y | x R y for some x in X}.
  PointSet neighborhood(PointSet x) const;

  // S = {x | R(x) = {x}}.
  PointSet closed_points() const;

  // X^R = U, i.e. every point has an R-successor in X.
  bool is_cofinal(PointSet x) const;

  bool is_antisymmetric() const;
  bool is_symmetric() const;
  bool is_identity() const;

  // All pairs (i,j) with i R j, sorted ascending; includes the diagonal.
  std::vector<PointPair> pairs() const;

  friend bool operator==(const QuasiOrder& a, const QuasiOrder& b) {
    return a.u_ == b.u_ && a.rows_ == b.rows_;
  }

 private:
  QuasiOrder(Universe u, std::vector<std::uint64_t> rows)
      : u_(u), rows_(std::move(rows)) {}

  Universe u_;
  std::vector<std::uint64_t> rows_;
};

// Canonical enumeration/report order: lexicographic on the sorted pair lists.
bool canonical_less(const QuasiOrder& a, const QuasiOrder& b);

enum class RelationClass {
  All,
  PartialOrders,
  Equivalences,
  CofinalClosedPoints,
};

// Every quasiorder of the requested kind on n labeled points, in canonical
// order. `bound` is a resource cap, not a completeness bound; n above it is
// an error. With `up_to_iso` only the canonically least relation of each
// isomorphism class (under point permutations) is kept.
std::vector<QuasiOrder> enumerate_quasiorders(int n, RelationClass kind,
                                              int bound = 5,
                                              bool up_to_iso = false);

}  // namespace nforge

#endif  // NFORGE_RELATION_HPP_
