#ifndef NFORGE_HEYTING_HPP_
#define NFORGE_HEYTING_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "nforge/setlattice.hpp"

namespace nforge {

// --- Heyting structure on a SetLattice ------------------------------------
//
// A finite family closed under union/intersection is a Heyting algebra with
// x => y = interior(-x | y); the pseudocomplement is x* = x => {}.

// Greatest z in l with x & z <= y. Throws if x or y is not an element.
PointSet relative_pseudocomplement(const SetLattice& l, PointSet x, PointSet y);

// x* = x => bottom. Self-checks the defining adjunction
// (x & z = {} iff z <= x*) over the whole carrier.
PointSet pseudocomplement(const SetLattice& l, PointSet x);

struct DenseElements {
  std::vector<PointSet> dense;       // all x with x* = bottom, canonical order
  std::optional<PointSet> least;     // meet of dense, when itself dense
};

DenseElements dense_elements(const SetLattice& l);

// A lattice congruence stored as a class-id map under canonical element
// order (ids numbered by first appearance). Holds its lattice by value, so
// it stays usable after the source lattice is gone.
class Congruence {
 public:
  Congruence(SetLattice l, std::vector<int> class_of);

  const SetLattice& lattice() const { return lattice_; }
  int class_of(int element_index) const {
    return class_of_[static_cast<std::size_t>(element_index)];
  }
  int num_classes() const { return num_classes_; }
  bool relates(PointSet a, PointSet b) const;

  // Partition equality (same underlying lattice assumed).
  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  SetLattice lattice_;
  std::vector<int> class_of_;
  int num_classes_;
};

bool is_filter(const SetLattice& l, const std::vector<PointSet>& f);

// theta(F) = {(x,y) | exists z in F with x & z = y & z}. F must be a filter.
Congruence filter_congruence(const SetLattice& l, std::vector<PointSet> f);

// {(x,y) | x & a = y & a}. Requires a in l and a below every dense element;
// then the quotient is Boolean. Equals filter_congruence of a's principal
// filter.
Congruence trace_congruence(const SetLattice& l, PointSet a);

// Partition by pseudocomplement: {(a,b) | a* = b*}. The least Boolean
// congruence; asserted equal to filter_congruence(dense elements).
Congruence glivenko_congruence(const SetLattice& l);

// Compatibility with union, intersection and => checked exhaustively.
bool is_congruence(const Congruence& c);

// Quotient is complemented, decided by exhaustive complement search.
bool is_boolean(const Congruence& c);

// --- Generic finite lattice helpers ----------------------------------------
//
// Pair carriers are not set families, so order-theoretic computations there
// go through an explicit <= matrix. Joins and meets are found definitionally.

class FiniteLattice {
 public:
  FiniteLattice(int size, const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a) * n_ + b];
  }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int join(int a, int b) const;
  int meet(int a, int b) const;

  std::vector<int> lower_covers(int a) const;
  // Hasse edges (lower, upper), sorted.
  std::vector<std::pair<int, int>> covers() const;

  // Completely join-irreducible elements: computed as elements with exactly
  // one lower cover, cross-checked against the strict-downset join when the
  // carrier has at most 20 elements.
  std::vector<int> join_irreducibles() const;

  // Greatest z with a & z <= b, found by definitional scan.
  int relative_pseudocomplement(int a, int b) const;
  int pseudocomplement(int a) const { return relative_pseudocomplement(a, bottom_); }

  int join_all(const std::vector<int>& xs) const;  // join over xs, bottom if empty
  int meet_all(const std::vector<int>& xs) const;  // meet over xs, top if empty

 private:
  int n_;
  std::vector<char> leq_;
  int bottom_;
  int top_;
};

}  // namespace nforge

#endif  // NFORGE_HEYTING_HPP_
