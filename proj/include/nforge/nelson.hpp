#ifndef NFORGE_NELSON_HPP_
#define NFORGE_NELSON_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nforge/heyting.hpp"
#include "nforge/setlattice.hpp"

namespace nforge {

// One rough set: an ordered pair of point sets, either (lower, upper) in the
// increasing representation or (lower, -upper) in the disjoint one. The
// representation tag lives on the algebra; it is uniform across a carrier.
struct PairElement {
  PointSet left;
  PointSet right;

  friend bool operator==(const PairElement& a, const PairElement& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend std::strong_ordering operator<=>(const PairElement& a,
                                          const PairElement& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
  }
  std::string to_string() const {
    return "(" + left.to_string() + "," + right.to_string() + ")";
  }
};

enum class PairRep { Increasing, Disjoint };

struct Provenance {
  enum class Kind { Direct, Sendlewski, Imported };
  Kind kind = Kind::Imported;
  std::string congruence_name;  // empty, "closed_point_trace", or "glivenko"
  bool effective = false;       // congruence coincides with Glivenko's
  std::shared_ptr<const SetLattice> heyting;  // present when built from one
};

// A finite Nelson algebra with materialized operation tables over the
// canonically sorted carrier. Axiom checkers treat the tables as data, so
// deliberately broken algebras can be represented too.
class NelsonAlgebra {
 public:
  using PairOp = std::function<PairElement(const PairElement&, const PairElement&)>;
  using PairUnaryOp = std::function<PairElement(const PairElement&)>;

  // Sorts the carrier, materializes tables from the callbacks, and throws
  // if any operation leaves the carrier.
  static NelsonAlgebra build(Universe u, PairRep rep,
                             std::vector<PairElement> carrier,
                             const PairOp& join, const PairOp& meet,
                             const PairOp& imp, const PairUnaryOp& neg,
                             PairElement zero, PairElement one,
                             Provenance prov);

  // Wraps explicit tables (e.g. from JSON). Only shape is validated.
  static NelsonAlgebra from_tables(Universe u, PairRep rep,
                                   std::vector<PairElement> carrier,
                                   const std::vector<std::vector<int>>& join,
                                   const std::vector<std::vector<int>>& meet,
                                   const std::vector<std::vector<int>>& imp,
                                   std::vector<int> strong_neg,
                                   std::vector<int> weak_neg, int zero, int one,
                                   Provenance prov);

  Universe universe() const { return u_; }
  PairRep rep() const { return rep_; }
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<PairElement>& carrier() const { return carrier_; }
  const PairElement& element(int i) const {
    return carrier_[static_cast<std::size_t>(i)];
  }
  int index_of(const PairElement& e) const;
  bool contains(const PairElement& e) const;

  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int imp(int a, int b) const { return imp_[idx(a, b)]; }
  int strong_neg(int a) const { return sneg_[static_cast<std::size_t>(a)]; }
  int weak_neg(int a) const { return wneg_[static_cast<std::size_t>(a)]; }
  bool leq(int a, int b) const { return join(a, b) == b; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  const Provenance& provenance() const { return prov_; }

  const std::vector<int>& join_table() const { return join_; }
  const std::vector<int>& meet_table() const { return meet_; }
  const std::vector<int>& imp_table() const { return imp_; }
  const std::vector<int>& strong_neg_table() const { return sneg_; }
  const std::vector<int>& weak_neg_table() const { return wneg_; }

  // Order view for generic lattice computations (covers, irreducibles, ...).
  FiniteLattice lattice_view() const;

  // Same carrier, tables and constants; provenance is ignored.
  friend bool operator==(const NelsonAlgebra& a, const NelsonAlgebra& b);

 private:
  NelsonAlgebra(Universe u) : u_(u) {}
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * carrier_.size() +
           static_cast<std::size_t>(b);
  }

  Universe u_;
  PairRep rep_ = PairRep::Disjoint;
  std::vector<PairElement> carrier_;
  std::vector<int> join_, meet_, imp_;
  std::vector<int> sneg_, wneg_;
  int zero_ = 0, one_ = 0;
  Provenance prov_;
};

// --- Sendlewski construction -----------------------------------------------

// N_Theta(H): all pairs (a,b) of H-elements with a & b = bottom and
// (a | b) Theta top, under the pair operations induced by H. Theta must be a
// Boolean congruence on H (checked).
NelsonAlgebra sendlewski_algebra(const SetLattice& h, const Congruence& theta,
                                 std::string congruence_name = "");

// --- Axiom checkers ---------------------------------------------------------

struct Violation {
  std::string law;           // short law tag, e.g. "kleene_involution"
  std::vector<int> witness;  // element indices involved
  std::string detail;        // human-readable rendering
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::optional<Violation> first(const std::string& law) const;
};

// Bounded distributive lattice laws plus the three Kleene axioms, checked
// exhaustively over the tables. Violations are data, not errors.
CheckReport verify_kleene_axioms(const NelsonAlgebra& a);

// Residuation (over all triples), exportation, and agreement of the stored
// weak negation with a -> 0.
CheckReport verify_nelson_axioms(const NelsonAlgebra& a);

// a | !a = 1 carrier-wide.
bool is_semi_simple(const NelsonAlgebra& a);

// --- Classical-truth operator ------------------------------------------------

// T((a,b)) = (a**, b**) computed in the algebra's underlying Heyting algebra.
// Defined when the algebra was built from the Glivenko congruence; `force`
// computes it anyway (exploration), still insisting the result stays in the
// carrier.
int truth_operator(const NelsonAlgebra& a, int x, bool force = false);
PairElement truth_operator(const NelsonAlgebra& a, const PairElement& x,
                           bool force = false);

// --- Join-irreducible analysis ----------------------------------------------

// The involution j -> meet of {x | x not<= ~j} on the completely
// join-irreducible elements. Throws if some image is not join-irreducible.
struct IrreducibleMap {
  std::vector<int> irreducibles;  // canonical order
  std::vector<int> image;         // image[k] = g(irreducibles[k])
  int g(int element_index) const;
  std::vector<int> fixed_points() const;
};

IrreducibleMap irreducible_involution(const NelsonAlgebra& a);

// The four conditions the involution satisfies on Nelson algebras: antitone,
// involutive, comparable with its argument, and interpolating.
CheckReport verify_involution_conditions(const NelsonAlgebra& a);

// Every join-irreducible is comparable with some fixed point of the
// involution.
bool satisfies_representation_condition(const NelsonAlgebra& a);

// Strong negation rebuilt from the involution: ~x = join of
// {j irreducible | g(j) not<= x}. `mismatch` holds the first element where
// the reconstruction differs from the stored table.
struct NegationReconstruction {
  std::vector<int> table;
  std::optional<int> mismatch;
  bool ok() const { return !mismatch.has_value(); }
};

NegationReconstruction negation_from_involution(const NelsonAlgebra& a);

}  // namespace nforge

#endif  // NFORGE_NELSON_HPP_
