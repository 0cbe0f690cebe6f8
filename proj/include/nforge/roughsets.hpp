#ifndef NFORGE_ROUGHSETS_HPP_
#define NFORGE_ROUGHSETS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nforge/approx.hpp"
#include "nforge/nelson.hpp"
#include "nforge/relation.hpp"

namespace nforge {

// (X_R, X^R) and (X_R, -X^R) for a subset X.
PairElement rough_pair(const QuasiOrder& r, PointSet x);
PairElement rough_pair_disjoint(const QuasiOrder& r, PointSet x);

// The increasing-representation rough set algebra: carrier collected from
// all 2^n subsets, tables from the componentwise operation formulas.
NelsonAlgebra irs_algebra(const QuasiOrder& r);

// {(A,B) in T_R x T^R | A subset of B and S subset of A | -B}. Throws if it
// differs from the direct carrier.
std::vector<PairElement> irs_carrier_by_characterization(const QuasiOrder& r);

// The disjoint-representation algebra, built three independent ways (direct
// pairs, topology characterization, Sendlewski construction over the trace
// congruence of S) and checked to coincide carrier- and table-wise. Throws
// on any mismatch.
NelsonAlgebra drs_algebra(const QuasiOrder& r);

// (A,B) -> (A,-B) from the increasing to the disjoint algebra; failures
// list every preservation defect (order both ways, operations, constants).
struct BijectionReport {
  std::vector<int> irs_to_drs;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

BijectionReport irs_drs_bijection(const NelsonAlgebra& irs,
                                  const NelsonAlgebra& drs);

// Componentwise joins/meets of carrier subsets land in the carrier and agree
// with the lattice joins/meets. Exhaustive for small carriers, seeded
// sampling beyond.
struct SublatticeReport {
  std::vector<std::string> failures;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  int subsets_checked = 0;
  bool ok() const { return failures.empty(); }
};

SublatticeReport complete_sublattice_check(const NelsonAlgebra& irs,
                                           std::uint64_t seed = 0x6e666f72u,
                                           int samples = 512);

// Closed-form inventory of the completely join-irreducible elements with
// their witnesses, cross-checked against the brute-force lattice scan, plus
// the three involution classes (below image / fixed / above image), checked
// witness-by-witness against the computed involution. Throws on mismatch.
struct IrreducibleInventory {
  enum class Branch { PointUpper, Neighborhood };
  struct Entry {
    int index;                  // carrier index in the increasing algebra
    PairElement element;
    Branch branch;
    std::vector<int> witnesses;  // the points x producing it
  };
  std::vector<Entry> entries;
  std::vector<int> below_image;  // j < g(j)
  std::vector<int> fixed;        // j = g(j)
  std::vector<int> above_image;  // j > g(j)
};

IrreducibleInventory irs_join_irreducibles(const QuasiOrder& r,
                                           const NelsonAlgebra& irs);

// The five equivalent effectiveness readings, evaluated independently:
// (a) S cofinal, (b) S dense, (c) S least dense, (d) trace congruence of S
// is the Glivenko congruence, (e) the constructed algebra equals the
// Glivenko-congruence construction. Throws if they disagree.
struct EffectivenessReport {
  bool cofinal = false;
  bool dense = false;
  bool least_dense = false;
  bool trace_is_glivenko = false;
  bool structurally_effective = false;
  bool effective() const { return cofinal; }
  bool agree() const {
    return cofinal == dense && dense == least_dense &&
           least_dense == trace_is_glivenko &&
           trace_is_glivenko == structurally_effective;
  }
};

EffectivenessReport effectiveness_criteria(const QuasiOrder& r);

// The two closed-form carrier descriptions valid when S is cofinal,
// compared against the constructed carriers. Requires S cofinal.
struct CarrierFormulaReport {
  bool drs_matches = false;
  bool irs_matches = false;
  bool ok() const { return drs_matches && irs_matches; }
};

CarrierFormulaReport effective_carrier_check(const QuasiOrder& r);

// Finite partial orders are always effective; requires antisymmetry and
// cross-checks the claim against effectiveness_criteria.
bool poset_effectiveness(const QuasiOrder& r);

// The equivalence-relation specialization: the topology is a field of sets,
// the disjoint carrier matches its closed form, the algebra is semi-simple,
// the Glivenko congruence is the identity, and effectiveness holds exactly
// for the identity relation.
struct EquivalenceReport {
  bool field_of_sets = false;
  bool drs_matches_formula = false;
  bool semi_simple = false;
  bool glivenko_is_identity = false;
  bool effective_iff_identity = false;
  bool ok() const {
    return field_of_sets && drs_matches_formula && semi_simple &&
           glivenko_is_identity && effective_iff_identity;
  }
};

EquivalenceReport verify_equivalence_case(const QuasiOrder& e);

}  // namespace nforge

#endif  // NFORGE_ROUGHSETS_HPP_
