#include "nforge/roughsets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nforge/heyting.hpp"

namespace nforge {

namespace {

constexpr int kMaxDirectUniverse = 24;

void require_direct_feasible(const QuasiOrder& r) {
  if (r.size() > kMaxDirectUniverse) {
    throw std::invalid_argument(
        "carrier enumeration scans all 2^n subsets; universe of size " +
        std::to_string(r.size()) + " is beyond the desk-scale limit of " +
        std::to_string(kMaxDirectUniverse));
  }
}

std::vector<PairElement> direct_carrier(const QuasiOrder& r, bool disjoint) {
  require_direct_feasible(r);
  std::vector<PairElement> out;
  out.reserve(std::size_t{1} << r.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << r.size()); ++m) {
    PointSet x(r.universe(), m);
    out.push_back(disjoint ? rough_pair_disjoint(r, x) : rough_pair(r, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Provenance rough_provenance(const QuasiOrder& r, Provenance::Kind kind,
                            const SetLattice& topology) {
  Provenance prov;
  prov.kind = kind;
  prov.congruence_name = "closed_point_trace";
  prov.heyting = std::make_shared<SetLattice>(topology);
  prov.effective = trace_congruence(topology, r.closed_points()) ==
                   glivenko_congruence(topology);
  return prov;
}

}  // namespace

PairElement rough_pair(const QuasiOrder& r, PointSet x) {
  return {lower_approx(r, x), upper_approx(r, x)};
}

PairElement rough_pair_disjoint(const QuasiOrder& r, PointSet x) {
  return {lower_approx(r, x), upper_approx(r, x).complement()};
}

NelsonAlgebra irs_algebra(const QuasiOrder& r) {
  SetLattice topology = lower_topology(r);
  auto join = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left | b.left, a.right | b.right};
  };
  auto meet = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left & b.left, a.right & b.right};
  };
  auto imp = [&r](const PairElement& a, const PairElement& b) {
    return PairElement{lower_approx(r, a.left.complement() | b.left),
                       a.left.complement() | b.right};
  };
  auto neg = [](const PairElement& a) {
    return PairElement{a.right.complement(), a.left.complement()};
  };
  Universe u = r.universe();
  return NelsonAlgebra::build(
      u, PairRep::Increasing, direct_carrier(r, false), join, meet, imp, neg,
      PairElement{PointSet::empty(u), PointSet::empty(u)},
      PairElement{PointSet::full(u), PointSet::full(u)},
      rough_provenance(r, Provenance::Kind::Direct, topology));
}

std::vector<PairElement> irs_carrier_by_characterization(const QuasiOrder& r) {
  SetLattice lower = lower_topology(r);
  SetLattice upper = upper_topology(r);
  PointSet s = r.closed_points();
  std::vector<PairElement> out;
  for (const PointSet& a : lower.elements()) {
    for (const PointSet& b : upper.elements()) {
      if (a.subset_of(b) && s.subset_of(a | b.complement())) {
        out.push_back({a, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (out != direct_carrier(r, false)) {
    throw std::logic_error(
        "characterized increasing carrier differs from direct enumeration");
  }
  return out;
}

NelsonAlgebra drs_algebra(const QuasiOrder& r) {
  SetLattice topology = lower_topology(r);
  PointSet s = r.closed_points();
  Universe u = r.universe();

  auto join = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left | b.left, a.right & b.right};
  };
  auto meet = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left & b.left, a.right | b.right};
  };
  auto imp = [&r](const PairElement& a, const PairElement& b) {
    return PairElement{lower_approx(r, a.left.complement() | b.left),
                       a.left & b.right};
  };
  auto neg = [](const PairElement& a) {
    return PairElement{a.right, a.left};
  };
  PairElement zero{PointSet::empty(u), PointSet::full(u)};
  PairElement one{PointSet::full(u), PointSet::empty(u)};

  NelsonAlgebra direct = NelsonAlgebra::build(
      u, PairRep::Disjoint, direct_carrier(r, true), join, meet, imp, neg,
      zero, one, rough_provenance(r, Provenance::Kind::Direct, topology));

  std::vector<PairElement> characterized;
  for (const PointSet& a : topology.elements()) {
    for (const PointSet& b : topology.elements()) {
      if ((a & b).is_empty() && s.subset_of(a | b)) {
        characterized.push_back({a, b});
      }
    }
  }
  NelsonAlgebra by_formula = NelsonAlgebra::build(
      u, PairRep::Disjoint, std::move(characterized), join, meet, imp, neg,
      zero, one, rough_provenance(r, Provenance::Kind::Direct, topology));

  NelsonAlgebra by_pairs = sendlewski_algebra(
      topology, trace_congruence(topology, s), "closed_point_trace");

  if (!(direct == by_formula)) {
    throw std::logic_error(
        "disjoint algebra: direct and characterized routes disagree");
  }
  if (!(direct == by_pairs)) {
    throw std::logic_error(
        "disjoint algebra: direct and pair-construction routes disagree");
  }
  return by_pairs;
}

BijectionReport irs_drs_bijection(const NelsonAlgebra& irs,
                                  const NelsonAlgebra& drs) {
  BijectionReport rep;
  if (irs.rep() != PairRep::Increasing || drs.rep() != PairRep::Disjoint) {
    rep.failures.push_back("arguments must be the increasing and disjoint algebras");
    return rep;
  }
  if (irs.size() != drs.size()) {
    rep.failures.push_back("carriers differ in size");
    return rep;
  }
  int m = irs.size();
  rep.irs_to_drs.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    PairElement mapped{irs.element(i).left, irs.element(i).right.complement()};
    if (!drs.contains(mapped)) {
      rep.failures.push_back("image " + mapped.to_string() +
                             " is not a disjoint carrier element");
      return rep;
    }
    rep.irs_to_drs[static_cast<std::size_t>(i)] = drs.index_of(mapped);
  }
  const auto& f = rep.irs_to_drs;
  std::vector<char> hit(static_cast<std::size_t>(m), 0);
  for (int i : f) hit[static_cast<std::size_t>(i)] = 1;
  if (std::count(hit.begin(), hit.end(), 1) != m) {
    rep.failures.push_back("map is not a bijection");
    return rep;
  }
  for (int i = 0; i < m; ++i) {
    if (f[static_cast<std::size_t>(irs.strong_neg(i))] !=
        drs.strong_neg(f[static_cast<std::size_t>(i)])) {
      rep.failures.push_back("strong negation not preserved at index " +
                             std::to_string(i));
    }
    for (int j = 0; j < m; ++j) {
      if (irs.leq(i, j) !=
          drs.leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        rep.failures.push_back("order not preserved at indices " +
                               std::to_string(i) + "," + std::to_string(j));
      }
      if (f[static_cast<std::size_t>(irs.join(i, j))] !=
          drs.join(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        rep.failures.push_back("join not preserved at indices " +
                               std::to_string(i) + "," + std::to_string(j));
      }
      if (f[static_cast<std::size_t>(irs.meet(i, j))] !=
          drs.meet(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        rep.failures.push_back("meet not preserved at indices " +
                               std::to_string(i) + "," + std::to_string(j));
      }
      if (f[static_cast<std::size_t>(irs.imp(i, j))] !=
          drs.imp(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        rep.failures.push_back("implication not preserved at indices " +
                               std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  if (f[static_cast<std::size_t>(irs.zero())] != drs.zero() ||
      f[static_cast<std::size_t>(irs.one())] != drs.one()) {
    rep.failures.push_back("constants not preserved");
  }
  return rep;
}

SublatticeReport complete_sublattice_check(const NelsonAlgebra& irs,
                                           std::uint64_t seed, int samples) {
  if (irs.rep() != PairRep::Increasing) {
    throw std::invalid_argument(
        "componentwise sublattice check applies to the increasing algebra");
  }
  SublatticeReport rep;
  rep.seed = seed;
  int m = irs.size();
  Universe u = irs.universe();

  auto check_subset = [&](const std::vector<int>& subset) {
    PointSet jl = PointSet::empty(u), jr = PointSet::empty(u);
    PointSet ml = PointSet::full(u), mr = PointSet::full(u);
    int join_acc = irs.zero();
    int meet_acc = irs.one();
    for (int i : subset) {
      jl = jl | irs.element(i).left;
      jr = jr | irs.element(i).right;
      ml = ml & irs.element(i).left;
      mr = mr & irs.element(i).right;
      join_acc = irs.join(join_acc, i);
      meet_acc = irs.meet(meet_acc, i);
    }
    PairElement cw_join{jl, jr}, cw_meet{ml, mr};
    if (!irs.contains(cw_join) || irs.index_of(cw_join) != join_acc) {
      rep.failures.push_back("componentwise join mismatch for subset of size " +
                             std::to_string(subset.size()) + " -> " +
                             cw_join.to_string());
    }
    if (!irs.contains(cw_meet) || irs.index_of(cw_meet) != meet_acc) {
      rep.failures.push_back("componentwise meet mismatch for subset of size " +
                             std::to_string(subset.size()) + " -> " +
                             cw_meet.to_string());
    }
  };

  if (m <= 12) {
    rep.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < m; ++i) {
        if ((mask >> i) & 1) subset.push_back(i);
      }
      check_subset(subset);
      ++rep.subsets_checked;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
      std::vector<int> subset;
      for (int i = 0; i < m; ++i) {
        if (rng() & 1) subset.push_back(i);
      }
      check_subset(subset);
      ++rep.subsets_checked;
    }
  }
  return rep;
}

IrreducibleInventory irs_join_irreducibles(const QuasiOrder& r,
                                           const NelsonAlgebra& irs) {
  if (irs.rep() != PairRep::Increasing) {
    throw std::invalid_argument("inventory applies to the increasing algebra");
  }
  IrreducibleInventory inv;
  PointSet s = r.closed_points();

  auto add_entry = [&](PairElement e, IrreducibleInventory::Branch branch,
                       int witness) {
    int idx = irs.index_of(e);
    for (auto& entry : inv.entries) {
      if (entry.index == idx && entry.branch == branch) {
        entry.witnesses.push_back(witness);
        return;
      }
    }
    inv.entries.push_back({idx, e, branch, {witness}});
  };

  for (int x = 0; x < r.size(); ++x) {
    PointSet sx = PointSet::single(r.universe(), x);
    if (r.successors(x).count() >= 2) {
      add_entry({PointSet::empty(r.universe()), upper_approx(r, sx)},
                IrreducibleInventory::Branch::PointUpper, x);
    }
    PointSet nb = r.successors(x);
    add_entry({nb, upper_approx(r, nb)},
              IrreducibleInventory::Branch::Neighborhood, x);
  }
  std::sort(inv.entries.begin(), inv.entries.end(),
            [](const auto& a, const auto& b) {
              return std::pair(a.index, a.branch) < std::pair(b.index, b.branch);
            });

  std::vector<int> formula_set;
  for (const auto& e : inv.entries) formula_set.push_back(e.index);
  std::sort(formula_set.begin(), formula_set.end());
  formula_set.erase(std::unique(formula_set.begin(), formula_set.end()),
                    formula_set.end());

  std::vector<int> brute = irs.lattice_view().join_irreducibles();
  std::sort(brute.begin(), brute.end());
  if (formula_set != brute) {
    throw std::logic_error(
        "closed-form join-irreducible set differs from the lattice scan");
  }

  IrreducibleMap g = irreducible_involution(irs);
  FiniteLattice lat = irs.lattice_view();
  std::vector<int> below, fixed, above;
  for (std::size_t k = 0; k < g.irreducibles.size(); ++k) {
    int j = g.irreducibles[k], gj = g.image[k];
    if (j == gj) {
      fixed.push_back(j);
    } else if (lat.leq(j, gj)) {
      below.push_back(j);
    } else {
      above.push_back(j);
    }
  }
  std::sort(below.begin(), below.end());
  std::sort(fixed.begin(), fixed.end());
  std::sort(above.begin(), above.end());

  std::vector<int> below_pred, fixed_pred, above_pred;
  for (const auto& e : inv.entries) {
    if (e.branch == IrreducibleInventory::Branch::PointUpper) {
      below_pred.push_back(e.index);
    } else {
      bool has_closed_witness = false;
      bool has_wide_witness = false;
      for (int x : e.witnesses) {
        if (s.contains(x)) has_closed_witness = true;
        if (r.successors(x).count() >= 2) has_wide_witness = true;
      }
      if (has_closed_witness) fixed_pred.push_back(e.index);
      if (has_wide_witness) above_pred.push_back(e.index);
    }
  }
  for (auto* v : {&below_pred, &fixed_pred, &above_pred}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (below_pred != below || fixed_pred != fixed || above_pred != above) {
    throw std::logic_error(
        "involution classes differ from the closed-form prediction");
  }
  inv.below_image = below;
  inv.fixed = fixed;
  inv.above_image = above;

  // Every carrier element is the join of the irreducibles under it.
  for (int e = 0; e < irs.size(); ++e) {
    int acc = irs.zero();
    for (int j : formula_set) {
      if (irs.leq(j, e)) acc = irs.join(acc, j);
    }
    if (acc != e) {
      throw std::logic_error("element " + irs.element(e).to_string() +
                             " is not a join of irreducibles");
    }
  }
  return inv;
}

EffectivenessReport effectiveness_criteria(const QuasiOrder& r) {
  SetLattice topology = lower_topology(r);
  PointSet s = r.closed_points();
  EffectivenessReport rep;
  rep.cofinal = r.is_cofinal(s);
  rep.dense = pseudocomplement(topology, s).is_empty();
  DenseElements d = dense_elements(topology);
  rep.least_dense = d.least.has_value() && *d.least == s;
  Congruence gamma = glivenko_congruence(topology);
  rep.trace_is_glivenko = trace_congruence(topology, s) == gamma;
  rep.structurally_effective =
      drs_algebra(r) == sendlewski_algebra(topology, gamma, "glivenko");
  if (!rep.agree()) {
    throw std::logic_error("effectiveness criteria disagree");
  }
  return rep;
}

CarrierFormulaReport effective_carrier_check(const QuasiOrder& r) {
  PointSet s = r.closed_points();
  if (!r.is_cofinal(s)) {
    throw std::invalid_argument(
        "carrier formulas require the closed points to be cofinal");
  }
  SetLattice lower = lower_topology(r);
  SetLattice upper = upper_topology(r);
  Universe u = r.universe();

  std::vector<PairElement> drs_formula;
  for (const PointSet& a : lower.elements()) {
    for (const PointSet& b : lower.elements()) {
      if ((a & b).is_empty() &&
          (upper_approx(r, a) | upper_approx(r, b)) == PointSet::full(u)) {
        drs_formula.push_back({a, b});
      }
    }
  }
  std::sort(drs_formula.begin(), drs_formula.end());

  std::vector<PairElement> irs_formula;
  for (const PointSet& a : lower.elements()) {
    for (const PointSet& b : upper.elements()) {
      if (a.subset_of(b) &&
          (lower_approx(r, b) - upper_approx(r, a)).is_empty()) {
        irs_formula.push_back({a, b});
      }
    }
  }
  std::sort(irs_formula.begin(), irs_formula.end());

  CarrierFormulaReport rep;
  rep.drs_matches = drs_formula == drs_algebra(r).carrier();
  rep.irs_matches = irs_formula == irs_algebra(r).carrier();
  return rep;
}

bool poset_effectiveness(const QuasiOrder& r) {
  if (!r.is_antisymmetric()) {
    throw std::invalid_argument("relation is not antisymmetric");
  }
  EffectivenessReport rep = effectiveness_criteria(r);
  if (!rep.effective()) {
    throw std::logic_error("finite partial order failed the effectiveness "
                           "criteria; this cannot happen");
  }
  return true;
}

EquivalenceReport verify_equivalence_case(const QuasiOrder& e) {
  if (!e.is_symmetric()) {
    throw std::invalid_argument("relation is not symmetric");
  }
  SetLattice field = lower_topology(e);
  PointSet s = e.closed_points();
  EquivalenceReport rep;

  rep.field_of_sets = true;
  for (const PointSet& x : field.elements()) {
    if (!field.contains(x.complement())) rep.field_of_sets = false;
  }

  NelsonAlgebra drs = drs_algebra(e);
  Congruence trace = trace_congruence(field, s);
  std::vector<PairElement> formula;
  for (const PointSet& a : field.elements()) {
    for (const PointSet& b : field.elements()) {
      if ((a & b).is_empty() && trace.relates(a | b, field.top())) {
        formula.push_back({a, b});
      }
    }
  }
  std::sort(formula.begin(), formula.end());
  rep.drs_matches_formula = formula == drs.carrier();

  rep.semi_simple = is_semi_simple(drs);
  rep.glivenko_is_identity =
      glivenko_congruence(field).num_classes() == field.size();
  rep.effective_iff_identity =
      effectiveness_criteria(e).effective() == e.is_identity();
  return rep;
}

}  // namespace nforge
