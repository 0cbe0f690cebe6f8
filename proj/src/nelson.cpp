#include "nforge/nelson.hpp"

#include <algorithm>
#include <stdexcept>

namespace nforge {

namespace {

std::string elem_str(const NelsonAlgebra& a, int i) {
  return "#" + std::to_string(i) + "=" + a.element(i).to_string();
}

}  // namespace

NelsonAlgebra NelsonAlgebra::build(Universe u, PairRep rep,
                                   std::vector<PairElement> carrier,
                                   const PairOp& join, const PairOp& meet,
                                   const PairOp& imp, const PairUnaryOp& neg,
                                   PairElement zero, PairElement one,
                                   Provenance prov) {
  NelsonAlgebra a(u);
  a.rep_ = rep;
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  a.carrier_ = std::move(carrier);
  int m = a.size();
  auto locate = [&a](const PairElement& e, const char* op) {
    auto it = std::lower_bound(a.carrier_.begin(), a.carrier_.end(), e);
    if (it == a.carrier_.end() || !(*it == e)) {
      throw std::logic_error(std::string(op) + " left the carrier at " +
                             e.to_string());
    }
    return static_cast<int>(it - a.carrier_.begin());
  };
  a.join_.resize(static_cast<std::size_t>(m) * m);
  a.meet_.resize(static_cast<std::size_t>(m) * m);
  a.imp_.resize(static_cast<std::size_t>(m) * m);
  a.sneg_.resize(static_cast<std::size_t>(m));
  a.wneg_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const PairElement& x = a.element(i);
    a.sneg_[static_cast<std::size_t>(i)] = locate(neg(x), "strong negation");
    for (int j = 0; j < m; ++j) {
      const PairElement& y = a.element(j);
      a.join_[a.idx(i, j)] = locate(join(x, y), "join");
      a.meet_[a.idx(i, j)] = locate(meet(x, y), "meet");
      a.imp_[a.idx(i, j)] = locate(imp(x, y), "implication");
    }
  }
  a.zero_ = locate(zero, "zero constant");
  a.one_ = locate(one, "one constant");
  for (int i = 0; i < m; ++i) {
    a.wneg_[static_cast<std::size_t>(i)] = a.imp(i, a.zero_);
  }
  a.prov_ = std::move(prov);
  return a;
}

NelsonAlgebra NelsonAlgebra::from_tables(
    Universe u, PairRep rep, std::vector<PairElement> carrier,
    const std::vector<std::vector<int>>& join,
    const std::vector<std::vector<int>>& meet,
    const std::vector<std::vector<int>>& imp, std::vector<int> strong_neg,
    std::vector<int> weak_neg, int zero, int one, Provenance prov) {
  NelsonAlgebra a(u);
  a.rep_ = rep;
  a.carrier_ = std::move(carrier);
  int m = a.size();
  if (m == 0) throw std::invalid_argument("algebra carrier is empty");
  if (!std::is_sorted(a.carrier_.begin(), a.carrier_.end()) ||
      std::adjacent_find(a.carrier_.begin(), a.carrier_.end()) !=
          a.carrier_.end()) {
    throw std::invalid_argument(
        "algebra carrier is not in canonical order or has duplicates");
  }
  auto flatten = [m](const std::vector<std::vector<int>>& t, const char* name) {
    if (static_cast<int>(t.size()) != m) {
      throw std::invalid_argument(std::string(name) + " table has wrong size");
    }
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != m) {
        throw std::invalid_argument(std::string(name) + " row has wrong size");
      }
      for (int v : row) {
        if (v < 0 || v >= m) {
          throw std::invalid_argument(std::string(name) +
                                      " entry out of range");
        }
        flat.push_back(v);
      }
    }
    return flat;
  };
  auto check_unary = [m](const std::vector<int>& t, const char* name) {
    if (static_cast<int>(t.size()) != m) {
      throw std::invalid_argument(std::string(name) + " table has wrong size");
    }
    for (int v : t) {
      if (v < 0 || v >= m) {
        throw std::invalid_argument(std::string(name) + " entry out of range");
      }
    }
  };
  a.join_ = flatten(join, "join");
  a.meet_ = flatten(meet, "meet");
  a.imp_ = flatten(imp, "implication");
  check_unary(strong_neg, "strong negation");
  check_unary(weak_neg, "weak negation");
  a.sneg_ = std::move(strong_neg);
  a.wneg_ = std::move(weak_neg);
  if (zero < 0 || zero >= m || one < 0 || one >= m) {
    throw std::invalid_argument("constant index out of range");
  }
  a.zero_ = zero;
  a.one_ = one;
  a.prov_ = std::move(prov);
  return a;
}

int NelsonAlgebra::index_of(const PairElement& e) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), e);
  if (it == carrier_.end() || !(*it == e)) {
    throw std::invalid_argument("pair " + e.to_string() +
                                " is not a carrier element");
  }
  return static_cast<int>(it - carrier_.begin());
}

bool NelsonAlgebra::contains(const PairElement& e) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), e);
}

FiniteLattice NelsonAlgebra::lattice_view() const {
  return FiniteLattice(size(),
                       [this](int a, int b) { return join(a, b) == b; });
}

bool operator==(const NelsonAlgebra& a, const NelsonAlgebra& b) {
  return a.u_ == b.u_ && a.rep_ == b.rep_ && a.carrier_ == b.carrier_ &&
         a.join_ == b.join_ && a.meet_ == b.meet_ && a.imp_ == b.imp_ &&
         a.sneg_ == b.sneg_ && a.wneg_ == b.wneg_ && a.zero_ == b.zero_ &&
         a.one_ == b.one_;
}

NelsonAlgebra sendlewski_algebra(const SetLattice& h, const Congruence& theta,
                                 std::string congruence_name) {
  if (!(theta.lattice() == h)) {
    throw std::invalid_argument("congruence is over a different lattice");
  }
  if (!is_congruence(theta)) {
    throw std::invalid_argument("relation is not a congruence of the lattice");
  }
  if (!is_boolean(theta)) {
    throw std::invalid_argument(
        "pair construction needs a Boolean congruence");
  }
  std::vector<PairElement> carrier;
  for (const PointSet& x : h.elements()) {
    for (const PointSet& y : h.elements()) {
      if ((x & y).is_empty() && theta.relates(x | y, h.top())) {
        carrier.push_back({x, y});
      }
    }
  }
  Provenance prov;
  prov.kind = Provenance::Kind::Sendlewski;
  prov.congruence_name = std::move(congruence_name);
  prov.effective = theta == glivenko_congruence(h);
  prov.heyting = std::make_shared<SetLattice>(h);
  auto join = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left | b.left, a.right & b.right};
  };
  auto meet = [](const PairElement& a, const PairElement& b) {
    return PairElement{a.left & b.left, a.right | b.right};
  };
  auto imp = [&h](const PairElement& a, const PairElement& b) {
    return PairElement{relative_pseudocomplement(h, a.left, b.left),
                       a.left & b.right};
  };
  auto neg = [](const PairElement& a) {
    return PairElement{a.right, a.left};
  };
  return NelsonAlgebra::build(
      h.universe(), PairRep::Disjoint, std::move(carrier), join, meet, imp,
      neg, PairElement{h.bottom(), h.top()}, PairElement{h.top(), h.bottom()},
      std::move(prov));
}

std::optional<Violation> CheckReport::first(const std::string& law) const {
  for (const Violation& v : violations) {
    if (v.law == law) return v;
  }
  return std::nullopt;
}

namespace {

void report(CheckReport& rep, std::string law, std::vector<int> witness,
            std::string detail) {
  rep.violations.push_back({std::move(law), std::move(witness),
                            std::move(detail)});
}

}  // namespace

CheckReport verify_kleene_axioms(const NelsonAlgebra& a) {
  CheckReport rep;
  int m = a.size();
  for (int x = 0; x < m; ++x) {
    if (a.join(x, x) != x || a.meet(x, x) != x) {
      report(rep, "lattice_idempotent", {x},
             "x|x or x&x differs from x at " + elem_str(a, x));
    }
    if (a.join(x, a.zero()) != x || a.meet(x, a.one()) != x) {
      report(rep, "lattice_bounds", {x},
             "bounds are not neutral at " + elem_str(a, x));
    }
    if (a.strong_neg(a.strong_neg(x)) != x) {
      report(rep, "kleene_involution", {x},
             "~~x differs from x at " + elem_str(a, x));
    }
    for (int y = 0; y < m; ++y) {
      if (a.join(x, y) != a.join(y, x) || a.meet(x, y) != a.meet(y, x)) {
        report(rep, "lattice_commutative", {x, y},
               "join or meet is not commutative at " + elem_str(a, x) + ", " +
                   elem_str(a, y));
      }
      if (a.join(x, a.meet(x, y)) != x || a.meet(x, a.join(x, y)) != x) {
        report(rep, "lattice_absorption", {x, y},
               "absorption fails at " + elem_str(a, x) + ", " + elem_str(a, y));
      }
      bool le = a.leq(x, y);
      bool nle = a.leq(a.strong_neg(y), a.strong_neg(x));
      if (le != nle) {
        report(rep, "kleene_antitone", {x, y},
               "x<=y iff ~y<=~x fails at " + elem_str(a, x) + ", " +
                   elem_str(a, y));
      }
      int lhs = a.meet(x, a.strong_neg(x));
      int rhs = a.join(y, a.strong_neg(y));
      if (!a.leq(lhs, rhs)) {
        report(rep, "kleene_normal", {x, y},
               "x&~x <= y|~y fails at " + elem_str(a, x) + ", " +
                   elem_str(a, y));
      }
      for (int z = 0; z < m; ++z) {
        if (a.join(a.join(x, y), z) != a.join(x, a.join(y, z)) ||
            a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z))) {
          report(rep, "lattice_associative", {x, y, z},
                 "associativity fails at " + elem_str(a, x) + ", " +
                     elem_str(a, y) + ", " + elem_str(a, z));
        }
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) {
          report(rep, "lattice_distributive", {x, y, z},
                 "distributivity fails at " + elem_str(a, x) + ", " +
                     elem_str(a, y) + ", " + elem_str(a, z));
        }
      }
    }
  }
  return rep;
}

CheckReport verify_nelson_axioms(const NelsonAlgebra& a) {
  CheckReport rep;
  int m = a.size();
  for (int x = 0; x < m; ++x) {
    if (a.weak_neg(x) != a.imp(x, a.zero())) {
      report(rep, "weak_negation_table", {x},
             "stored !x differs from x->0 at " + elem_str(a, x));
    }
    for (int y = 0; y < m; ++y) {
      for (int c = 0; c < m; ++c) {
        bool premise =
            a.leq(a.meet(x, c), a.join(a.strong_neg(x), y));
        bool residual = a.leq(c, a.imp(x, y));
        if (premise != residual) {
          report(rep, "nelson_residuation", {x, y, c},
                 "x&c <= ~x|y iff c <= x->y fails at " + elem_str(a, x) +
                     ", " + elem_str(a, y) + ", " + elem_str(a, c));
        }
        if (a.imp(a.meet(x, y), c) != a.imp(x, a.imp(y, c))) {
          report(rep, "nelson_exportation", {x, y, c},
                 "(x&y)->z differs from x->(y->z) at " + elem_str(a, x) +
                     ", " + elem_str(a, y) + ", " + elem_str(a, c));
        }
      }
    }
  }
  return rep;
}

bool is_semi_simple(const NelsonAlgebra& a) {
  for (int x = 0; x < a.size(); ++x) {
    if (a.join(x, a.weak_neg(x)) != a.one()) return false;
  }
  return true;
}

int truth_operator(const NelsonAlgebra& a, int x, bool force) {
  const Provenance& prov = a.provenance();
  if (!prov.heyting) {
    throw std::invalid_argument(
        "truth operator needs the underlying Heyting algebra; this algebra "
        "does not carry one");
  }
  if (!prov.effective && !force) {
    throw std::invalid_argument(
        "truth operator is defined on effective lattices only (use force to "
        "compute it anyway)");
  }
  const SetLattice& h = *prov.heyting;
  const PairElement& e = a.element(x);
  PointSet lhs = e.left;
  PointSet rhs = a.rep() == PairRep::Increasing ? e.right.complement() : e.right;
  PointSet l2 = pseudocomplement(h, pseudocomplement(h, lhs));
  PointSet r2 = pseudocomplement(h, pseudocomplement(h, rhs));
  PairElement out{l2, a.rep() == PairRep::Increasing ? r2.complement() : r2};
  if (!a.contains(out)) {
    throw std::runtime_error("truth operator left the carrier: T" +
                             e.to_string() + " = " + out.to_string());
  }
  return a.index_of(out);
}

PairElement truth_operator(const NelsonAlgebra& a, const PairElement& x,
                           bool force) {
  return a.element(truth_operator(a, a.index_of(x), force));
}

int IrreducibleMap::g(int element_index) const {
  for (std::size_t k = 0; k < irreducibles.size(); ++k) {
    if (irreducibles[k] == element_index) return image[k];
  }
  throw std::invalid_argument("element is not join-irreducible");
}

std::vector<int> IrreducibleMap::fixed_points() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < irreducibles.size(); ++k) {
    if (irreducibles[k] == image[k]) out.push_back(irreducibles[k]);
  }
  return out;
}

IrreducibleMap irreducible_involution(const NelsonAlgebra& a) {
  FiniteLattice lat = a.lattice_view();
  IrreducibleMap out;
  out.irreducibles = lat.join_irreducibles();
  for (int j : out.irreducibles) {
    std::vector<int> above;
    int nj = a.strong_neg(j);
    for (int x = 0; x < a.size(); ++x) {
      if (!lat.leq(x, nj)) above.push_back(x);
    }
    int g = lat.meet_all(above);
    if (!std::count(out.irreducibles.begin(), out.irreducibles.end(), g)) {
      throw std::logic_error("involution image of " + elem_str(a, j) +
                             " is not join-irreducible: " + elem_str(a, g));
    }
    out.image.push_back(g);
  }
  return out;
}

CheckReport verify_involution_conditions(const NelsonAlgebra& a) {
  CheckReport rep;
  FiniteLattice lat = a.lattice_view();
  IrreducibleMap m = irreducible_involution(a);
  const std::vector<int>& js = m.irreducibles;
  for (std::size_t p = 0; p < js.size(); ++p) {
    int x = js[p], gx = m.image[p];
    if (m.g(gx) != x) {
      report(rep, "g_involution", {x},
             "g(g(x)) differs from x at " + elem_str(a, x));
    }
    if (!lat.leq(x, gx) && !lat.leq(gx, x)) {
      report(rep, "g_comparable", {x},
             "x and g(x) are incomparable at " + elem_str(a, x));
    }
    for (std::size_t q = 0; q < js.size(); ++q) {
      int y = js[q], gy = m.image[q];
      if (lat.leq(x, y) && !lat.leq(gy, gx)) {
        report(rep, "g_antitone", {x, y},
               "x<=y but g(y)<=g(x) fails at " + elem_str(a, x) + ", " +
                   elem_str(a, y));
      }
      if (lat.leq(x, gx) && lat.leq(x, gy) && lat.leq(y, gx) &&
          lat.leq(y, gy)) {
        bool found = false;
        for (int z : js) {
          if (lat.leq(x, z) && lat.leq(y, z) && lat.leq(z, gx) &&
              lat.leq(z, gy)) {
            found = true;
            break;
          }
        }
        if (!found) {
          report(rep, "g_interpolation", {x, y},
                 "no irreducible z with x,y <= z <= g(x),g(y) for " +
                     elem_str(a, x) + ", " + elem_str(a, y));
        }
      }
    }
  }
  return rep;
}

bool satisfies_representation_condition(const NelsonAlgebra& a) {
  FiniteLattice lat = a.lattice_view();
  IrreducibleMap m = irreducible_involution(a);
  std::vector<int> fixed = m.fixed_points();
  for (int j : m.irreducibles) {
    bool anchored = false;
    for (int k : fixed) {
      if (lat.leq(j, k) || lat.leq(k, j)) {
        anchored = true;
        break;
      }
    }
    if (!anchored) return false;
  }
  return true;
}

NegationReconstruction negation_from_involution(const NelsonAlgebra& a) {
  FiniteLattice lat = a.lattice_view();
  IrreducibleMap m = irreducible_involution(a);
  NegationReconstruction out;
  out.table.resize(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    std::vector<int> parts;
    for (std::size_t k = 0; k < m.irreducibles.size(); ++k) {
      if (!lat.leq(m.image[k], x)) parts.push_back(m.irreducibles[k]);
    }
    out.table[static_cast<std::size_t>(x)] = lat.join_all(parts);
    if (out.table[static_cast<std::size_t>(x)] != a.strong_neg(x) &&
        !out.mismatch) {
      out.mismatch = x;
    }
  }
  return out;
}

}  // namespace nforge
