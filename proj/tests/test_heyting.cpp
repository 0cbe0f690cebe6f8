#include <doctest.h>

#include "common.hpp"
#include "nforge/approx.hpp"
#include "nforge/heyting.hpp"

using namespace nforge;

namespace {

SetLattice antichain_topology() { return lower_topology(testing::antichain()); }

SetLattice chain_topology() { return lower_topology(testing::chain2()); }

std::vector<int> classes_of(const Congruence& c) {
  std::vector<int> out;
  for (int i = 0; i < c.lattice().size(); ++i) out.push_back(c.class_of(i));
  return out;
}

}  // namespace

TEST_CASE("relative pseudocomplement on the antichain topology") {
  SetLattice l = antichain_topology();
  Universe u = l.universe();
  for (const PointSet& x : l.elements()) {
    CHECK(relative_pseudocomplement(l, x, x) == PointSet::full(u));
  }
  CHECK(relative_pseudocomplement(l, testing::pts(u, {1}), PointSet::empty(u)) ==
        testing::pts(u, {2}));
  CHECK(relative_pseudocomplement(l, PointSet::full(u),
                                  testing::pts(u, {1, 2})) ==
        testing::pts(u, {1, 2}));
  CHECK_THROWS_AS(
      relative_pseudocomplement(l, testing::pts(u, {0}), PointSet::empty(u)),
      std::invalid_argument);
}

TEST_CASE("rpc satisfies the adjunction exhaustively at desk scale") {
  for (const QuasiOrder& r : enumerate_quasiorders(3, RelationClass::All)) {
    SetLattice l = lower_topology(r);
    for (const PointSet& x : l.elements()) {
      for (const PointSet& y : l.elements()) {
        PointSet rpc = relative_pseudocomplement(l, x, y);
        // the definitional maximum agrees with the interior route
        for (const PointSet& z : l.elements()) {
          CHECK(((x & z).subset_of(y)) == z.subset_of(rpc));
        }
      }
    }
  }
}

TEST_CASE("pseudocomplements on the antichain topology") {
  SetLattice l = antichain_topology();
  Universe u = l.universe();
  CHECK(pseudocomplement(l, PointSet::empty(u)) == PointSet::full(u));
  CHECK(pseudocomplement(l, testing::pts(u, {1, 2})) == PointSet::empty(u));
  CHECK(pseudocomplement(l, testing::pts(u, {1})) == testing::pts(u, {2}));
}

TEST_CASE("double pseudocomplement laws") {
  for (const QuasiOrder& r : enumerate_quasiorders(3, RelationClass::All)) {
    SetLattice l = lower_topology(r);
    for (const PointSet& a : l.elements()) {
      PointSet a1 = pseudocomplement(l, a);
      PointSet a2 = pseudocomplement(l, a1);
      CHECK(a.subset_of(a2));
      CHECK(pseudocomplement(l, a2) == a1);
      for (const PointSet& b : l.elements()) {
        PointSet lhs = pseudocomplement(l, pseudocomplement(l, a & b));
        CHECK(lhs == (a2 & pseudocomplement(l, pseudocomplement(l, b))));
      }
    }
  }
}

TEST_CASE("dense elements") {
  SetLattice boolean = lower_topology(QuasiOrder::identity(Universe(2)));
  DenseElements d1 = dense_elements(boolean);
  CHECK(d1.dense == std::vector<PointSet>{PointSet::full(Universe(2))});
  CHECK(*d1.least == PointSet::full(Universe(2)));

  SetLattice anti = antichain_topology();
  Universe u = anti.universe();
  DenseElements d2 = dense_elements(anti);
  CHECK(d2.dense ==
        std::vector<PointSet>{testing::pts(u, {1, 2}), PointSet::full(u)});
  CHECK(*d2.least == testing::pts(u, {1, 2}));

  DenseElements d3 = dense_elements(lower_topology(testing::equivalence_01_2()));
  CHECK(d3.dense == std::vector<PointSet>{PointSet::full(u)});
}

TEST_CASE("density coincides with cofinality of the open set") {
  for (const QuasiOrder& r : enumerate_quasiorders(3, RelationClass::All)) {
    SetLattice l = lower_topology(r);
    for (const PointSet& x : l.elements()) {
      CHECK(pseudocomplement(l, x).is_empty() == r.is_cofinal(x));
    }
  }
}

TEST_CASE("filter congruences") {
  SetLattice l = antichain_topology();
  Universe u = l.universe();

  Congruence identity = filter_congruence(l, {PointSet::full(u)});
  CHECK(identity.num_classes() == l.size());

  Congruence theta =
      filter_congruence(l, {testing::pts(u, {1, 2}), PointSet::full(u)});
  CHECK(theta.num_classes() == 4);
  CHECK(theta.relates(testing::pts(u, {1, 2}), PointSet::full(u)));
  CHECK_FALSE(theta.relates(testing::pts(u, {1}), testing::pts(u, {2})));
  CHECK(is_congruence(theta));
  CHECK(is_boolean(theta));
  CHECK_FALSE(is_boolean(identity));  // {1,2} has no complement in L itself

  CHECK_THROWS_AS(filter_congruence(l, {}), std::invalid_argument);
  CHECK_THROWS_AS(filter_congruence(l, {testing::pts(u, {1})}),
                  std::invalid_argument);  // not upward closed
}

TEST_CASE("a filter congruence is Boolean exactly when D is inside F") {
  for (const QuasiOrder& r : enumerate_quasiorders(3, RelationClass::All)) {
    SetLattice l = lower_topology(r);
    DenseElements d = dense_elements(l);
    for (const PointSet& gen : l.elements()) {
      std::vector<PointSet> principal;
      for (const PointSet& x : l.elements()) {
        if (gen.subset_of(x)) principal.push_back(x);
      }
      Congruence c = filter_congruence(l, principal);
      CHECK(is_congruence(c));
      bool contains_dense = true;
      for (const PointSet& dd : d.dense) {
        bool found = false;
        for (const PointSet& f : principal) found = found || f == dd;
        contains_dense = contains_dense && found;
      }
      CHECK(is_boolean(c) == contains_dense);
    }
  }
}

TEST_CASE("trace congruences") {
  SetLattice boolean = lower_topology(QuasiOrder::identity(Universe(2)));
  CHECK(trace_congruence(boolean, PointSet::full(Universe(2))).num_classes() ==
        4);

  SetLattice anti = antichain_topology();
  Universe u = anti.universe();
  Congruence by_trace = trace_congruence(anti, testing::pts(u, {1, 2}));
  Congruence by_filter =
      filter_congruence(anti, {testing::pts(u, {1, 2}), PointSet::full(u)});
  CHECK(by_trace == by_filter);
  CHECK(is_boolean(by_trace));

  SetLattice field = lower_topology(testing::equivalence_01_2());
  Congruence c = trace_congruence(field, testing::pts(u, {2}));
  CHECK(c.num_classes() == 2);
  CHECK(c.relates(PointSet::empty(u), testing::pts(u, {0, 1})));
  CHECK(c.relates(testing::pts(u, {2}), PointSet::full(u)));

  // the top is not below the dense element {1} of the two-point chain
  SetLattice chain = chain_topology();
  CHECK_THROWS_AS(trace_congruence(chain, PointSet::full(Universe(2))),
                  std::invalid_argument);
}

TEST_CASE("Glivenko congruence") {
  SetLattice boolean = lower_topology(QuasiOrder::identity(Universe(2)));
  CHECK(glivenko_congruence(boolean).num_classes() == boolean.size());

  SetLattice anti = antichain_topology();
  Congruence gamma = glivenko_congruence(anti);
  CHECK(classes_of(gamma) == std::vector<int>{0, 1, 2, 3, 3});

  Congruence chain_gamma = glivenko_congruence(chain_topology());
  CHECK(classes_of(chain_gamma) == std::vector<int>{0, 1, 1});
}

TEST_CASE("Glivenko equals the closed-point trace exactly when S is cofinal") {
  for (const QuasiOrder& r : enumerate_quasiorders(3, RelationClass::All)) {
    SetLattice l = lower_topology(r);
    Congruence gamma = glivenko_congruence(l);
    CHECK(is_congruence(gamma));
    CHECK(is_boolean(gamma));
    Congruence trace = trace_congruence(l, r.closed_points());
    CHECK(is_congruence(trace));  // compatible with union, intersection, =>
    CHECK(is_boolean(trace));
    CHECK((trace == gamma) == r.is_cofinal(r.closed_points()));
  }
}

TEST_CASE("join irreducibles of small lattices") {
  FiniteLattice boolean(4, [](int a, int b) { return (a & ~b) == 0; });
  CHECK(boolean.join_irreducibles() == std::vector<int>{1, 2});

  FiniteLattice chain(3, [](int a, int b) { return a <= b; });
  CHECK(chain.join_irreducibles() == std::vector<int>{1, 2});
  CHECK(chain.bottom() == 0);
  CHECK(chain.top() == 2);
  CHECK(chain.covers() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK(boolean.relative_pseudocomplement(1, 0) == 2);
  CHECK(boolean.pseudocomplement(3) == 0);
}
