#ifndef NFORGE_LOGIC_HPP_
#define NFORGE_LOGIC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "nforge/formula.hpp"
#include "nforge/nelson.hpp"
#include "nforge/relation.hpp"

namespace nforge {

struct SearchCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atom assignment into a fixed algebra's carrier, by index.
using Valuation = std::map<std::string, int>;

// Structural recursion through the algebra's tables; `!x` evaluates as
// `x -> 0`. Formulas containing T need an effective algebra unless `force`.
int evaluate(const Formula& f, const NelsonAlgebra& a, const Valuation& v,
             bool force_truth = false);

struct ValidityResult {
  bool valid = false;
  Valuation witness;  // first refuting valuation in canonical order
};

// Exhausts all |carrier|^atoms valuations in lexicographic order (atoms
// sorted alphabetically, carrier indices ascending, last atom fastest).
// Throws SearchCapExceeded when valuations x formula size exceeds the cap.
ValidityResult is_valid(const Formula& f, const NelsonAlgebra& a,
                        std::uint64_t eval_cap = 10'000'000,
                        bool force_truth = false);

struct Countermodel {
  QuasiOrder relation;
  NelsonAlgebra algebra;  // increasing-representation algebra of `relation`
  Valuation valuation;
};

struct SearchResult {
  int max_n = 0;
  bool effective_only = false;  // search ran over effective models only
  std::optional<Countermodel> countermodel;
  bool found() const { return countermodel.has_value(); }
};

// Walks n = 1..max_n and every quasiorder in canonical order, checking f in
// each increasing rough set algebra; returns the first refutation. Formulas
// containing T restrict the walk to effective models. Exhaustion means "no
// countermodel up to max_n", never theoremhood.
SearchResult countermodel_search(const Formula& f, int max_n,
                                 bool effective_only = false, int bound = 5,
                                 std::uint64_t eval_cap = 10'000'000,
                                 int jobs = 1);

// Two-valued truth-table decision with ~ and ! both read classically.
// Rejects formulas containing T.
bool classical_validity(const Formula& f, std::uint64_t eval_cap = 10'000'000);

// Compares classical validity of a T-free formula with the absence of
// effective-model countermodels for T(f) up to max_n.
struct ProbeResult {
  bool classical = false;
  SearchResult search;  // over T(f), effective models only
  bool agreement = false;
};

ProbeResult classical_truth_probe(const FormulaPtr& f, int max_n,
                                  int bound = 5,
                                  std::uint64_t eval_cap = 10'000'000,
                                  int jobs = 1);

}  // namespace nforge

#endif  // NFORGE_LOGIC_HPP_
