#include "nforge/logic.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "nforge/roughsets.hpp"

namespace nforge {

namespace {

// Compiled form: atoms resolved to slots, T resolved to a table.
struct Evaluator {
  Evaluator(const Formula& f, const NelsonAlgebra& a, bool force_truth)
      : algebra(a), atoms(f.atoms()) {
    if (f.contains_truth()) {
      truth_table.resize(static_cast<std::size_t>(a.size()));
      for (int i = 0; i < a.size(); ++i) {
        truth_table[static_cast<std::size_t>(i)] =
            truth_operator(a, i, force_truth);
      }
    }
  }

  int slot(const std::string& name) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
    return static_cast<int>(it - atoms.begin());
  }

  int eval(const Formula& f, const std::vector<int>& env) const {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return env[static_cast<std::size_t>(slot(f.name()))];
      case Formula::Kind::Zero:
        return algebra.zero();
      case Formula::Kind::One:
        return algebra.one();
      case Formula::Kind::Strong:
        return algebra.strong_neg(eval(*f.lhs(), env));
      case Formula::Kind::Weak:
        return algebra.imp(eval(*f.lhs(), env), algebra.zero());
      case Formula::Kind::And:
        return algebra.meet(eval(*f.lhs(), env), eval(*f.rhs(), env));
      case Formula::Kind::Or:
        return algebra.join(eval(*f.lhs(), env), eval(*f.rhs(), env));
      case Formula::Kind::Imp:
        return algebra.imp(eval(*f.lhs(), env), eval(*f.rhs(), env));
      case Formula::Kind::Truth:
        return truth_table[static_cast<std::size_t>(eval(*f.lhs(), env))];
    }
    throw std::logic_error("unreachable formula kind");
  }

  const NelsonAlgebra& algebra;
  std::vector<std::string> atoms;
  std::vector<int> truth_table;
};

}  // namespace

int evaluate(const Formula& f, const NelsonAlgebra& a, const Valuation& v,
             bool force_truth) {
  Evaluator ev(f, a, force_truth);
  std::vector<int> env(ev.atoms.size());
  for (std::size_t i = 0; i < ev.atoms.size(); ++i) {
    auto it = v.find(ev.atoms[i]);
    if (it == v.end()) {
      throw std::invalid_argument("valuation does not map atom " +
                                  ev.atoms[i]);
    }
    if (it->second < 0 || it->second >= a.size()) {
      throw std::invalid_argument("valuation index out of range for atom " +
                                  ev.atoms[i]);
    }
    env[i] = it->second;
  }
  return ev.eval(f, env);
}

ValidityResult is_valid(const Formula& f, const NelsonAlgebra& a,
                        std::uint64_t eval_cap, bool force_truth) {
  Evaluator ev(f, a, force_truth);
  std::size_t k = ev.atoms.size();
  std::uint64_t m = static_cast<std::uint64_t>(a.size());
  std::uint64_t nodes = static_cast<std::uint64_t>(f.node_count());
  std::uint64_t valuations = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (valuations > eval_cap / (m == 0 ? 1 : m) + 1) {
      throw SearchCapExceeded("valuation space exceeds the evaluation cap");
    }
    valuations *= m;
  }
  if (valuations * nodes > eval_cap) {
    throw SearchCapExceeded(
        "search needs " + std::to_string(valuations * nodes) +
        " evaluations; cap is " + std::to_string(eval_cap));
  }

  std::vector<int> env(k, 0);
  ValidityResult out;
  out.valid = true;
  while (true) {
    if (ev.eval(f, env) != a.one()) {
      out.valid = false;
      for (std::size_t i = 0; i < k; ++i) out.witness[ev.atoms[i]] = env[i];
      return out;
    }
    // lexicographic odometer, last atom fastest
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++env[i] < a.size()) break;
      env[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

namespace {

std::optional<Countermodel> check_one(const Formula& f, const QuasiOrder& r,
                                      std::uint64_t eval_cap) {
  NelsonAlgebra a = irs_algebra(r);
  ValidityResult v = is_valid(f, a, eval_cap);
  if (v.valid) return std::nullopt;
  return Countermodel{r, std::move(a), std::move(v.witness)};
}

}  // namespace

SearchResult countermodel_search(const Formula& f, int max_n,
                                 bool effective_only, int bound,
                                 std::uint64_t eval_cap, int jobs) {
  SearchResult out;
  out.max_n = max_n;
  out.effective_only = effective_only || f.contains_truth();
  RelationClass kind = out.effective_only ? RelationClass::CofinalClosedPoints
                                          : RelationClass::All;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<QuasiOrder> models = enumerate_quasiorders(n, kind, bound);
    if (jobs <= 1 || models.size() < 4) {
      for (const QuasiOrder& r : models) {
        if (auto cm = check_one(f, r, eval_cap)) {
          out.countermodel = std::move(cm);
          return out;
        }
      }
      continue;
    }
    // Parallel over relations; the reported witness is still the canonical
    // minimum because chunks map back to enumeration indices.
    int workers = std::min<int>(jobs, static_cast<int>(models.size()));
    std::vector<std::future<std::pair<std::size_t, std::optional<Countermodel>>>>
        futures;
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w]() {
        std::pair<std::size_t, std::optional<Countermodel>> best{models.size(),
                                                                 std::nullopt};
        for (std::size_t i = static_cast<std::size_t>(w); i < models.size();
             i += static_cast<std::size_t>(workers)) {
          if (auto cm = check_one(f, models[i], eval_cap)) {
            best = {i, std::move(cm)};
            break;
          }
        }
        return best;
      }));
    }
    std::size_t best_index = models.size();
    std::optional<Countermodel> best;
    for (auto& fut : futures) {
      auto [idx, cm] = fut.get();
      if (cm && idx < best_index) {
        best_index = idx;
        best = std::move(cm);
      }
    }
    if (best) {
      out.countermodel = std::move(best);
      return out;
    }
  }
  return out;
}

namespace {

bool classical_eval(const Formula& f, const std::vector<std::string>& atoms,
                    std::uint64_t bits) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
      return (bits >> (it - atoms.begin())) & 1;
    }
    case Formula::Kind::Zero:
      return false;
    case Formula::Kind::One:
      return true;
    case Formula::Kind::Strong:
    case Formula::Kind::Weak:
      return !classical_eval(*f.lhs(), atoms, bits);
    case Formula::Kind::And:
      return classical_eval(*f.lhs(), atoms, bits) &&
             classical_eval(*f.rhs(), atoms, bits);
    case Formula::Kind::Or:
      return classical_eval(*f.lhs(), atoms, bits) ||
             classical_eval(*f.rhs(), atoms, bits);
    case Formula::Kind::Imp:
      return !classical_eval(*f.lhs(), atoms, bits) ||
             classical_eval(*f.rhs(), atoms, bits);
    case Formula::Kind::Truth:
      throw std::invalid_argument(
          "classical validity is defined for T-free formulas");
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

bool classical_validity(const Formula& f, std::uint64_t eval_cap) {
  if (f.contains_truth()) {
    throw std::invalid_argument(
        "classical validity is defined for T-free formulas");
  }
  std::vector<std::string> atoms = f.atoms();
  if (atoms.size() >= 60 ||
      (std::uint64_t{1} << atoms.size()) *
              static_cast<std::uint64_t>(f.node_count()) >
          eval_cap) {
    throw SearchCapExceeded("truth table exceeds the evaluation cap");
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << atoms.size());
       ++bits) {
    if (!classical_eval(f, atoms, bits)) return false;
  }
  return true;
}

ProbeResult classical_truth_probe(const FormulaPtr& f, int max_n, int bound,
                                  std::uint64_t eval_cap, int jobs) {
  ProbeResult out;
  out.classical = classical_validity(*f, eval_cap);
  FormulaPtr wrapped = Formula::truth(f);
  out.search = countermodel_search(*wrapped, max_n, /*effective_only=*/true,
                                   bound, eval_cap, jobs);
  out.agreement = out.classical == !out.search.found();
  return out;
}

}  // namespace nforge
