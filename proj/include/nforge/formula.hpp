#ifndef NFORGE_FORMULA_HPP_
#define NFORGE_FORMULA_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nforge {

// Propositional formulas over atoms with strong negation `~`, weak negation
// `!`, the classical-truth operator `T(...)`, and constants 0, 1. Immutable
// trees shared by pointer.
class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Kind { Atom, Zero, One, Strong, Weak, And, Or, Imp, Truth };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }

  // Atom names sorted and deduplicated.
  std::vector<std::string> atoms() const;
  bool contains_truth() const;
  int node_count() const;

  // Printed form reparses to an identical tree. `<->` never appears in
  // output; it is input sugar only.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

  static FormulaPtr atom(std::string name);
  static FormulaPtr zero();
  static FormulaPtr one();
  static FormulaPtr strong_not(FormulaPtr f);
  static FormulaPtr weak_not(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr truth(FormulaPtr f);

 private:
  Formula(Kind k, std::string name, FormulaPtr l, FormulaPtr r)
      : kind_(k), name_(std::move(name)), lhs_(std::move(l)),
        rhs_(std::move(r)) {}

  Kind kind_;
  std::string name_;
  FormulaPtr lhs_, rhs_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// Grammar, loosest to tightest: `a -> b` (right-associative, with `a <-> b`
// sugar for `(a -> b) & (b -> a)` below it), `a | b`, `a & b`, then the
// unary `~`, `!`, `T(...)`, then atoms, `0`, `1` and parentheses.
FormulaPtr parse_formula(const std::string& text);

}  // namespace nforge

#endif  // NFORGE_FORMULA_HPP_
