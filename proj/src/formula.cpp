#include "nforge/formula.hpp"

#include <algorithm>
#include <cctype>

namespace nforge {

FormulaPtr Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  if (name == "T") {
    throw std::invalid_argument("T is reserved for the truth operator");
  }
  return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::zero() {
  return FormulaPtr(new Formula(Kind::Zero, "", nullptr, nullptr));
}
FormulaPtr Formula::one() {
  return FormulaPtr(new Formula(Kind::One, "", nullptr, nullptr));
}
FormulaPtr Formula::strong_not(FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Strong, "", std::move(f), nullptr));
}
FormulaPtr Formula::weak_not(FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Weak, "", std::move(f), nullptr));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::And, "", std::move(a), std::move(b)));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Or, "", std::move(a), std::move(b)));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Imp, "", std::move(a), std::move(b)));
}
FormulaPtr Formula::truth(FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Truth, "", std::move(f), nullptr));
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) out.push_back(f.name());
  if (f.lhs()) collect_atoms(*f.lhs(), out);
  if (f.rhs()) collect_atoms(*f.rhs(), out);
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  collect_atoms(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Formula::contains_truth() const {
  if (kind_ == Kind::Truth) return true;
  if (lhs_ && lhs_->contains_truth()) return true;
  return rhs_ && rhs_->contains_truth();
}

int Formula::node_count() const {
  int n = 1;
  if (lhs_) n += lhs_->node_count();
  if (rhs_) n += rhs_->node_count();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
  if (!!a.lhs_ != !!b.lhs_ || !!a.rhs_ != !!b.rhs_) return false;
  if (a.lhs_ && !(*a.lhs_ == *b.lhs_)) return false;
  if (a.rhs_ && !(*a.rhs_ == *b.rhs_)) return false;
  return true;
}

namespace {

// Precedence levels for printing: Imp = 1, Or = 2, And = 3, unary = 4.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Imp:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Strong:
    case Formula::Kind::Weak:
      return 4;
    default:
      return 5;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool wrap = prec < min_prec;
  if (wrap) out += "(";
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      break;
    case Formula::Kind::Zero:
      out += "0";
      break;
    case Formula::Kind::One:
      out += "1";
      break;
    case Formula::Kind::Strong:
      out += "~";
      print(*f.lhs(), 4, out);
      break;
    case Formula::Kind::Weak:
      out += "!";
      print(*f.lhs(), 4, out);
      break;
    case Formula::Kind::Truth:
      out += "T(";
      print(*f.lhs(), 0, out);
      out += ")";
      break;
    case Formula::Kind::And:
      print(*f.lhs(), 3, out);
      out += " & ";
      print(*f.rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      print(*f.lhs(), 2, out);
      out += " | ";
      print(*f.rhs(), 3, out);
      break;
    case Formula::Kind::Imp:
      print(*f.lhs(), 2, out);
      out += " -> ";
      print(*f.rhs(), 1, out);
      break;
  }
  if (wrap) out += ")";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(const std::string& token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool peek(const std::string& token) {
    skip_space();
    return text_.compare(pos_, token.size(), token) == 0;
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_imp();
    while (eat("<->")) {
      FormulaPtr rhs = parse_imp();
      lhs = Formula::conj(Formula::implies(lhs, rhs),
                          Formula::implies(rhs, lhs));
    }
    return lhs;
  }

  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    skip_space();
    // `->` binds right; make sure not to eat the `-` of a stray token.
    if (!peek("<->") && eat("->")) {
      return Formula::implies(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek("|") && eat("|")) {
      lhs = Formula::disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek("&") && eat("&")) {
      lhs = Formula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    skip_space();
    if (eat("~")) return Formula::strong_not(parse_unary());
    if (eat("!")) return Formula::weak_not(parse_unary());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of formula", pos_);
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FormulaPtr inner = parse_iff();
      skip_space();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == '0') {
      ++pos_;
      return Formula::zero();
    }
    if (c == '1') {
      ++pos_;
      return Formula::one();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == "T") {
        if (!eat("(")) {
          throw ParseError("T is the truth operator and needs '('", pos_);
        }
        FormulaPtr inner = parse_iff();
        if (!eat(")")) throw ParseError("expected ')'", pos_);
        return Formula::truth(inner);
      }
      return Formula::atom(std::move(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

FormulaPtr parse_formula(const std::string& text) {
  return Parser(text).run();
}

}  // namespace nforge
