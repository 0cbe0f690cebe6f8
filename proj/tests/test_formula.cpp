#include <doctest.h>

#include <random>

#include "nforge/formula.hpp"

using namespace nforge;

TEST_CASE("parsing respects precedence and associativity") {
  FormulaPtr f = parse_formula("~p -> q -> r");
  REQUIRE(f->kind() == Formula::Kind::Imp);
  CHECK(f->lhs()->kind() == Formula::Kind::Strong);
  CHECK(f->lhs()->lhs()->name() == "p");
  REQUIRE(f->rhs()->kind() == Formula::Kind::Imp);
  CHECK(f->rhs()->lhs()->name() == "q");
  CHECK(f->rhs()->rhs()->name() == "r");

  FormulaPtr g = parse_formula("T(p) & !q");
  REQUIRE(g->kind() == Formula::Kind::And);
  CHECK(g->lhs()->kind() == Formula::Kind::Truth);
  CHECK(g->rhs()->kind() == Formula::Kind::Weak);

  FormulaPtr h = parse_formula("p | q & r");
  REQUIRE(h->kind() == Formula::Kind::Or);
  CHECK(h->lhs()->name() == "p");
  CHECK(h->rhs()->kind() == Formula::Kind::And);
}

TEST_CASE("iff is sugar for the two implications") {
  FormulaPtr f = parse_formula("p <-> q");
  FormulaPtr expected = parse_formula("(p -> q) & (q -> p)");
  CHECK(*f == *expected);
}

TEST_CASE("constants and parentheses") {
  CHECK(parse_formula("0")->kind() == Formula::Kind::Zero);
  CHECK(parse_formula("1")->kind() == Formula::Kind::One);
  CHECK(*parse_formula("(p | q) & r") ==
        *Formula::conj(Formula::disj(Formula::atom("p"), Formula::atom("q")),
                       Formula::atom("r")));
}

TEST_CASE("implication chains to the right, printing restores parens") {
  FormulaPtr right = parse_formula("a -> b -> c");
  CHECK(*right->rhs() == *parse_formula("b -> c"));
  FormulaPtr left = parse_formula("(a -> b) -> c");
  CHECK(left->lhs()->kind() == Formula::Kind::Imp);
  CHECK(left->to_string() == "(a -> b) -> c");
  CHECK(right->to_string() == "a -> b -> c");
  CHECK(parse_formula("~(p & q)")->to_string() == "~(p & q)");
}

TEST_CASE("syntax errors carry positions") {
  auto check_pos = [](const std::string& text, std::size_t expected) {
    try {
      parse_formula(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.position == expected);
    }
  };
  check_pos("p &", 3);
  check_pos("(p", 2);
  check_pos("p @ q", 2);
  check_pos("p q", 2);
  check_pos("T p", 2);
}

TEST_CASE("T is reserved") {
  CHECK_THROWS_AS(Formula::atom("T"), std::invalid_argument);
  CHECK(parse_formula("Tx")->name() == "Tx");  // longer names stay atoms
}

TEST_CASE("atom collection and truth detection") {
  FormulaPtr f = parse_formula("q & p -> T(p | r)");
  CHECK(f->atoms() == std::vector<std::string>{"p", "q", "r"});
  CHECK(f->contains_truth());
  CHECK_FALSE(parse_formula("p -> p")->contains_truth());
}

namespace {

FormulaPtr random_formula(std::mt19937_64& rng, int depth) {
  int pick = depth <= 0 ? static_cast<int>(rng() % 4)
                        : static_cast<int>(rng() % 9);
  switch (pick) {
    case 0:
      return Formula::atom(std::string(1, static_cast<char>('p' + rng() % 4)));
    case 1:
      return Formula::zero();
    case 2:
      return Formula::one();
    case 3:
      return Formula::atom("x" + std::to_string(rng() % 3));
    case 4:
      return Formula::strong_not(random_formula(rng, depth - 1));
    case 5:
      return Formula::weak_not(random_formula(rng, depth - 1));
    case 6:
      return Formula::conj(random_formula(rng, depth - 1),
                           random_formula(rng, depth - 1));
    case 7:
      return Formula::disj(random_formula(rng, depth - 1),
                           random_formula(rng, depth - 1));
    default:
      return rng() % 3 == 0
                 ? Formula::truth(random_formula(rng, depth - 1))
                 : Formula::implies(random_formula(rng, depth - 1),
                                    random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("printing and reparsing is the identity on random formulas") {
  std::mt19937_64 rng(0x666f726d756c61u);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = random_formula(rng, 8);
    FormulaPtr g = parse_formula(f->to_string());
    CHECK(*f == *g);
  }
}

TEST_CASE("random byte soup never crashes the parser") {
  std::mt19937_64 rng(0x66757a7au);
  const std::string alphabet = "pq r()->~!&|<>01TZ_#";
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    for (std::size_t k = 0; k < rng() % 24; ++k) {
      text += alphabet[rng() % alphabet.size()];
    }
    try {
      FormulaPtr f = parse_formula(text);
      // accepted input must round-trip
      CHECK(*parse_formula(f->to_string()) == *f);
    } catch (const ParseError& e) {
      CHECK(e.position <= text.size());
    } catch (const std::invalid_argument&) {
      // reserved-name errors are fine too
    }
  }
}
