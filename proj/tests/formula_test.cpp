#include <doctest.h>

#include "adfkit/formula.hpp"
#include "adfkit/verify.hpp"
#include "testutil.hpp"

using namespace adfkit;

namespace {

Interpretation interp(const UniversePtr& u, std::vector<std::string> pos,
                      std::vector<std::string> neg) {
  return Interpretation::from_literals(u, pos, neg);
}

// independent two-valued oracle, recursion over the raw AST
bool classical_eval(const Formula& f, const Interpretation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return v.value(f.atom_name()) == Truth::True;
    case Formula::Kind::Verum:
      return true;
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Neg:
      return !classical_eval(f.child(), v);
    case Formula::Kind::And: {
      for (const Formula& k : f.children()) {
        if (!classical_eval(k, v)) return false;
      }
      return true;
    }
    case Formula::Kind::Or: {
      for (const Formula& k : f.children()) {
        if (classical_eval(k, v)) return true;
      }
      return false;
    }
  }
  return false;
}

Formula random_formula(SplitMix64& rng, int n_atoms, int depth) {
  std::uint64_t roll = rng.bounded(depth > 0 ? 10 : 6);
  switch (roll) {
    case 0:
    case 1:
    case 2:
    case 3:
      return Formula::atom(std::string(1, 'a' + rng.bounded(n_atoms)));
    case 4:
      return Formula::verum();
    case 5:
      return Formula::falsum();
    case 6:
    case 7:
      return Formula::neg(random_formula(rng, n_atoms, depth - 1));
    default: {
      std::vector<Formula> kids;
      std::size_t arity = 2 + rng.bounded(2);
      for (std::size_t i = 0; i < arity; ++i) {
        kids.push_back(random_formula(rng, n_atoms, depth - 1));
      }
      return roll == 8 ? Formula::conj(std::move(kids))
                       : Formula::disj(std::move(kids));
    }
  }
}

}  // namespace

TEST_CASE("formula parsing and rendering") {
  CHECK(parse_formula("c(v)").kind() == Formula::Kind::Verum);
  CHECK(parse_formula("c(f)").kind() == Formula::Kind::Falsum);
  CHECK(parse_formula(" neg ( a ) ") == Formula::neg(Formula::atom("a")));
  CHECK(parse_formula("and(a,b,c)").children().size() == 3);
  CHECK(render_formula(parse_formula("or(neg(a), and(b, c(v)))")) ==
        "or(neg(a),and(b,c(v)))");
  // bare connective names without parentheses are atoms
  CHECK(parse_formula("neg").kind() == Formula::Kind::Atom);
  // a one-argument connective collapses to its argument
  CHECK(parse_formula("and(a)") == Formula::atom("a"));

  CHECK_THROWS_AS(parse_formula("xor(a,b)"), ParseError);
  CHECK_THROWS_AS(parse_formula("and(a"), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("c(x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("neg(A)"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);

  // comments and whitespace are insignificant
  CHECK(parse_formula("and( % comment\n a, b)") ==
        parse_formula("and(a,b)"));

  // render/parse round trip on random formulas
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, 4, 3);
    CHECK(parse_formula(render_formula(f)) == f);
  }
}

TEST_CASE("atoms are collected in first-appearance order") {
  Formula f = parse_formula("or(and(b, neg(c)), and(neg(b), a))");
  CHECK(f.atoms() == std::vector<std::string>{"b", "c", "a"});
  CHECK(Formula::verum().atoms().empty());
}

TEST_CASE("kleene evaluation") {
  auto u = Universe::of({"b", "e"});
  Interpretation v = Interpretation::all_unknown(u);
  CHECK(eval_kleene(parse_formula("neg(b)"), v) == Truth::Unknown);
  CHECK(eval_kleene(parse_formula("or(b, neg(b))"), v) == Truth::Unknown);
  Interpretation w = interp(u, {}, {"b"});  // b false, e unknown
  CHECK(eval_kleene(parse_formula("and(neg(b), e)"), w) == Truth::Unknown);
  CHECK(eval_kleene(parse_formula("c(v)"), v) == Truth::True);
  CHECK(eval_kleene(parse_formula("c(f)"), v) == Truth::False);
  CHECK_THROWS_WITH_AS(eval_kleene(parse_formula("zz"), v),
                       "unknown atom 'zz'", Error);
}

TEST_CASE("kleene evaluation is information-monotone") {
  auto u = Universe::of({"a", "b", "c", "d"});
  std::vector<Interpretation> all = enumerate_interpretations(u);
  SplitMix64 rng(17);
  for (int i = 0; i < 40; ++i) {
    Formula f = random_formula(rng, 4, 3);
    std::vector<Truth> values;
    values.reserve(all.size());
    for (const Interpretation& v : all) values.push_back(eval_kleene(f, v));
    for (std::size_t x = 0; x < all.size(); ++x) {
      for (std::size_t y = 0; y < all.size(); ++y) {
        if (leq_info(all[x], all[y])) {
          CHECK(leq_info(values[x], values[y]));
        }
      }
    }
  }
}

TEST_CASE("kleene agrees with classical evaluation on 2-valued inputs") {
  auto u = Universe::of({"a", "b", "c", "d"});
  SplitMix64 rng(23);
  for (int i = 0; i < 60; ++i) {
    Formula f = random_formula(rng, 4, 3);
    for (const Interpretation& v : enumerate_interpretations(u)) {
      if (!v.is_two_valued()) continue;
      Truth t = eval_kleene(f, v);
      CHECK(t != Truth::Unknown);
      CHECK((t == Truth::True) == classical_eval(f, v));
    }
  }
}

TEST_CASE("falsum substitution") {
  Formula f = parse_formula("or(and(neg(b), e), d)");
  Formula g = substitute_falsum(
      f, [](const std::string& a) { return a == "b" || a == "d"; });
  CHECK(g == parse_formula("or(and(neg(c(f)), e), c(f))"));
}
