#include <doctest.h>

#include "adfkit/truth.hpp"

using namespace adfkit;

namespace {
const Truth kAll[3] = {Truth::False, Truth::Unknown, Truth::True};
}

TEST_CASE("negation is an involution fixing u") {
  CHECK(negate(Truth::True) == Truth::False);
  CHECK(negate(Truth::False) == Truth::True);
  CHECK(negate(Truth::Unknown) == Truth::Unknown);
  for (Truth t : kAll) CHECK(negate(negate(t)) == t);
}

TEST_CASE("kleene truth tables") {
  // conjunction: t iff both t, f iff some f
  CHECK(conj(Truth::True, Truth::True) == Truth::True);
  CHECK(conj(Truth::True, Truth::Unknown) == Truth::Unknown);
  CHECK(conj(Truth::Unknown, Truth::False) == Truth::False);
  CHECK(conj(Truth::Unknown, Truth::Unknown) == Truth::Unknown);
  // disjunction dual
  CHECK(disj(Truth::False, Truth::False) == Truth::False);
  CHECK(disj(Truth::Unknown, Truth::True) == Truth::True);
  CHECK(disj(Truth::Unknown, Truth::Unknown) == Truth::Unknown);
  for (Truth a : kAll) {
    for (Truth b : kAll) {
      CHECK(conj(a, b) == negate(disj(negate(a), negate(b))));
    }
  }
}

TEST_CASE("orders") {
  // information: u below t and f, which are incomparable
  CHECK(leq_info(Truth::Unknown, Truth::True));
  CHECK(leq_info(Truth::Unknown, Truth::False));
  CHECK(!leq_info(Truth::True, Truth::False));
  CHECK(!leq_info(Truth::False, Truth::True));
  for (Truth t : kAll) CHECK(leq_info(t, t));
  // truth: f < u < t, total
  CHECK(leq_truth(Truth::False, Truth::Unknown));
  CHECK(leq_truth(Truth::Unknown, Truth::True));
  CHECK(!leq_truth(Truth::True, Truth::Unknown));
}

TEST_CASE("consensus meet") {
  CHECK(meet(Truth::True, Truth::True) == Truth::True);
  CHECK(meet(Truth::False, Truth::False) == Truth::False);
  CHECK(meet(Truth::True, Truth::False) == Truth::Unknown);
  CHECK(meet(Truth::Unknown, Truth::True) == Truth::Unknown);
  for (Truth a : kAll) {
    for (Truth b : kAll) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(leq_info(meet(a, b), a));
      CHECK(leq_info(meet(a, b), b));
      for (Truth c : kAll) {
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        // greatest lower bound
        if (leq_info(c, a) && leq_info(c, b)) CHECK(leq_info(c, meet(a, b)));
      }
    }
  }
}
