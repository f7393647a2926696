#include <doctest.h>

#include "adfkit/nlp.hpp"
#include "adfkit/verify.hpp"
#include "testutil.hpp"

using namespace adfkit;
using namespace adfkit::testutil;

namespace {

Interpretation interp(const Program& p, std::vector<std::string> pos,
                      std::vector<std::string> neg) {
  return Interpretation::from_literals(p.herbrand_base(), pos, neg);
}

}  // namespace

TEST_CASE("program parsing") {
  Program fact = parse_program("d.");
  CHECK(fact.rules().size() == 1);
  CHECK(fact.herbrand_base()->atoms() == std::vector<std::string>{"d"});

  Program p = parse_program(kExNlp);
  CHECK(p.rules().size() == 6);
  CHECK(p.herbrand_base()->atoms() ==
        std::vector<std::string>{"b", "c", "a", "d", "p"});

  Program self = parse_program("a :- not a.");
  CHECK(self.rules()[0].pos.empty());
  CHECK(self.rules()[0].neg == std::vector<int>{0});

  // duplicates inside a body collapse, first occurrence kept
  Program dup = parse_program("a :- b, c, b, not d, not d.");
  CHECK(dup.rules()[0].pos == std::vector<int>{1, 2});
  CHECK(dup.rules()[0].neg == std::vector<int>{3});

  CHECK_THROWS_WITH_AS(parse_program("A :- b."),
                       "variable-like token 'A' (atoms start with a "
                       "lowercase letter) (line 1, column 1)",
                       ParseError);
  CHECK_THROWS_AS(parse_program("a :- not B."), ParseError);
  CHECK_THROWS_AS(parse_program("a :- b"), ParseError);   // missing dot
  CHECK_THROWS_AS(parse_program("a :- ."), ParseError);
  CHECK_THROWS_AS(parse_program("not."), ParseError);     // reserved

  // '%' comments
  Program c = parse_program("% a program\na. % trailing\n");
  CHECK(c.rules().size() == 1);

  // render/parse round trip on generated programs
  SplitMix64 rng(83);
  GenConfig cfg;
  for (int i = 0; i < 60; ++i) {
    Program g = gen_program(rng.next(), cfg);
    Program back = parse_program(render_program(g));
    CHECK(*back.herbrand_base() == *g.herbrand_base());
    CHECK(back.rules() == g.rules());
  }
}

TEST_CASE("three-valued model condition") {
  Program p = parse_program(kExNlp);
  CHECK(is_model(p, interp(p, {"b", "c", "d", "p"}, {"a"})));
  CHECK(!is_model(p, Interpretation(p.herbrand_base(), Truth::False)));

  Program self = parse_program("a :- not a.");
  CHECK(!is_model(self, interp(self, {}, {"a"})));
  CHECK(is_model(self, interp(self, {"a"}, {})));
  CHECK(is_model(self, Interpretation::all_unknown(self.herbrand_base())));
}

TEST_CASE("program reduct") {
  Program p = parse_program(kExNlp);
  ReducedProgram r = reduct(p, interp(p, {"b", "c", "d", "p"}, {"a"}));
  // p :- c, d, not p is gone; b :- c, not a lost its negative literal
  REQUIRE(r.rules.size() == 5);
  const Universe& u = *p.herbrand_base();
  for (const ReducedRule& rule : r.rules) {
    if (u.name(rule.head) == "b") {
      CHECK(rule.body == std::vector<int>{u.index("c")});
      CHECK(!rule.has_unknown);
    }
    CHECK(u.name(rule.head) != "p" || rule.body.empty());
  }

  // all-u: every negative literal becomes the unknown atom
  ReducedProgram r2 = reduct(p, Interpretation::all_unknown(p.herbrand_base()));
  REQUIRE(r2.rules.size() == 6);
  for (std::size_t i = 0; i < r2.rules.size(); ++i) {
    CHECK(r2.rules[i].has_unknown == !p.rules()[i].neg.empty());
  }

  // a positive program is untouched
  Program pos = parse_program("a :- b.\nb.\n");
  ReducedProgram r3 = reduct(pos, Interpretation::all_unknown(pos.herbrand_base()));
  REQUIRE(r3.rules.size() == 2);
  CHECK(!r3.rules[0].has_unknown);
}

TEST_CASE("immediate-consequence step") {
  Program p = parse_program("a.\nb :- not c.\nc :- not b.\n");
  auto base = p.herbrand_base();
  Interpretation all_u = Interpretation::all_unknown(base);
  ReducedProgram r = reduct(p, all_u);

  Interpretation bottom(base, Truth::False);
  Interpretation out = psi(r, bottom);
  CHECK(out.value("a") == Truth::True);   // empty body
  CHECK(out.value("b") == Truth::Unknown);  // body is the unknown atom
  CHECK(out.value("c") == Truth::Unknown);

  // an atom with no rules is false
  Program q = parse_program("a :- b.");
  ReducedProgram rq = reduct(q, Interpretation::all_unknown(q.herbrand_base()));
  Interpretation oq = psi(rq, Interpretation(q.herbrand_base(), Truth::False));
  CHECK(oq.value("b") == Truth::False);
}

TEST_CASE("omega operator") {
  Program p = parse_program(kExNlp);
  Interpretation stable = interp(p, {"b", "c", "d", "p"}, {"a"});
  CHECK(omega(p, stable) == stable);
  Interpretation wf = interp(p, {"c", "d"}, {});
  CHECK(omega(p, wf) == wf);
  Interpretation third = interp(p, {"a", "c", "d"}, {"b"});
  CHECK(omega(p, third) == third);
  Interpretation not_fix = interp(p, {"a"}, {});
  CHECK(!(omega(p, not_fix) == not_fix));
}

TEST_CASE("logic-program semantics on the worked example") {
  Program p = parse_program(kExNlp);
  CHECK(model_strings(lp_models(p, LpSemantics::PartialStable)) ==
        sorted({"{c, d}", "{b, c, d, p, ~a}", "{c, a, d, ~b}"}));
  CHECK(model_strings(lp_models(p, LpSemantics::WellFounded)) ==
        std::vector<std::string>{"{c, d}"});
  CHECK(model_strings(lp_models(p, LpSemantics::Regular)) ==
        sorted({"{b, c, d, p, ~a}", "{c, a, d, ~b}"}));
  CHECK(model_strings(lp_models(p, LpSemantics::Stable)) ==
        std::vector<std::string>{"{b, c, d, p, ~a}"});
  CHECK(model_strings(lp_models(p, LpSemantics::LStable)) ==
        std::vector<std::string>{"{b, c, d, p, ~a}"});
}

TEST_CASE("empty program") {
  Program p = parse_program("% nothing\n");
  CHECK(p.atom_count() == 0);
  auto psm = lp_models(p, LpSemantics::PartialStable);
  REQUIRE(psm.size() == 1);
  CHECK(psm[0].size() == 0);
  CHECK(lp_models(p, LpSemantics::WellFounded).size() == 1);
}

TEST_CASE("partial stable properties on random programs") {
  SplitMix64 rng(89);
  GenConfig cfg;
  for (int i = 0; i < 60; ++i) {
    Program p = gen_program(rng.next(), cfg);
    auto psm = lp_models(p, LpSemantics::PartialStable);

    // every partial stable model is a model
    for (const Interpretation& v : psm) CHECK(is_model(p, v));

    // the well-founded model is the ≤_i-least partial stable model
    auto wf = lp_models(p, LpSemantics::WellFounded);
    REQUIRE(wf.size() == 1);
    bool in_psm = false;
    for (const Interpretation& v : psm) {
      CHECK(leq_info(wf[0], v));
      if (wf[0] == v) in_psm = true;
    }
    CHECK(in_psm);

    // stable ⊆ lstable ⊆ regular ⊆ psm
    auto contains_all = [](const std::vector<std::string>& sub,
                           const std::vector<std::string>& super) {
      for (const std::string& s : sub) {
        if (std::find(super.begin(), super.end(), s) == super.end()) {
          return false;
        }
      }
      return true;
    };
    auto stable = model_strings(lp_models(p, LpSemantics::Stable));
    auto lstable = model_strings(lp_models(p, LpSemantics::LStable));
    auto regular = model_strings(lp_models(p, LpSemantics::Regular));
    auto all = model_strings(psm);
    if (!stable.empty()) CHECK(contains_all(stable, lstable));
    CHECK(contains_all(lstable, regular));
    CHECK(contains_all(regular, all));
  }
}

TEST_CASE("omega ignores positive body order") {
  SplitMix64 rng(97);
  GenConfig cfg;
  for (int i = 0; i < 40; ++i) {
    Program p = gen_program(rng.next(), cfg);
    std::vector<Rule> reversed = p.rules();
    for (Rule& r : reversed) {
      std::reverse(r.pos.begin(), r.pos.end());
      std::reverse(r.neg.begin(), r.neg.end());
    }
    Program q(p.herbrand_base(), std::move(reversed));
    InterpretationStream stream(p.herbrand_base());
    while (auto v = stream.next()) {
      CHECK(omega(p, *v) == omega(q, *v));
    }
  }
}

TEST_CASE("psi iteration reaches its fixpoint quickly") {
  // observational bound: at most |HB|+2 applications on generated programs
  SplitMix64 rng(101);
  GenConfig cfg;
  for (int i = 0; i < 60; ++i) {
    Program p = gen_program(rng.next(), cfg);
    const int n = p.atom_count();
    InterpretationStream stream(p.herbrand_base());
    while (auto v = stream.next()) {
      ReducedProgram r = reduct(p, *v);
      Interpretation cur(p.herbrand_base(), Truth::False);
      int steps = 0;
      while (true) {
        ++steps;
        Interpretation next = psi(r, cur);
        if (next == cur) break;
        cur = std::move(next);
        REQUIRE(steps <= n + 2);
      }
      CHECK(cur == omega(p, *v));
    }
  }
}
