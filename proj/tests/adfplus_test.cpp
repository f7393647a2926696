#include <doctest.h>

#include "adfkit/adfplus.hpp"
#include "adfkit/nlp.hpp"
#include "adfkit/translate.hpp"
#include "adfkit/verify.hpp"
#include "testutil.hpp"

using namespace adfkit;
using namespace adfkit::testutil;

TEST_CASE("attacking-framework recognition") {
  CHECK(std::holds_alternative<AdfPlus>(check_adfplus(parse_adf(kExAdf2))));

  auto rejected = check_adfplus(parse_adf("s(a). s(b). ac(a, b). ac(b, c(v))."));
  REQUIRE(std::holds_alternative<AdfPlusViolation>(rejected));
  const auto& v = std::get<AdfPlusViolation>(rejected);
  CHECK(v.source == "b");
  CHECK(v.target == "a");
  CHECK(v.witness.empty());  // R = ∅

  // the support-based translation always produces an attacking framework
  SplitMix64 rng(53);
  GenConfig cfg;
  for (int i = 0; i < 30; ++i) {
    Program p = gen_program(rng.next(), cfg);
    CHECK(std::holds_alternative<AdfPlus>(check_adfplus(xi(p).framework())));
  }
}

TEST_CASE("maximal accepted subsets") {
  CSetFamily fam;
  fam.parents = {"b", "c"};
  fam.accepted = {0u, 1u};  // ∅, {b}
  CSetFamily mx = cmax(fam);
  CHECK(mx.accepted == std::vector<std::uint32_t>{1u});

  CSetFamily only_empty;
  only_empty.parents = {"b"};
  only_empty.accepted = {0u};
  CHECK(cmax(only_empty).accepted == std::vector<std::uint32_t>{0u});

  CSetFamily xip_p;  // accepted {∅, {a}, {p}} over (a, p)
  xip_p.parents = {"a", "p"};
  xip_p.accepted = {0u, 1u, 2u};
  CHECK(cmax(xip_p).accepted == std::vector<std::uint32_t>{1u, 2u});

  CSetFamily not_closed;
  not_closed.parents = {"a", "b"};
  not_closed.accepted = {3u};  // {a,b} without its subsets
  CHECK_THROWS_AS(cmax(not_closed), Error);
}

TEST_CASE("simplified acceptance conditions") {
  AdfPlus d = require_adfplus(parse_adf(kSection3Adf));
  CHECK(d.simplified(0) == parse_formula("neg(c)"));

  AdfPlus xip = xi(parse_program(kExNlp));
  int p = xip.framework().statements()->index("p");
  CHECK(classically_equivalent(xip.simplified(p),
                               parse_formula("or(neg(p), neg(a))")));

  AdfPlus single = require_adfplus(parse_adf("s(b). s(x). ac(x, neg(b)). ac(b, c(f))."));
  CHECK(single.simplified(single.framework().statements()->index("x")) ==
        parse_formula("neg(b)"));

  // classically equivalent to the original condition, exhaustively
  SplitMix64 rng(59);
  GenConfig cfg;
  for (int i = 0; i < 40; ++i) {
    AdfPlus gen = gen_adfplus(rng.next(), cfg);
    for (int s = 0; s < gen.size(); ++s) {
      CHECK(classically_equivalent(gen.simplified(s),
                                   gen.framework().acceptance(s)));
    }
  }
}

TEST_CASE("redundant links by counting") {
  AdfPlus d = require_adfplus(parse_adf(kSection3Adf));
  auto links = redundant_links_by_count(d);
  REQUIRE(links.size() == 1);
  CHECK(links[0] == Link{"b", "a"});

  AdfPlus none = require_adfplus(parse_adf("s(b). s(x). ac(x, neg(b)). ac(b, c(f))."));
  CHECK(redundant_links_by_count(none).empty());

  // counting agrees with the definition-based classification and with
  // membership in every maximal subset
  SplitMix64 rng(61);
  GenConfig cfg;
  cfg.max_parents = 5;
  for (int i = 0; i < 60; ++i) {
    CSetFamily fam = gen_downward_family(rng.next(), cfg);
    std::vector<std::string> names = fam.parents;
    names.push_back("t0");
    std::vector<Formula> formulas(fam.parents.size(), Formula::falsum());
    formulas.push_back(cset_to_formula(fam));
    Adf adf(Universe::of(names), std::move(formulas));
    AdfPlus plus = require_adfplus(adf);

    std::vector<std::string> by_count;
    for (const Link& l : redundant_links_by_count(plus)) {
      if (l.target == "t0") by_count.push_back(l.source);
    }
    std::vector<std::string> by_def;
    for (int r : adf.parents(adf.size() - 1)) {
      if (classify_link(adf, adf.statements()->name(r), "t0") ==
          LinkClass::Redundant) {
        by_def.push_back(adf.statements()->name(r));
      }
    }
    CHECK(sorted(by_count) == sorted(by_def));
  }
}

TEST_CASE("pointwise operator on attacking frameworks") {
  AdfPlus d2 = require_adfplus(parse_adf(kExAdf2));
  Interpretation all_u = Interpretation::all_unknown(d2.framework().statements());
  CHECK(gamma_plus(d2, all_u) == all_u);

  std::vector<std::string> pos = {"b"};
  std::vector<std::string> neg = {"a"};
  Interpretation v = Interpretation::from_literals(
      d2.framework().statements(), pos, neg);
  CHECK(gamma_plus(d2, v).value("e") == Truth::False);

  Program p = parse_program(kExNlp);
  AdfPlus xip = xi(p);
  std::vector<std::string> cd = {"c", "d"};
  Interpretation w =
      Interpretation::from_literals(xip.framework().statements(), cd, {});
  CHECK(gamma_plus(xip, w) == w);

  // equal to the consensus operator on every interpretation, exhaustively
  // for frameworks of up to seven statements
  SplitMix64 rng(67);
  GenConfig cfg;
  cfg.max_statements = 7;
  for (int i = 0; i < 25; ++i) {
    AdfPlus d = gen_adfplus(rng.next(), cfg);
    InterpretationStream stream(d.framework().statements());
    while (auto u = stream.next()) {
      CHECK(gamma_plus(d, *u) == gamma(d.framework(), *u));
    }
  }
}

TEST_CASE("stable models of attacking frameworks") {
  AdfPlus xip = xi(parse_program(kExNlp));
  CHECK(model_strings(stable_models_plus(xip)) ==
        std::vector<std::string>{"{b, c, d, p, ~a}"});

  CHECK(stable_models_plus(require_adfplus(parse_adf(kExAdf2))).empty());

  AdfPlus forced = require_adfplus(parse_adf("s(a). ac(a, c(v))."));
  CHECK(model_strings(stable_models_plus(forced)) ==
        std::vector<std::string>{"{a}"});

  // equal to the reduct-based stable models
  SplitMix64 rng(71);
  GenConfig cfg;
  for (int i = 0; i < 40; ++i) {
    AdfPlus d = gen_adfplus(rng.next(), cfg);
    CHECK(model_strings(stable_models_plus(d)) ==
          model_strings(stable_models(d.framework())));
  }
}

TEST_CASE("l-stable models") {
  CHECK(model_strings(l_stable_models(parse_adf(kExAdf2))) ==
        std::vector<std::string>{"{b, ~a, ~e}"});

  AdfPlus xip = xi(parse_program(kExNlp));
  CHECK(model_strings(l_stable_models(xip.framework())) ==
        std::vector<std::string>{"{b, c, d, p, ~a}"});

  // when stable models exist the two semantics coincide
  SplitMix64 rng(73);
  GenConfig cfg;
  for (int i = 0; i < 60; ++i) {
    AdfPlus d = gen_adfplus(rng.next(), cfg);
    auto stable = stable_models_plus(d);
    if (!stable.empty()) {
      CHECK(model_strings(l_stable_models(d.framework())) ==
            model_strings(stable));
    }
  }
}
