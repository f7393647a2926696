#include <doctest.h>

#include "adfkit/interpretation.hpp"
#include "adfkit/verify.hpp"
#include "testutil.hpp"

using namespace adfkit;

TEST_CASE("universe construction and lookup") {
  auto u = Universe::of({"a", "b", "c"});
  CHECK(u->size() == 3);
  CHECK(u->index("b") == 1);
  CHECK(u->index("z") == -1);
  CHECK_THROWS_AS(Universe::of({"a", "a"}), Error);
  CHECK_THROWS_AS(Universe::of({"A"}), Error);
  CHECK_THROWS_AS(Universe::of({""}), Error);
  CHECK(atom_name_valid("x_1A"));
  CHECK(!atom_name_valid("1x"));
}

TEST_CASE("literal set rendering round-trips") {
  auto u = Universe::of({"a", "b", "c"});
  std::vector<std::string> pos = {"a"};
  std::vector<std::string> neg = {"b"};
  Interpretation v = Interpretation::from_literals(u, pos, neg);
  CHECK(v.value("a") == Truth::True);
  CHECK(v.value("b") == Truth::False);
  CHECK(v.value("c") == Truth::Unknown);
  CHECK(v.to_set_string() == "{a, ~b}");
  CHECK(v.to_set_string(true) == "{a, ¬b}");

  // round-trip over every interpretation of a small universe
  for (const Interpretation& w : enumerate_interpretations(u)) {
    Interpretation back =
        Interpretation::from_literals(u, w.true_atoms(), w.false_atoms());
    CHECK(back == w);
  }

  std::vector<std::string> clash = {"a"};
  CHECK_THROWS_AS(Interpretation::from_literals(u, clash, clash), Error);
  CHECK_THROWS_WITH_AS(v.value("zz"), "unknown atom 'zz'", Error);
}

TEST_CASE("leq_info and meet on interpretations") {
  auto u = Universe::of({"a", "b"});
  Interpretation all_u = Interpretation::all_unknown(u);
  std::vector<Interpretation> all = enumerate_interpretations(u);
  for (const Interpretation& v : all) {
    CHECK(leq_info(all_u, v));  // all-u is the least element
    CHECK(leq_info(v, v));
    CHECK(meet(v, v) == v);
    for (const Interpretation& w : all) {
      Interpretation m = meet(v, w);
      CHECK(m == meet(w, v));
      CHECK(leq_info(m, v));
      CHECK(leq_info(m, w));
      for (const Interpretation& x : all) {
        CHECK(meet(meet(v, w), x) == meet(v, meet(w, x)));
        if (leq_info(x, v) && leq_info(x, w)) CHECK(leq_info(x, m));
      }
    }
  }

  std::vector<std::string> a = {"a"};
  Interpretation pa = Interpretation::from_literals(u, a, {});
  Interpretation na = Interpretation::from_literals(u, {}, a);
  CHECK(!leq_info(pa, na));
  CHECK(meet(pa, na).value("a") == Truth::Unknown);

  std::vector<std::string> ab = {"a", "b"};
  std::vector<std::string> b = {"b"};
  Interpretation vab = Interpretation::from_literals(u, ab, {});
  Interpretation vanb = Interpretation::from_literals(u, a, b);
  CHECK(meet(vab, vanb).to_set_string() == "{a}");

  auto other = Universe::of({"a"});
  CHECK_THROWS_AS(leq_info(pa, Interpretation::all_unknown(other)), Error);
  CHECK_THROWS_AS(meet(pa, Interpretation::all_unknown(other)), Error);
}

TEST_CASE("two-valued extensions") {
  auto u = Universe::of({"b"});
  Interpretation all_u = Interpretation::all_unknown(u);
  std::vector<std::string> rel = {"b"};
  auto ext = two_valued_extensions(all_u, rel);
  REQUIRE(ext.size() == 2);
  CHECK(ext[0].to_set_string() == "{~b}");
  CHECK(ext[1].to_set_string() == "{b}");

  auto u2 = Universe::of({"a", "b"});
  std::vector<std::string> a = {"a"};
  Interpretation va = Interpretation::from_literals(u2, a, {});
  auto ext2 = two_valued_extensions(va, rel);
  REQUIRE(ext2.size() == 2);
  CHECK(ext2[0].to_set_string() == "{a, ~b}");
  CHECK(ext2[1].to_set_string() == "{a, b}");

  // a 2-valued interpretation extends only to itself
  std::vector<std::string> b = {"b"};
  Interpretation two = Interpretation::from_literals(u2, a, b);
  std::vector<std::string> both = {"a", "b"};
  auto ext3 = two_valued_extensions(two, both);
  REQUIRE(ext3.size() == 1);
  CHECK(ext3[0] == two);

  // untouched outside `relevant`: a stays unknown
  auto ext4 = two_valued_extensions(Interpretation::all_unknown(u2), rel);
  REQUIRE(ext4.size() == 2);
  CHECK(ext4[0].value("a") == Truth::Unknown);

  // |extensions| = 2^(unknowns among relevant)
  SplitMix64 rng(11);
  auto u3 = Universe::of({"a", "b", "c", "d"});
  for (const Interpretation& v : enumerate_interpretations(u3)) {
    std::vector<int> relevant;
    for (int i = 0; i < 4; ++i) {
      if (rng.bounded(2)) relevant.push_back(i);
    }
    int unknowns = 0;
    for (int i : relevant) {
      if (v.value(i) == Truth::Unknown) ++unknowns;
    }
    CHECK(two_valued_extensions(v, relevant).size() ==
          (std::size_t{1} << unknowns));
  }
}

TEST_CASE("interpretation enumeration") {
  auto empty = enumerate_interpretations(Universe::of({}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);

  CHECK(enumerate_interpretations(Universe::of({"a"})).size() == 3);

  auto u = Universe::of({"a", "b"});
  auto all = enumerate_interpretations(u);
  REQUIRE(all.size() == 9);
  CHECK(all.front().to_set_string() == "{}");  // all-u first
  // exactly once each, in ternary order
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].ternary_code() < all[i].ternary_code());
  }
  CHECK(all[0].ternary_code() == 0);
  CHECK(all[8].ternary_code() == 8);

  auto big = Universe::of({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j",
                           "k", "l", "m", "n", "o"});
  CHECK_THROWS_AS(InterpretationStream(big), CapacityError);
  CHECK_THROWS_WITH_AS(InterpretationStream(big),
                       "enumeration over 15 atoms exceeds the bound of 14 "
                       "(14348907 interpretations)",
                       CapacityError);
}
