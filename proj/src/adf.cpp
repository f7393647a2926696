#include "adfkit/adf.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "detail.hpp"
#include "formula_parse.hpp"
#include "scan.hpp"

namespace adfkit {

bool CSetFamily::contains(std::uint32_t mask) const {
  return std::binary_search(accepted.begin(), accepted.end(), mask);
}

std::string_view to_string(LinkClass c) {
  switch (c) {
    case LinkClass::Supporting:
      return "supporting";
    case LinkClass::Attacking:
      return "attacking";
    case LinkClass::Redundant:
      return "redundant";
    case LinkClass::Dependent:
      return "dependent";
  }
  return "?";
}

namespace {

// Acceptance formula with universe-resolved atom indices, for the hot
// evaluation loops.
struct RNode {
  Formula::Kind kind;
  int atom = -1;
  std::vector<RNode> kids;
};

RNode resolve(const Formula& f, const Universe& u) {
  RNode n;
  n.kind = f.kind();
  switch (f.kind()) {
    case Formula::Kind::Atom:
      n.atom = u.index(f.atom_name());
      if (n.atom < 0) {
        throw Error("acceptance condition mentions the undeclared statement '" +
                    f.atom_name() + "'");
      }
      break;
    case Formula::Kind::Neg:
      n.kids.push_back(resolve(f.child(), u));
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const Formula& k : f.children()) n.kids.push_back(resolve(k, u));
      break;
    default:
      break;
  }
  return n;
}

Truth eval_resolved(const RNode& n, const std::vector<Truth>& values) {
  switch (n.kind) {
    case Formula::Kind::Atom:
      return values[n.atom];
    case Formula::Kind::Verum:
      return Truth::True;
    case Formula::Kind::Falsum:
      return Truth::False;
    case Formula::Kind::Neg:
      return negate(eval_resolved(n.kids.front(), values));
    case Formula::Kind::And: {
      Truth acc = Truth::True;
      for (const RNode& k : n.kids) {
        acc = conj(acc, eval_resolved(k, values));
        if (acc == Truth::False) break;
      }
      return acc;
    }
    case Formula::Kind::Or: {
      Truth acc = Truth::False;
      for (const RNode& k : n.kids) {
        acc = disj(acc, eval_resolved(k, values));
        if (acc == Truth::True) break;
      }
      return acc;
    }
  }
  return Truth::Unknown;
}

}  // namespace

struct Adf::Impl {
  UniversePtr universe;
  std::vector<Formula> acceptance;
  std::vector<std::vector<int>> parents;
  std::vector<RNode> resolved;

  // consensus value of φ_s under `in`: meet of the classical evaluations
  // over every 2-valued completion of the unknown parents
  Truth consensus(int s, const std::vector<Truth>& in,
                  std::vector<Truth>& scratch) const {
    std::vector<int> unknown;
    for (int p : parents[s]) {
      if (in[p] == Truth::Unknown) unknown.push_back(p);
    }
    if (unknown.empty()) return eval_resolved(resolved[s], in);

    scratch = in;
    const std::size_t k = unknown.size();
    bool seen_true = false;
    bool seen_false = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      for (std::size_t j = 0; j < k; ++j) {
        bool bit = (mask >> (k - 1 - j)) & 1;
        scratch[unknown[j]] = bit ? Truth::True : Truth::False;
      }
      Truth t = eval_resolved(resolved[s], scratch);
      if (t == Truth::True) seen_true = true;
      if (t == Truth::False) seen_false = true;
      if (seen_true && seen_false) return Truth::Unknown;
    }
    return seen_true ? Truth::True : Truth::False;
  }

  void gamma_raw(const std::vector<Truth>& in, std::vector<Truth>& out,
                 std::vector<Truth>& scratch) const {
    for (int s = 0; s < universe->size(); ++s) {
      out[s] = consensus(s, in, scratch);
    }
  }

  void gamma_kleene_raw(const std::vector<Truth>& in,
                        std::vector<Truth>& out) const {
    for (int s = 0; s < universe->size(); ++s) {
      out[s] = eval_resolved(resolved[s], in);
    }
  }
};

Adf::Adf(UniversePtr statements, std::vector<Formula> acceptance) {
  auto impl = std::make_shared<Impl>();
  impl->universe = std::move(statements);
  impl->acceptance = std::move(acceptance);
  if (static_cast<int>(impl->acceptance.size()) != impl->universe->size()) {
    throw Error("one acceptance condition per statement is required");
  }
  for (int s = 0; s < impl->universe->size(); ++s) {
    impl->resolved.push_back(resolve(impl->acceptance[s], *impl->universe));
    std::vector<int> par;
    for (const std::string& a : impl->acceptance[s].atoms()) {
      par.push_back(impl->universe->index(a));
    }
    std::sort(par.begin(), par.end());
    impl->parents.push_back(std::move(par));
  }
  impl_ = std::move(impl);
}

const UniversePtr& Adf::statements() const { return impl_->universe; }

int Adf::size() const { return impl_->universe->size(); }

const Formula& Adf::acceptance(int s) const { return impl_->acceptance[s]; }

const Formula& Adf::acceptance(std::string_view name) const {
  int s = impl_->universe->index(name);
  if (s < 0) throw Error("unknown statement '" + std::string(name) + "'");
  return impl_->acceptance[s];
}

const std::vector<int>& Adf::parents(int s) const { return impl_->parents[s]; }

std::vector<Link> Adf::links() const {
  std::vector<Link> out;
  for (int s = 0; s < size(); ++s) {
    for (int r : impl_->parents[s]) {
      out.push_back({impl_->universe->name(r), impl_->universe->name(s)});
    }
  }
  return out;
}

Adf parse_adf(std::string_view text) {
  detail::Scanner scan(text);
  std::vector<std::string> order;
  std::vector<std::pair<std::string, Formula>> conditions;

  auto parse_atom = [&]() {
    std::string name = scan.ident();
    if (!atom_name_valid(name)) scan.fail("invalid atom name '" + name + "'");
    return name;
  };

  while (!scan.eof()) {
    if (!scan.ident_ahead()) scan.fail("expected s(...) or ac(...)");
    std::string item = scan.ident();
    if (item == "s") {
      scan.expect('(', "after s");
      std::string name = parse_atom();
      scan.expect(')', "to close s(...)");
      scan.expect('.', "after s(...)");
      if (std::find(order.begin(), order.end(), name) != order.end()) {
        scan.fail("statement '" + name + "' declared twice");
      }
      order.push_back(name);
    } else if (item == "ac") {
      scan.expect('(', "after ac");
      std::string name = parse_atom();
      scan.expect(',', "between statement and formula");
      Formula f = detail::parse_formula_at(scan);
      scan.expect(')', "to close ac(...)");
      scan.expect('.', "after ac(...)");
      conditions.emplace_back(std::move(name), std::move(f));
    } else {
      scan.fail("unknown item '" + item + "'");
    }
  }

  auto universe = Universe::of(order);
  std::vector<std::optional<Formula>> acceptance(order.size());
  for (auto& [name, f] : conditions) {
    int s = universe->index(name);
    if (s < 0) {
      throw Error("acceptance condition for undeclared statement '" + name + "'");
    }
    if (acceptance[s].has_value()) {
      throw Error("statement '" + name + "' has two acceptance conditions");
    }
    for (const std::string& atom : f.atoms()) {
      if (!universe->contains(atom)) {
        throw Error("acceptance condition of '" + name +
                    "' mentions the undeclared statement '" + atom + "'");
      }
    }
    acceptance[s] = std::move(f);
  }
  std::vector<Formula> formulas;
  formulas.reserve(order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    if (!acceptance[s].has_value()) {
      throw Error("statement '" + order[s] + "' has no acceptance condition");
    }
    formulas.push_back(std::move(*acceptance[s]));
  }
  return Adf(std::move(universe), std::move(formulas));
}

std::string render_adf(const Adf& d) {
  std::ostringstream out;
  for (int s = 0; s < d.size(); ++s) {
    out << "s(" << d.statements()->name(s) << ").\n";
  }
  for (int s = 0; s < d.size(); ++s) {
    out << "ac(" << d.statements()->name(s) << ","
        << render_formula(d.acceptance(s)) << ").\n";
  }
  return out.str();
}

Formula cset_to_formula(const CSetFamily& fam) {
  std::vector<Formula> disjuncts;
  for (std::uint32_t mask : fam.accepted) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < fam.parents.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) lits.push_back(Formula::atom(fam.parents[i]));
    }
    for (std::size_t i = 0; i < fam.parents.size(); ++i) {
      if (!(mask & (std::uint32_t{1} << i))) {
        lits.push_back(Formula::neg(Formula::atom(fam.parents[i])));
      }
    }
    disjuncts.push_back(Formula::conj(std::move(lits)));
  }
  return Formula::disj(std::move(disjuncts));
}

CSetFamily formula_to_cset(const Formula& f) {
  CSetFamily fam;
  fam.parents = f.atoms();
  if (fam.parents.size() > 20) {
    throw CapacityError("subset family over " +
                        std::to_string(fam.parents.size()) +
                        " parents is not materialized (limit 20)");
  }
  auto u = Universe::of(fam.parents);
  const std::uint32_t total = std::uint32_t{1} << fam.parents.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Truth> values(fam.parents.size(), Truth::False);
    for (std::size_t i = 0; i < fam.parents.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) values[i] = Truth::True;
    }
    if (eval_kleene(f, Interpretation(u, std::move(values))) == Truth::True) {
      fam.accepted.push_back(mask);
    }
  }
  return fam;
}

namespace {

void require_universe(const Adf& d, const Interpretation& v, const char* op) {
  if (!same_universe(d.statements(), v.universe())) {
    throw Error(std::string("universe mismatch in ") + op);
  }
}

// iterate `step` from all-u to its fixpoint; valid for ≤_i-monotone steps
template <typename Step>
std::vector<Truth> least_fixpoint(int n, Step step) {
  std::vector<Truth> cur(n, Truth::Unknown);
  std::vector<Truth> next(n, Truth::Unknown);
  for (int round = 0; round <= 2 * n + 2; ++round) {
    step(cur, next);
    if (next == cur) return cur;
    cur = next;
  }
  throw Error("fixpoint iteration did not converge");
}

// ternary odometer over `digits` (u < f < t, last atom fastest);
// returns false when the sequence is exhausted
bool next_ternary(std::vector<Truth>& digits) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (digits[i] == Truth::Unknown) {
      digits[i] = Truth::False;
      return true;
    }
    if (digits[i] == Truth::False) {
      digits[i] = Truth::True;
      return true;
    }
    digits[i] = Truth::Unknown;
  }
  return false;
}

}  // namespace

Interpretation gamma(const Adf& d, const Interpretation& v) {
  require_universe(d, v, "gamma");
  std::vector<Truth> out(d.size());
  std::vector<Truth> scratch;
  d.impl().gamma_raw(v.values(), out, scratch);
  return Interpretation(d.statements(), std::move(out));
}

Interpretation gamma_kleene(const Adf& d, const Interpretation& v) {
  require_universe(d, v, "gamma_kleene");
  std::vector<Truth> out(d.size());
  d.impl().gamma_kleene_raw(v.values(), out);
  return Interpretation(d.statements(), std::move(out));
}

bool is_model(const Adf& d, const Interpretation& v) {
  require_universe(d, v, "is_model");
  Interpretation g = gamma(d, v);
  for (int s = 0; s < d.size(); ++s) {
    if (v.value(s) != Truth::Unknown && v.value(s) != g.value(s)) return false;
  }
  return true;
}

std::vector<Interpretation> complete_models(const Adf& d, int bound) {
  detail::check_enum_bound(d.size(), bound, "complete_models");
  std::vector<Interpretation> out;
  std::vector<Truth> cur(d.size(), Truth::Unknown);
  std::vector<Truth> img(d.size());
  std::vector<Truth> scratch;
  do {
    d.impl().gamma_raw(cur, img, scratch);
    if (img == cur) out.emplace_back(d.statements(), cur);
  } while (next_ternary(cur));
  return out;
}

Interpretation grounded_model(const Adf& d) {
  std::vector<Truth> scratch;
  auto values = least_fixpoint(d.size(), [&](const std::vector<Truth>& in,
                                             std::vector<Truth>& out) {
    d.impl().gamma_raw(in, out, scratch);
  });
  return Interpretation(d.statements(), std::move(values));
}

std::vector<Interpretation> preferred_models(const Adf& d, int bound) {
  return detail::filter_maximal_info(complete_models(d, bound));
}

Interpretation grounded_model_kleene(const Adf& d) {
  auto values = least_fixpoint(d.size(), [&](const std::vector<Truth>& in,
                                             std::vector<Truth>& out) {
    d.impl().gamma_kleene_raw(in, out);
  });
  return Interpretation(d.statements(), std::move(values));
}

std::vector<Interpretation> complete_models_kleene(const Adf& d, int bound) {
  detail::check_enum_bound(d.size(), bound, "complete_models_kleene");
  std::vector<Interpretation> out;
  std::vector<Truth> cur(d.size(), Truth::Unknown);
  std::vector<Truth> img(d.size());
  do {
    d.impl().gamma_kleene_raw(cur, img);
    if (img == cur) out.emplace_back(d.statements(), cur);
  } while (next_ternary(cur));
  return out;
}

Adf reduct_brewka(const Adf& d, const Interpretation& v) {
  require_universe(d, v, "reduct_brewka");
  if (!v.is_two_valued()) {
    throw Error("reduct_brewka requires a 2-valued interpretation");
  }
  if (!is_model(d, v)) {
    throw Error("reduct_brewka requires a model of the framework");
  }
  std::vector<std::string> kept;
  for (int s = 0; s < d.size(); ++s) {
    if (v.value(s) == Truth::True) kept.push_back(d.statements()->name(s));
  }
  auto universe = Universe::of(kept);
  auto is_false = [&](const std::string& atom) {
    return v.value(atom) == Truth::False;
  };
  std::vector<Formula> formulas;
  for (const std::string& name : kept) {
    formulas.push_back(substitute_falsum(d.acceptance(name), is_false));
  }
  return Adf(std::move(universe), std::move(formulas));
}

std::vector<Interpretation> stable_models(const Adf& d, int bound) {
  detail::check_enum_bound(d.size(), bound, "stable_models");
  const int n = d.size();
  std::vector<Interpretation> out;
  std::vector<Truth> cur(n, Truth::False);
  std::vector<Truth> img(n);
  std::vector<Truth> scratch;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    for (int i = 0; i < n; ++i) {
      bool bit = (counter >> (n - 1 - i)) & 1;
      cur[i] = bit ? Truth::True : Truth::False;
    }
    d.impl().gamma_raw(cur, img, scratch);
    if (img != cur) continue;  // not a 2-valued model
    Interpretation v(d.statements(), cur);
    Adf reduced = reduct_brewka(d, v);
    Interpretation g = grounded_model(reduced);
    bool all_true = true;
    for (int s = 0; s < reduced.size(); ++s) {
      if (g.value(s) != Truth::True) {
        all_true = false;
        break;
      }
    }
    if (all_true) out.push_back(std::move(v));
  }
  return out;
}

LinkClass classify_link(const Adf& d, std::string_view source,
                        std::string_view target) {
  int s = d.statements()->index(target);
  int r = d.statements()->index(source);
  if (s < 0 || r < 0 ||
      !std::binary_search(d.parents(s).begin(), d.parents(s).end(), r)) {
    throw Error("(" + std::string(source) + "," + std::string(target) +
                ") is not a link of the framework");
  }
  CSetFamily fam = formula_to_cset(d.acceptance(s));
  std::size_t bit_index = 0;
  while (fam.parents[bit_index] != source) ++bit_index;
  const std::uint32_t rbit = std::uint32_t{1} << bit_index;
  const std::uint32_t total = std::uint32_t{1} << fam.parents.size();

  bool supporting = true;
  bool attacking = true;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (mask & rbit) continue;
    bool without = fam.contains(mask);
    bool with = fam.contains(mask | rbit);
    if (without && !with) supporting = false;
    if (!without && with) attacking = false;
  }
  if (supporting && attacking) return LinkClass::Redundant;
  if (supporting) return LinkClass::Supporting;
  if (attacking) return LinkClass::Attacking;
  return LinkClass::Dependent;
}

namespace {

// one full-DNF disjunct per accepted subset; a statement keeps its
// acceptance condition iff some disjunct is not false under v
std::vector<bool> part1_kept(const Adf& d, const std::vector<Truth>& values) {
  std::vector<bool> kept(d.size());
  for (int s = 0; s < d.size(); ++s) {
    CSetFamily fam = formula_to_cset(d.acceptance(s));
    std::vector<int> idx;
    idx.reserve(fam.parents.size());
    for (const std::string& p : fam.parents) {
      idx.push_back(d.statements()->index(p));
    }
    bool keep = false;
    for (std::uint32_t mask : fam.accepted) {
      Truth disjunct = Truth::True;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        Truth lit = values[idx[i]];
        if (!(mask & (std::uint32_t{1} << i))) lit = negate(lit);
        disjunct = conj(disjunct, lit);
        if (disjunct == Truth::False) break;
      }
      if (disjunct != Truth::False) {
        keep = true;
        break;
      }
    }
    kept[s] = keep;
  }
  return kept;
}

}  // namespace

Adf part1_reduct(const Adf& d, const Interpretation& v) {
  require_universe(d, v, "part1_reduct");
  std::vector<bool> kept = part1_kept(d, v.values());
  std::vector<Formula> formulas;
  for (int s = 0; s < d.size(); ++s) {
    formulas.push_back(kept[s] ? d.acceptance(s) : Formula::falsum());
  }
  return Adf(d.statements(), std::move(formulas));
}

std::vector<Interpretation> part1_models(const Adf& d, Part1Semantics kind,
                                         int bound) {
  detail::check_enum_bound(d.size(), bound, "part1_models");
  const int n = d.size();

  // the least fixpoint of the pointwise operator on part1_reduct(d, v)
  auto reduct_lfp = [&](const std::vector<Truth>& values) {
    std::vector<bool> kept = part1_kept(d, values);
    return least_fixpoint(n, [&](const std::vector<Truth>& in,
                                 std::vector<Truth>& out) {
      for (int s = 0; s < n; ++s) {
        out[s] = kept[s] ? eval_resolved(d.impl().resolved[s], in)
                         : Truth::False;
      }
    });
  };

  std::vector<Interpretation> out;
  std::vector<Truth> cur(n, Truth::Unknown);
  std::vector<Truth> img(n);
  do {
    switch (kind) {
      case Part1Semantics::Admissible: {
        d.impl().gamma_kleene_raw(cur, img);
        bool admissible = true;
        for (int s = 0; s < n; ++s) {
          if (!leq_info(cur[s], img[s])) {
            admissible = false;
            break;
          }
        }
        if (admissible) out.emplace_back(d.statements(), cur);
        break;
      }
      case Part1Semantics::SemiStable: {
        d.impl().gamma_kleene_raw(cur, img);
        if (img == cur) out.emplace_back(d.statements(), cur);
        break;
      }
      default: {  // the partial-stable based kinds
        if (reduct_lfp(cur) == cur) out.emplace_back(d.statements(), cur);
        break;
      }
    }
  } while (next_ternary(cur));

  switch (kind) {
    case Part1Semantics::Admissible:
    case Part1Semantics::PartialStable:
      return out;
    case Part1Semantics::Regular:
      return detail::filter_maximal_info(out);
    case Part1Semantics::SemiStable:
    case Part1Semantics::LStable:
      return detail::filter_minimal_unknown(out);
  }
  return out;
}

}  // namespace adfkit
