#include "adfkit/nlp.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"
#include "scan.hpp"

namespace adfkit {

struct Program::Impl {
  UniversePtr base;
  std::vector<Rule> rules;
  std::vector<std::vector<int>> rules_by_head;
};

Program::Program(UniversePtr herbrand_base, std::vector<Rule> rules) {
  auto impl = std::make_shared<Impl>();
  impl->base = std::move(herbrand_base);
  impl->rules = std::move(rules);
  const int n = impl->base->size();
  std::vector<bool> used(n, false);
  impl->rules_by_head.resize(n);
  for (std::size_t r = 0; r < impl->rules.size(); ++r) {
    Rule& rule = impl->rules[r];
    auto check = [&](int a) {
      if (a < 0 || a >= n) throw Error("rule atom outside the Herbrand base");
      used[a] = true;
    };
    check(rule.head);
    // duplicates within pos/neg collapse, first occurrence kept
    auto dedup = [](std::vector<int>& xs) {
      std::vector<int> out;
      for (int x : xs) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
      xs = std::move(out);
    };
    dedup(rule.pos);
    dedup(rule.neg);
    for (int a : rule.pos) check(a);
    for (int a : rule.neg) check(a);
    impl->rules_by_head[rule.head].push_back(static_cast<int>(r));
  }
  for (int a = 0; a < n; ++a) {
    if (!used[a]) {
      throw Error("atom '" + impl->base->name(a) +
                  "' is in the Herbrand base but occurs in no rule");
    }
  }
  impl_ = std::move(impl);
}

const UniversePtr& Program::herbrand_base() const { return impl_->base; }

const std::vector<Rule>& Program::rules() const { return impl_->rules; }

int Program::atom_count() const { return impl_->base->size(); }

Program program_from_rules(const std::vector<NamedRule>& rules) {
  std::vector<std::string> order;
  auto note = [&](const std::string& a) {
    if (std::find(order.begin(), order.end(), a) == order.end()) {
      order.push_back(a);
    }
  };
  for (const NamedRule& r : rules) {
    note(r.head);
    for (const std::string& a : r.pos) note(a);
    for (const std::string& a : r.neg) note(a);
  }
  auto universe = Universe::of(order);
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (const NamedRule& r : rules) {
    Rule rule;
    rule.head = universe->index(r.head);
    for (const std::string& a : r.pos) rule.pos.push_back(universe->index(a));
    for (const std::string& a : r.neg) rule.neg.push_back(universe->index(a));
    out.push_back(std::move(rule));
  }
  return Program(std::move(universe), std::move(out));
}

Program parse_program(std::string_view text) {
  detail::Scanner scan(text);
  std::vector<NamedRule> rules;

  auto parse_atom = [&]() {
    std::string name = scan.ident();
    if (name == "not") scan.fail("'not' is reserved and cannot name an atom");
    if (!atom_name_valid(name)) {
      if (!name.empty() && name[0] >= 'A' && name[0] <= 'Z') {
        scan.fail("variable-like token '" + name +
                  "' (atoms start with a lowercase letter)");
      }
      scan.fail("invalid atom name '" + name + "'");
    }
    return name;
  };

  while (!scan.eof()) {
    NamedRule rule;
    rule.head = parse_atom();
    if (scan.try_consume(':')) {
      scan.expect('-', "in ':-'");
      while (true) {
        if (!scan.ident_ahead()) scan.fail("expected a body literal");
        std::string word = scan.ident();
        if (word == "not") {
          rule.neg.push_back(parse_atom());
        } else {
          if (!atom_name_valid(word)) {
            if (!word.empty() && word[0] >= 'A' && word[0] <= 'Z') {
              scan.fail("variable-like token '" + word +
                        "' (atoms start with a lowercase letter)");
            }
            scan.fail("invalid atom name '" + word + "'");
          }
          rule.pos.push_back(word);
        }
        if (!scan.try_consume(',')) break;
      }
    }
    scan.expect('.', "at the end of the rule");
    rules.push_back(std::move(rule));
  }
  return program_from_rules(rules);
}

std::string render_program(const Program& p) {
  const Universe& u = *p.herbrand_base();
  std::ostringstream out;
  for (const Rule& r : p.rules()) {
    out << u.name(r.head);
    if (!r.pos.empty() || !r.neg.empty()) {
      out << " :- ";
      bool first = true;
      for (int a : r.pos) {
        if (!first) out << ", ";
        out << u.name(a);
        first = false;
      }
      for (int a : r.neg) {
        if (!first) out << ", ";
        out << "not " << u.name(a);
        first = false;
      }
    }
    out << ".\n";
  }
  return out.str();
}

namespace {

void require_base(const Program& p, const Interpretation& i, const char* op) {
  if (!same_universe(p.herbrand_base(), i.universe())) {
    throw Error(std::string("universe mismatch in ") + op);
  }
}

}  // namespace

bool is_model(const Program& p, const Interpretation& i) {
  require_base(p, i, "is_model");
  for (const Rule& r : p.rules()) {
    Truth body = Truth::True;
    for (int a : r.pos) body = conj(body, i.value(a));
    for (int a : r.neg) body = conj(body, negate(i.value(a)));
    if (!leq_truth(body, i.value(r.head))) return false;
  }
  return true;
}

ReducedProgram reduct(const Program& p, const Interpretation& i) {
  require_base(p, i, "reduct");
  ReducedProgram out;
  out.base = p.herbrand_base();
  for (const Rule& r : p.rules()) {
    bool dropped = false;
    for (int b : r.neg) {
      if (i.value(b) == Truth::True) {
        dropped = true;
        break;
      }
    }
    if (dropped) continue;
    ReducedRule rr;
    rr.head = r.head;
    rr.body = r.pos;
    for (int b : r.neg) {
      // false literals vanish, unknown ones become the special atom u̇
      if (i.value(b) == Truth::Unknown) rr.has_unknown = true;
    }
    out.rules.push_back(std::move(rr));
  }
  return out;
}

Interpretation psi(const ReducedProgram& r, const Interpretation& j) {
  if (!same_universe(r.base, j.universe())) {
    throw Error("universe mismatch in psi");
  }
  const int n = r.base->size();
  std::vector<Truth> out(n);
  for (int a = 0; a < n; ++a) {
    bool some_rule_true = false;
    bool every_rule_false = true;  // vacuously true when a has no rules
    for (const ReducedRule& rule : r.rules) {
      if (rule.head != a) continue;
      Truth body = rule.has_unknown ? Truth::Unknown : Truth::True;
      for (int b : rule.body) {
        body = conj(body, j.value(b));
        if (body == Truth::False) break;
      }
      if (body == Truth::True) some_rule_true = true;
      if (body != Truth::False) every_rule_false = false;
    }
    if (some_rule_true) {
      out[a] = Truth::True;
    } else if (every_rule_false) {
      out[a] = Truth::False;
    } else {
      out[a] = Truth::Unknown;
    }
  }
  return Interpretation(r.base, std::move(out));
}

Interpretation omega(const Program& p, const Interpretation& i) {
  require_base(p, i, "omega");
  ReducedProgram r = reduct(p, i);
  const int n = p.atom_count();
  Interpretation cur(p.herbrand_base(), Truth::False);  // ⊥
  for (int round = 0; round <= 2 * n + 2; ++round) {
    Interpretation next = psi(r, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error("psi iteration did not converge");
}

std::vector<Interpretation> lp_models(const Program& p, LpSemantics kind,
                                      int bound) {
  if (kind == LpSemantics::WellFounded) {
    // plain omega iteration from all-u; convergence within 2|HB|+2 steps is
    // asserted, with partial-stable enumeration as the fallback
    const int n = p.atom_count();
    Interpretation cur = Interpretation::all_unknown(p.herbrand_base());
    for (int round = 0; round <= 2 * n + 2; ++round) {
      Interpretation next = omega(p, cur);
      if (next == cur) return {cur};
      cur = std::move(next);
    }
    std::vector<Interpretation> psms =
        lp_models(p, LpSemantics::PartialStable, bound);
    for (const Interpretation& v : psms) {
      bool least = true;
      for (const Interpretation& w : psms) {
        if (!leq_info(v, w)) {
          least = false;
          break;
        }
      }
      if (least) return {v};
    }
    throw Error("no least partial stable model found");
  }

  detail::check_enum_bound(p.atom_count(), bound, "lp_models");
  std::vector<Interpretation> psms;
  InterpretationStream stream(p.herbrand_base(), bound);
  while (auto v = stream.next()) {
    if (omega(p, *v) == *v) psms.push_back(std::move(*v));
  }
  switch (kind) {
    case LpSemantics::PartialStable:
      return psms;
    case LpSemantics::Regular:
      return detail::filter_maximal_info(psms);
    case LpSemantics::Stable: {
      std::vector<Interpretation> out;
      for (const Interpretation& v : psms) {
        if (v.is_two_valued()) out.push_back(v);
      }
      return out;
    }
    case LpSemantics::LStable:
      return detail::filter_minimal_unknown(psms);
    default:
      return psms;
  }
}

}  // namespace adfkit
