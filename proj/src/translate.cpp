#include "adfkit/translate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scan.hpp"

namespace adfkit {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

struct Saturation {
  std::vector<Substatement> subs;
  // dedup key: [rule, child ids...]
  std::map<std::vector<int>, int> by_key;
  // sub ids per conclusion atom
  std::vector<std::vector<int>> by_conc;
};

}  // namespace

std::vector<Substatement> substatements(const Program& p, int bound) {
  const std::vector<Rule>& rules = p.rules();
  const Universe& base = *p.herbrand_base();

  // identical rules take part only once
  std::vector<int> active;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    bool duplicate = false;
    for (int earlier : active) {
      if (rules[earlier] == rules[r]) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) active.push_back(static_cast<int>(r));
  }

  Saturation sat;
  sat.by_conc.resize(base.size());

  auto add = [&](int rule, std::vector<int> children) -> bool {
    std::vector<int> key;
    key.push_back(rule);
    key.insert(key.end(), children.begin(), children.end());
    if (sat.by_key.count(key)) return false;

    Substatement sub;
    sub.conc = rules[rule].head;
    sub.rules = {rule};
    sub.sup = rules[rule].neg;
    std::sort(sub.sup.begin(), sub.sup.end());
    for (int child : children) {
      sub.rules = sorted_union(sub.rules, sat.subs[child].rules);
      sub.sup = sorted_union(sub.sup, sat.subs[child].sup);
    }
    if (static_cast<int>(sat.subs.size()) >= bound) {
      throw CapacityError("substatement bound of " + std::to_string(bound) +
                          " exceeded while deriving '" + base.name(sub.conc) +
                          "'");
    }
    int id = static_cast<int>(sat.subs.size());
    sat.by_key.emplace(std::move(key), id);
    sat.by_conc[sub.conc].push_back(id);
    sat.subs.push_back(std::move(sub));
    return true;
  };

  // base clauses: facts and purely negative rules
  for (int r : active) {
    if (rules[r].pos.empty()) add(r, {});
  }

  // saturate the third clause: a rule with positive body atoms a_1..a_m
  // combines with substatements for them, provided the rule itself is not
  // already in a child's rule set (the loop check)
  bool grew = true;
  while (grew) {
    grew = false;
    for (int r : active) {
      const Rule& rule = rules[r];
      const std::size_t m = rule.pos.size();
      if (m == 0) continue;
      // snapshot the admissible children per position: conclusion matches
      // and the rule is absent from the child's rule set; substatements
      // created during this round take part in the next round
      std::vector<std::vector<int>> candidates(m);
      bool feasible = true;
      for (std::size_t i = 0; i < m; ++i) {
        for (int child : sat.by_conc[rule.pos[i]]) {
          const std::vector<int>& child_rules = sat.subs[child].rules;
          if (!std::binary_search(child_rules.begin(), child_rules.end(), r)) {
            candidates[i].push_back(child);
          }
        }
        if (candidates[i].empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<int> combo(m);
      auto descend = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
          if (add(r, combo)) grew = true;
          return;
        }
        for (int child : candidates[i]) {
          combo[i] = child;
          self(self, i + 1);
        }
      };
      descend(descend, 0);
    }
  }
  return sat.subs;
}

std::vector<std::vector<int>> support(const Program& p, std::string_view atom,
                                      int bound) {
  int a = p.herbrand_base()->index(atom);
  if (a < 0) throw Error("unknown atom '" + std::string(atom) + "'");
  std::set<std::vector<int>> sets;
  for (const Substatement& sub : substatements(p, bound)) {
    if (sub.conc == a) sets.insert(sub.sup);
  }
  return {sets.begin(), sets.end()};
}

namespace {

// families per atom: duplicate support sets collapsed, members ordered
std::vector<std::set<std::vector<int>>> support_families(
    const Program& p, int bound) {
  std::vector<std::set<std::vector<int>>> fams(p.atom_count());
  for (const Substatement& sub : substatements(p, bound)) {
    fams[sub.conc].insert(sub.sup);
  }
  return fams;
}

// keep the ⊆-minimal members of a family of sorted vectors
std::vector<std::vector<int>> minimize(const std::set<std::vector<int>>& fam) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& b : fam) {
    bool minimal = true;
    for (const std::vector<int>& other : fam) {
      if (other != b &&
          std::includes(b.begin(), b.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

}  // namespace

AdfPlus xi(const Program& p, int bound) {
  const Universe& base = *p.herbrand_base();
  auto fams = support_families(p, bound);
  std::vector<Formula> formulas;
  for (int a = 0; a < base.size(); ++a) {
    std::vector<Formula> disjuncts;
    for (const std::vector<int>& b : minimize(fams[a])) {
      std::vector<Formula> lits;
      for (int atom : b) lits.push_back(Formula::neg(Formula::atom(base.name(atom))));
      disjuncts.push_back(Formula::conj(std::move(lits)));
    }
    formulas.push_back(Formula::disj(std::move(disjuncts)));
  }
  // attacking by construction (purely negative acceptance conditions)
  return require_adfplus(Adf(p.herbrand_base(), std::move(formulas)));
}

Adf xi2(const Program& p) {
  const Universe& base = *p.herbrand_base();
  std::vector<Formula> formulas;
  for (int a = 0; a < base.size(); ++a) {
    std::vector<Formula> disjuncts;
    for (const Rule& r : p.rules()) {
      if (r.head != a) continue;
      std::vector<Formula> lits;
      for (int x : r.pos) lits.push_back(Formula::atom(base.name(x)));
      for (int x : r.neg) lits.push_back(Formula::neg(Formula::atom(base.name(x))));
      disjuncts.push_back(Formula::conj(std::move(lits)));
    }
    formulas.push_back(Formula::disj(std::move(disjuncts)));
  }
  return Adf(p.herbrand_base(), std::move(formulas));
}

Program p_of_xi(const Adf& d) {
  std::vector<NamedRule> rules;
  for (int s = 0; s < d.size(); ++s) {
    CSetFamily fam = formula_to_cset(d.acceptance(s));
    for (std::uint32_t mask : fam.accepted) {
      NamedRule rule;
      rule.head = d.statements()->name(s);
      for (std::size_t i = 0; i < fam.parents.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) {
          rule.pos.push_back(fam.parents[i]);
        } else {
          rule.neg.push_back(fam.parents[i]);
        }
      }
      rules.push_back(std::move(rule));
    }
  }
  return program_from_rules(rules);
}

Setaf parse_setaf(std::string_view text) {
  detail::Scanner scan(text);
  std::vector<std::string> order;
  std::vector<std::pair<std::vector<std::string>, std::string>> raw_attacks;

  auto parse_atom = [&]() {
    std::string name = scan.ident();
    if (!atom_name_valid(name)) scan.fail("invalid atom name '" + name + "'");
    return name;
  };

  while (!scan.eof()) {
    if (!scan.ident_ahead()) scan.fail("expected arg(...) or att(...)");
    std::string item = scan.ident();
    if (item == "arg") {
      scan.expect('(', "after arg");
      std::string name = parse_atom();
      scan.expect(')', "to close arg(...)");
      scan.expect('.', "after arg(...)");
      if (std::find(order.begin(), order.end(), name) != order.end()) {
        scan.fail("argument '" + name + "' declared twice");
      }
      order.push_back(name);
    } else if (item == "att") {
      scan.expect('(', "after att");
      scan.expect('[', "to open the attacking set");
      std::vector<std::string> sources;
      sources.push_back(parse_atom());
      while (scan.try_consume(',')) sources.push_back(parse_atom());
      scan.expect(']', "to close the attacking set");
      scan.expect(',', "between attacking set and target");
      std::string target = parse_atom();
      scan.expect(')', "to close att(...)");
      scan.expect('.', "after att(...)");
      raw_attacks.emplace_back(std::move(sources), std::move(target));
    } else {
      scan.fail("unknown item '" + item + "'");
    }
  }

  Setaf sf;
  sf.arguments = Universe::of(order);
  for (auto& [sources, target] : raw_attacks) {
    Setaf::Attack att;
    att.target = sf.arguments->index(target);
    if (att.target < 0) throw Error("undeclared argument '" + target + "'");
    for (const std::string& s : sources) {
      int i = sf.arguments->index(s);
      if (i < 0) throw Error("undeclared argument '" + s + "'");
      att.sources.push_back(i);
    }
    std::sort(att.sources.begin(), att.sources.end());
    att.sources.erase(std::unique(att.sources.begin(), att.sources.end()),
                      att.sources.end());
    sf.attacks.push_back(std::move(att));
  }
  return sf;
}

std::string render_setaf(const Setaf& sf) {
  std::ostringstream out;
  for (const std::string& a : sf.arguments->atoms()) {
    out << "arg(" << a << ").\n";
  }
  for (const Setaf::Attack& att : sf.attacks) {
    out << "att([";
    for (std::size_t i = 0; i < att.sources.size(); ++i) {
      if (i) out << ",";
      out << sf.arguments->name(att.sources[i]);
    }
    out << "]," << sf.arguments->name(att.target) << ").\n";
  }
  return out.str();
}

AdfPlus setaf_to_adf(const Setaf& sf) {
  const Universe& args = *sf.arguments;
  std::vector<Formula> formulas;
  for (int a = 0; a < args.size(); ++a) {
    // par(a) = union of the sources of the attacks aimed at a
    std::vector<int> parents;
    for (const Setaf::Attack& att : sf.attacks) {
      if (att.target != a) continue;
      parents = sorted_union(parents, att.sources);
    }
    if (parents.size() > 20) {
      throw CapacityError("argument '" + args.name(a) +
                          "' has too many attackers (" +
                          std::to_string(parents.size()) + ")");
    }
    CSetFamily fam;
    for (int p : parents) fam.parents.push_back(args.name(p));

    std::vector<std::uint32_t> attack_masks;
    for (const Setaf::Attack& att : sf.attacks) {
      if (att.target != a) continue;
      std::uint32_t mask = 0;
      for (int src : att.sources) {
        std::size_t bit = std::lower_bound(parents.begin(), parents.end(), src) -
                          parents.begin();
        mask |= std::uint32_t{1} << bit;
      }
      attack_masks.push_back(mask);
    }

    // B is rejected iff it includes some attacking set
    const std::uint32_t total = std::uint32_t{1} << parents.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      bool attacked = false;
      for (std::uint32_t am : attack_masks) {
        if ((am & mask) == am) {
          attacked = true;
          break;
        }
      }
      if (!attacked) fam.accepted.push_back(mask);
    }
    formulas.push_back(negative_dnf(cmax(fam)));
  }
  return require_adfplus(Adf(sf.arguments, std::move(formulas)));
}

}  // namespace adfkit
