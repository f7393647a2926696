#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "adfkit/interpretation.hpp"

namespace adfkit {

/// a ← pos_1, ..., pos_m, not neg_1, ..., not neg_n over Herbrand-base
/// indices. Duplicates within pos/neg are removed preserving first
/// occurrence.
struct Rule {
  int head = -1;
  std::vector<int> pos;
  std::vector<int> neg;

  bool operator==(const Rule&) const = default;
};

/// Rule given by atom names; used by builders and generators.
struct NamedRule {
  std::string head;
  std::vector<std::string> pos;
  std::vector<std::string> neg;
};

/// A propositional normal logic program. The Herbrand base is exactly the
/// set of atoms occurring in the rules, in first-appearance order (head,
/// then positive body, then negative body, rule by rule).
class Program {
 public:
  Program(UniversePtr herbrand_base, std::vector<Rule> rules);

  const UniversePtr& herbrand_base() const;
  const std::vector<Rule>& rules() const;
  int atom_count() const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Builds a program from named rules, deriving the Herbrand base.
Program program_from_rules(const std::vector<NamedRule>& rules);

/// nlp file format: one rule per line, '%' comments, whitespace-insensitive.
///   head :- lit, ..., lit.     with lit = atom | not atom
///   head.                      a fact
/// Uppercase-initial (variable-like) tokens are rejected; 'not' is reserved.
Program parse_program(std::string_view text);
std::string render_program(const Program& p);

/// A reduced (negation-free) rule: the body may additionally contain the
/// special atom u̇, which evaluates to u in every interpretation.
struct ReducedRule {
  int head = -1;
  std::vector<int> body;
  bool has_unknown = false;  // u̇ occurs in the body
};

struct ReducedProgram {
  UniversePtr base;
  std::vector<ReducedRule> rules;
};

/// I is a model iff for every rule, min of the body literal values is
/// ≤_t I(head); an empty body has value t.
bool is_model(const Program& p, const Interpretation& i);

/// The three-step reduct: drop rules with a true negative-body atom, drop
/// false negative literals, replace remaining negative literals by u̇.
ReducedProgram reduct(const Program& p, const Interpretation& i);

/// One step of the immediate-consequence operator on a reduced program:
/// an atom becomes t when some rule for it has an all-t body, f when every
/// rule for it (vacuously: none) has an f body atom, u otherwise. u̇ is
/// pinned to u throughout.
Interpretation psi(const ReducedProgram& r, const Interpretation& j);

/// The ≤_t-least model of reduct(p, i): psi iterated from the all-f
/// interpretation until two consecutive iterates coincide.
Interpretation omega(const Program& p, const Interpretation& i);

enum class LpSemantics {
  PartialStable,  // I = omega(P, I)
  WellFounded,    // the ≤_i-least partial stable model
  Regular,        // ≤_i-maximal partial stable models
  Stable,         // 2-valued partial stable models
  LStable         // partial stable with ⊆-minimal unknown set
};

/// WellFounded is computed by iterating omega from all-u (convergence is
/// asserted within 2|HB|+2 steps, with partial-stable enumeration as the
/// fallback) and needs no bound; the other kinds enumerate and throw
/// CapacityError past the bound.
std::vector<Interpretation> lp_models(const Program& p, LpSemantics kind,
                                      int bound = kDefaultEnumerationBound);

}  // namespace adfkit
