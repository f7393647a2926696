#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adfkit/adfplus.hpp"
#include "adfkit/nlp.hpp"

namespace adfkit {

/// A loop-free derivation of an atom: the rule set it uses and the default
/// literals it collects (as Herbrand-base indices of the negated atoms).
struct Substatement {
  int conc = -1;
  std::vector<int> rules;  // indices into p.rules(), sorted ascending
  std::vector<int> sup;    // negated atoms, sorted ascending

  bool operator==(const Substatement&) const = default;
};

inline constexpr int kDefaultSubstatementBound = 10000;

/// The least substatement set closed under the three formation clauses,
/// computed by saturation. Facts and purely negative rules are the base
/// substatements; a rule with positive body atoms a_1..a_m combines with
/// substatements r_1..r_m for them, provided the rule itself is absent from
/// each Rules(r_i). Structurally equal derivations (same rule, same
/// children) are collapsed. Duplicate rules in p are ignored past their
/// first occurrence. Throws CapacityError, naming the atom whose
/// derivations exploded, when more than `bound` substatements form.
std::vector<Substatement> substatements(const Program& p,
                                        int bound = kDefaultSubstatementBound);

/// Sup_P(atom): the family {Sup(r) | r substatement with Conc(r) = atom},
/// duplicates collapsed, members sorted lexicographically.
std::vector<std::vector<int>> support(const Program& p, std::string_view atom,
                                      int bound = kDefaultSubstatementBound);

/// The support-based translation: statements = HB_P and φ_a is the
/// disjunction over the ⊆-minimal support sets B of the conjunction of
/// their literals (empty B gives Verum, empty family gives Falsum). The
/// result is always an attacking framework.
AdfPlus xi(const Program& p, int bound = kDefaultSubstatementBound);

/// The naive rule-body translation: φ_a is the disjunction over the rules
/// with head a of pos_1 ∧ ... ∧ pos_m ∧ ¬neg_1 ∧ ... ∧ ¬neg_n; no rules
/// give Falsum. Not faithful to three-valued semantics in general.
Adf xi2(const Program& p);

/// The reverse translation: one rule s ← R, not (par(s)−R) per accepted
/// subset R of each statement's family. Rules are ordered by (statement,
/// subset mask). Throws CapacityError when a statement has more than 20
/// parents.
Program p_of_xi(const Adf& d);

/// A framework with sets of attacking arguments: nonempty argument subsets
/// attack single arguments. Attack sources are kept sorted ascending.
struct Setaf {
  UniversePtr arguments;
  struct Attack {
    std::vector<int> sources;
    int target = -1;
    bool operator==(const Attack&) const = default;
  };
  std::vector<Attack> attacks;
};

/// setaf file format: '%' comments, whitespace-insensitive.
///   arg(<atom>).
///   att([<atom>,...,<atom>], <atom>).
Setaf parse_setaf(std::string_view text);
std::string render_setaf(const Setaf& sf);

/// par(a) = union of the attack sources aimed at a; a parent subset B is
/// rejected iff it includes some attacking set. Acceptance formulas are the
/// negative DNF over the maximal accepted subsets. Always an attacking
/// framework.
AdfPlus setaf_to_adf(const Setaf& sf);

}  // namespace adfkit
