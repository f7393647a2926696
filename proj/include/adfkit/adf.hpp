#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "adfkit/formula.hpp"
#include "adfkit/interpretation.hpp"

namespace adfkit {

/// An acceptance condition in subset-family form: the parent subsets that
/// evaluate to t. Subsets are bitmasks over the `parents` list (bit i =
/// parents[i]), kept sorted ascending.
struct CSetFamily {
  std::vector<std::string> parents;
  std::vector<std::uint32_t> accepted;

  bool contains(std::uint32_t mask) const;
};

enum class LinkClass { Supporting, Attacking, Redundant, Dependent };

std::string_view to_string(LinkClass c);

/// A dependency link (source, target): source appears in the target's
/// acceptance condition.
struct Link {
  std::string source;
  std::string target;
  bool operator==(const Link&) const = default;
};

/// An abstract dialectical framework: an ordered statement set S and one
/// acceptance formula per statement, with atoms(φ_s) ⊆ S. Parents and
/// links are derived from the formulas, never stored independently.
/// Immutable; copies share state.
class Adf {
 public:
  /// Throws Error when some acceptance formula mentions a non-statement.
  Adf(UniversePtr statements, std::vector<Formula> acceptance);

  const UniversePtr& statements() const;
  int size() const;

  const Formula& acceptance(int s) const;
  const Formula& acceptance(std::string_view name) const;

  /// Parent indices of statement s, ascending. par(s) = atoms(φ_s).
  const std::vector<int>& parents(int s) const;

  /// All links (r, s), grouped by target in statement order, parents
  /// ascending within a target.
  std::vector<Link> links() const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// adf file format: one item per line, '%' comments.
///   s(<atom>).            declares a statement
///   ac(<atom>, <formula>).  sets its acceptance condition
/// Every statement must receive exactly one ac; statements mentioned inside
/// formulas must be declared. Statement order = declaration order.
Adf parse_adf(std::string_view text);
std::string render_adf(const Adf& d);

/// Full-DNF acceptance formula of a subset family: one disjunct per
/// accepted subset R, positives over R then negated literals over
/// parents−R, subsets ascending by mask. Empty family yields Falsum; the
/// empty-conjunction disjunct (R = parents = ∅) yields Verum.
Formula cset_to_formula(const CSetFamily& fam);

/// Inverse of cset_to_formula up to classical equivalence: parents are
/// atoms(φ) in first-appearance order, and a subset is accepted iff the
/// classical evaluation making exactly that subset true satisfies φ.
/// Throws CapacityError when φ has more than 20 atoms.
CSetFamily formula_to_cset(const Formula& f);

/// The consensus operator: gamma(D,v)(s) is the meet of w(φ_s) over all
/// 2-valued completions w of v on par(s).
Interpretation gamma(const Adf& d, const Interpretation& v);

/// The pointwise operator: gamma_kleene(D,v)(s) = eval_kleene(φ_s, v).
/// Less precise than gamma on non-2-valued inputs.
Interpretation gamma_kleene(const Adf& d, const Interpretation& v);

/// v is a model iff every decided statement agrees with the consensus
/// operator: v(s) ≠ u implies v(s) = gamma(D,v)(s).
bool is_model(const Adf& d, const Interpretation& v);

/// All fixpoints of gamma, in enumeration (ternary) order.
/// Throws CapacityError when |S| exceeds the bound.
std::vector<Interpretation> complete_models(const Adf& d,
                                            int bound = kDefaultEnumerationBound);

/// The ≤_i-least complete model: gamma iterated from all-u to its fixpoint.
/// No enumeration bound.
Interpretation grounded_model(const Adf& d);

/// The ≤_i-maximal complete models.
std::vector<Interpretation> preferred_models(const Adf& d,
                                             int bound = kDefaultEnumerationBound);

/// Least fixpoint of gamma_kleene (the pointwise operator), iterated from
/// all-u. This is the Part-I style grounded model; it can be strictly less
/// informative than grounded_model.
Interpretation grounded_model_kleene(const Adf& d);

/// All fixpoints of gamma_kleene, in enumeration order.
std::vector<Interpretation> complete_models_kleene(
    const Adf& d, int bound = kDefaultEnumerationBound);

/// Reduct for the stable semantics: statements shrink to E_v = {s | v(s)=t}
/// and every atom b with v(b)=f is replaced by Falsum inside the remaining
/// acceptance formulas. Requires v 2-valued and a model of d.
Adf reduct_brewka(const Adf& d, const Interpretation& v);

/// 2-valued models v whose reduct's grounded model assigns t to all of E_v
/// (equivalently: the reduct's grounded model, extended with f outside E_v,
/// reproduces v).
std::vector<Interpretation> stable_models(const Adf& d,
                                          int bound = kDefaultEnumerationBound);

/// Classifies the link (source, target) by the monotonicity tests on the
/// target's subset family:
///   supporting iff no R with C(R)=t and C(R∪{r})=f,
///   attacking  iff no R with C(R)=f and C(R∪{r})=t,
///   redundant  iff both, dependent iff neither.
/// Throws Error when (source, target) is not a derived link.
LinkClass classify_link(const Adf& d, std::string_view source,
                        std::string_view target);

/// Reduct over the full-DNF disjuncts of the acceptance conditions: φ_s is
/// kept when some accepted-subset disjunct evaluates to something other
/// than f under v (Kleene), and replaced by Falsum otherwise.
Adf part1_reduct(const Adf& d, const Interpretation& v);

enum class Part1Semantics {
  Admissible,     // v ≤_i gamma_kleene(D, v)
  PartialStable,  // v is the gamma_kleene least fixpoint of part1_reduct(D, v)
  Regular,        // ≤_i-maximal partial stable
  SemiStable,     // gamma_kleene fixpoint with ⊆-minimal undecided set
  LStable         // partial stable with ⊆-minimal undecided set
};

std::vector<Interpretation> part1_models(const Adf& d, Part1Semantics kind,
                                         int bound = kDefaultEnumerationBound);

}  // namespace adfkit
