#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "adfkit/interpretation.hpp"
#include "adfkit/truth.hpp"

namespace adfkit {

/// Immutable propositional formula over atoms, verum/falsum constants,
/// negation and n-ary conjunction/disjunction. Subtrees are shared;
/// copying a Formula is cheap.
class Formula {
 public:
  enum class Kind { Atom, Verum, Falsum, Neg, And, Or };

  /// Throws Error on an ill-formed atom name.
  static Formula atom(std::string name);
  static Formula verum();
  static Formula falsum();
  static Formula neg(Formula f);

  /// N-ary conjunction. An empty list yields Verum, a singleton collapses
  /// to its only member; And nodes always have >= 2 children.
  static Formula conj(std::vector<Formula> fs);
  /// Dual of conj: empty list yields Falsum.
  static Formula disj(std::vector<Formula> fs);

  Kind kind() const;
  const std::string& atom_name() const;          // Atom nodes only
  const Formula& child() const;                  // Neg nodes only
  const std::vector<Formula>& children() const;  // And/Or nodes only

  /// Atoms in order of first appearance (preorder), deduplicated.
  std::vector<std::string> atoms() const;

  /// Structural equality.
  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates under Kleene's strong three-valued logic: negation swaps t/f
/// and fixes u; a conjunction is t iff every conjunct is t, f iff some
/// conjunct is f, u otherwise; disjunction dual. On a 2-valued
/// interpretation this coincides with classical evaluation.
/// Throws Error naming the atom when the formula mentions an atom outside
/// the interpretation's universe.
Truth eval_kleene(const Formula& f, const Interpretation& v);

/// Copy of `f` with every atom satisfying `pred` replaced by Falsum.
Formula substitute_falsum(const Formula& f,
                          const std::function<bool(const std::string&)>& pred);

/// Text syntax shared by the adf file format and the CLI:
///   c(v)          verum
///   c(f)          falsum
///   neg(F)        negation
///   and(F,...,F)  conjunction (>= 1 argument)
///   or(F,...,F)   disjunction (>= 1 argument)
///   name          atom, [a-z][A-Za-z0-9_]*
/// Whitespace-insensitive; '%' starts a comment running to end of line.
Formula parse_formula(std::string_view text);

std::string render_formula(const Formula& f);

}  // namespace adfkit
