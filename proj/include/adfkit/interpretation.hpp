#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adfkit/errors.hpp"
#include "adfkit/truth.hpp"

namespace adfkit {

/// Atom names are nonempty strings matching [a-z][A-Za-z0-9_]*.
bool atom_name_valid(std::string_view name);

/// An ordered finite set of atom names. The order is always the order of
/// first appearance in whatever input the universe was built from; every
/// deterministic enumeration in the library follows it.
class Universe {
 public:
  /// Throws Error on duplicate or ill-formed names.
  static std::shared_ptr<const Universe> of(std::vector<std::string> atoms);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::string& name(int i) const { return atoms_[i]; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  /// Index of `name`, or -1 when absent.
  int index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name) >= 0; }

  bool operator==(const Universe& other) const { return atoms_ == other.atoms_; }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// True when both pointers designate the same atom sequence.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// A total three-valued assignment over a universe of atoms.
///
/// Value semantics: copies are independent; a const Interpretation is safe
/// to share across threads.
class Interpretation {
 public:
  explicit Interpretation(UniversePtr universe, Truth fill = Truth::Unknown);
  Interpretation(UniversePtr universe, std::vector<Truth> values);

  static Interpretation all_unknown(UniversePtr universe) {
    return Interpretation(std::move(universe));
  }

  /// Builds the interpretation denoted by the literal set
  /// {s | s true} ∪ {¬s | s false}; everything else is unknown.
  /// Throws Error on unknown atoms or on an atom listed both ways.
  static Interpretation from_literals(UniversePtr universe,
                                      std::span<const std::string> pos,
                                      std::span<const std::string> neg);

  const UniversePtr& universe() const { return universe_; }
  int size() const { return static_cast<int>(values_.size()); }

  Truth value(int i) const { return values_[i]; }
  /// Throws Error naming the atom when it is not in the universe.
  Truth value(std::string_view atom) const;

  void set(int i, Truth v) { values_[i] = v; }
  void set(std::string_view atom, Truth v);

  const std::vector<Truth>& values() const { return values_; }

  bool is_two_valued() const;
  /// Indices of atoms assigned u, ascending.
  std::vector<int> unknown_atoms() const;

  std::vector<std::string> true_atoms() const;
  std::vector<std::string> false_atoms() const;

  /// Set rendering "{a, ~b}" (or "¬" with unicode=true): true atoms in
  /// universe order, then false atoms in universe order.
  std::string to_set_string(bool unicode = false) const;

  /// Encodes the assignment as a base-3 number with digits u=0, f=1, t=2
  /// and the first atom as the most significant digit. Requires |universe|
  /// <= 40. This is the canonical sort key for model lists.
  std::uint64_t ternary_code() const;

  bool operator==(const Interpretation& other) const;

 private:
  UniversePtr universe_;
  std::vector<Truth> values_;
};

/// Pointwise information ordering. Throws Error on universe mismatch.
bool leq_info(const Interpretation& a, const Interpretation& b);

/// Pointwise consensus; the ≤_i-greatest lower bound.
/// Throws Error on universe mismatch.
Interpretation meet(const Interpretation& a, const Interpretation& b);

/// All 2-valued completions of v over the atoms in `relevant` (indices into
/// the universe); atoms outside `relevant` keep their value. The list has
/// 2^k entries where k is the number of unknown atoms in `relevant`, in
/// binary counting order over those atoms (universe order, f before t,
/// first atom most significant).
std::vector<Interpretation> two_valued_extensions(const Interpretation& v,
                                                  std::span<const int> relevant);
std::vector<Interpretation> two_valued_extensions(
    const Interpretation& v, std::span<const std::string> relevant);

inline constexpr int kDefaultEnumerationBound = 14;

/// Streams all 3^n interpretations over a universe exactly once, in ternary
/// counting order (digits u=0 < f=1 < t=2, first atom most significant; the
/// first interpretation is all-u). Construction throws CapacityError when
/// the universe exceeds `bound` atoms.
class InterpretationStream {
 public:
  explicit InterpretationStream(UniversePtr universe,
                                int bound = kDefaultEnumerationBound);

  /// Next interpretation, or nullopt once exhausted.
  std::optional<Interpretation> next();

 private:
  UniversePtr universe_;
  std::vector<Truth> digits_;
  bool done_ = false;
  bool started_ = false;
};

/// Materialized form of InterpretationStream, for small universes.
std::vector<Interpretation> enumerate_interpretations(
    UniversePtr universe, int bound = kDefaultEnumerationBound);

}  // namespace adfkit
