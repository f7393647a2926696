#pragma once

#include <cstdint>

namespace adfkit {

/// Truth values of Kleene's strong three-valued logic.
///
/// The numeric encoding follows the truth ordering f <_t u <_t t, so
/// conjunction and disjunction are min and max on the underlying value.
/// The information ordering is the flat one: u below both t and f, which
/// are incomparable.
enum class Truth : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr Truth negate(Truth v) {
  switch (v) {
    case Truth::True:
      return Truth::False;
    case Truth::False:
      return Truth::True;
    default:
      return Truth::Unknown;
  }
}

/// Conjunction: t iff both t, f iff some operand f, u otherwise.
constexpr Truth conj(Truth a, Truth b) { return a < b ? a : b; }

/// Disjunction, dual to conj.
constexpr Truth disj(Truth a, Truth b) { return a < b ? b : a; }

/// Consensus meet of the information semilattice:
/// t ⊓ t = t, f ⊓ f = f, u otherwise.
constexpr Truth meet(Truth a, Truth b) { return a == b ? a : Truth::Unknown; }

/// Truth ordering f <_t u <_t t (total).
constexpr bool leq_truth(Truth a, Truth b) { return a <= b; }

/// Information ordering: a ≤_i b iff a is u or a equals b.
constexpr bool leq_info(Truth a, Truth b) {
  return a == Truth::Unknown || a == b;
}

constexpr char to_char(Truth v) {
  switch (v) {
    case Truth::True:
      return 't';
    case Truth::False:
      return 'f';
    default:
      return 'u';
  }
}

}  // namespace adfkit
