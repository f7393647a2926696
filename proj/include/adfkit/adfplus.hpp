#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adfkit/adf.hpp"

namespace adfkit {

/// Witness that a framework is not attacking-only: the link and the parent
/// subset R with C(R) = f but C(R ∪ {source}) = t.
struct AdfPlusViolation {
  std::string source;
  std::string target;
  std::vector<std::string> witness;

  std::string describe() const;
};

/// An attacking framework: every derived link is attacking (equivalently,
/// every acceptance family is downward closed). Caches per-statement C^t
/// families, their ⊆-maximal members and the negative-DNF simplification
/// over C^max. Families are materialized only for statements with at most
/// 20 parents; wider statements are validated without materialization and
/// the family-backed accessors raise CapacityError for them.
class AdfPlus {
 public:
  const Adf& framework() const;
  int size() const;

  const CSetFamily& family(int s) const;      // C^t_s
  const CSetFamily& max_family(int s) const;  // C^max_s

  /// Negative-DNF acceptance over C^max_s: one disjunct per maximal subset
  /// R, conjoining ¬b for b ∈ par(s)−R. Classically equivalent to the
  /// original condition; redundant links disappear from it.
  const Formula& simplified(int s) const;

  /// Same statements, simplified acceptance formulas.
  Adf simplified_framework() const;

  struct Impl;
  explicit AdfPlus(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Validates that every derived link is attacking or redundant. A rejected
/// framework is reported with the first violating link in scan order
/// (targets in statement order, sources in parent order, subsets ascending).
std::variant<AdfPlus, AdfPlusViolation> check_adfplus(const Adf& d);

/// Convenience: unwraps check_adfplus, throwing Error on a violation.
AdfPlus require_adfplus(const Adf& d);

/// The ⊆-maximal members of a downward-closed family.
/// Throws Error when the family is not downward closed.
CSetFamily cmax(const CSetFamily& fam);

/// The formula ⋁_{R ∈ fam} ⋀_{b ∈ parents−R} ¬b. Applied to a C^max
/// family it is the canonical attacking-framework acceptance form.
Formula negative_dnf(const CSetFamily& max_family);

/// Redundant links found by the counting test: (r,s) is redundant iff the
/// number of accepted subsets containing r is exactly |C^t_s| / 2 (exact
/// integer arithmetic; an odd family size settles it immediately).
std::vector<Link> redundant_links_by_count(const AdfPlus& d);

/// The consensus operator restricted to attacking frameworks: pointwise
/// Kleene evaluation of the simplified formulas. Equal to gamma(D, v) for
/// every interpretation.
Interpretation gamma_plus(const AdfPlus& d, const Interpretation& v);

/// Stable models of an attacking framework: exactly its 2-valued
/// gamma_plus fixpoints. Equal to stable_models on the wrapped framework.
std::vector<Interpretation> stable_models_plus(
    const AdfPlus& d, int bound = kDefaultEnumerationBound);

/// Complete models with ⊆-minimal set of unknown statements. Defined for
/// any framework with the consensus operator.
std::vector<Interpretation> l_stable_models(
    const Adf& d, int bound = kDefaultEnumerationBound);

}  // namespace adfkit
