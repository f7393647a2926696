#include "adfkit/adfplus.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"

namespace adfkit {

std::string AdfPlusViolation::describe() const {
  std::ostringstream out;
  out << "link (" << source << "," << target << ") is not attacking: C({";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out << ",";
    out << witness[i];
  }
  out << "}) = f but adding " << source << " makes it t";
  return out.str();
}

struct AdfPlus::Impl {
  Adf adf;
  // per statement; nullopt when the statement has more than 20 parents
  std::vector<std::optional<CSetFamily>> families;
  std::vector<std::optional<CSetFamily>> max_families;
  std::vector<std::optional<Formula>> simplified;

  explicit Impl(Adf d) : adf(std::move(d)) {}

  const CSetFamily& family_at(int s) const {
    if (!families[s].has_value()) {
      throw CapacityError("statement '" + adf.statements()->name(s) +
                          "' has too many parents for a materialized family");
    }
    return *families[s];
  }
};

AdfPlus::AdfPlus(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const Adf& AdfPlus::framework() const { return impl_->adf; }

int AdfPlus::size() const { return impl_->adf.size(); }

const CSetFamily& AdfPlus::family(int s) const { return impl_->family_at(s); }

const CSetFamily& AdfPlus::max_family(int s) const {
  if (!impl_->max_families[s].has_value()) {
    impl_->family_at(s);  // raises the capacity error with the atom name
  }
  return *impl_->max_families[s];
}

const Formula& AdfPlus::simplified(int s) const {
  if (!impl_->simplified[s].has_value()) {
    impl_->family_at(s);
  }
  return *impl_->simplified[s];
}

Adf AdfPlus::simplified_framework() const {
  std::vector<Formula> formulas;
  for (int s = 0; s < size(); ++s) formulas.push_back(simplified(s));
  return Adf(impl_->adf.statements(), std::move(formulas));
}

Formula negative_dnf(const CSetFamily& max_family) {
  std::vector<Formula> disjuncts;
  for (std::uint32_t mask : max_family.accepted) {
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < max_family.parents.size(); ++i) {
      if (!(mask & (std::uint32_t{1} << i))) {
        lits.push_back(Formula::neg(Formula::atom(max_family.parents[i])));
      }
    }
    disjuncts.push_back(Formula::conj(std::move(lits)));
  }
  return Formula::disj(std::move(disjuncts));
}

namespace {

// first downward-closure violation of a materialized family, in scan order:
// sources in parent order, subsets ascending
std::optional<AdfPlusViolation> family_violation(const CSetFamily& fam,
                                                 const std::string& target) {
  for (std::size_t b = 0; b < fam.parents.size(); ++b) {
    const std::uint32_t rbit = std::uint32_t{1} << b;
    const std::uint32_t total = std::uint32_t{1} << fam.parents.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (mask & rbit) continue;
      if (!fam.contains(mask) && fam.contains(mask | rbit)) {
        AdfPlusViolation v;
        v.source = fam.parents[b];
        v.target = target;
        for (std::size_t i = 0; i < fam.parents.size(); ++i) {
          if (mask & (std::uint32_t{1} << i)) v.witness.push_back(fam.parents[i]);
        }
        return v;
      }
    }
  }
  return std::nullopt;
}

// wide statements: test each parent without materializing the family, by
// enumerating assignments of the remaining parents
std::optional<AdfPlusViolation> wide_violation(const Adf& d, int s) {
  const Formula& phi = d.acceptance(s);
  std::vector<std::string> parents = phi.atoms();
  if (parents.size() > 25) {
    throw CapacityError("statement '" + d.statements()->name(s) +
                        "' has too many parents to validate (" +
                        std::to_string(parents.size()) + ")");
  }
  auto u = Universe::of(parents);
  const std::size_t k = parents.size();
  for (std::size_t b = 0; b < k; ++b) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
      std::vector<Truth> values(k);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == b) continue;
        bool bit = (mask >> pos) & 1;
        values[i] = bit ? Truth::True : Truth::False;
        ++pos;
      }
      values[b] = Truth::False;
      bool without = eval_kleene(phi, Interpretation(u, values)) == Truth::True;
      values[b] = Truth::True;
      bool with = eval_kleene(phi, Interpretation(u, values)) == Truth::True;
      if (!without && with) {
        AdfPlusViolation v;
        v.source = parents[b];
        v.target = d.statements()->name(s);
        for (std::size_t i = 0; i < k; ++i) {
          if (i != b && values[i] == Truth::True) v.witness.push_back(parents[i]);
        }
        return v;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<AdfPlus, AdfPlusViolation> check_adfplus(const Adf& d) {
  auto impl = std::make_shared<AdfPlus::Impl>(d);
  impl->families.resize(d.size());
  impl->max_families.resize(d.size());
  impl->simplified.resize(d.size());
  for (int s = 0; s < d.size(); ++s) {
    if (d.parents(s).size() <= 20) {
      CSetFamily fam = formula_to_cset(d.acceptance(s));
      if (auto v = family_violation(fam, d.statements()->name(s))) return *v;
      CSetFamily mx = cmax(fam);
      impl->simplified[s] = negative_dnf(mx);
      impl->families[s] = std::move(fam);
      impl->max_families[s] = std::move(mx);
    } else {
      if (auto v = wide_violation(d, s)) return *v;
    }
  }
  return AdfPlus(std::move(impl));
}

AdfPlus require_adfplus(const Adf& d) {
  auto result = check_adfplus(d);
  if (auto* violation = std::get_if<AdfPlusViolation>(&result)) {
    throw Error("not an attacking framework: " + violation->describe());
  }
  return std::get<AdfPlus>(std::move(result));
}

CSetFamily cmax(const CSetFamily& fam) {
  // downward closure: every subset of an accepted set is accepted
  for (std::uint32_t mask : fam.accepted) {
    for (std::size_t i = 0; i < fam.parents.size(); ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if ((mask & bit) && !fam.contains(mask & ~bit)) {
        throw Error("family is not downward closed");
      }
    }
  }
  CSetFamily out;
  out.parents = fam.parents;
  for (std::uint32_t mask : fam.accepted) {
    bool maximal = true;
    for (std::uint32_t other : fam.accepted) {
      if (other != mask && (other & mask) == mask) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.accepted.push_back(mask);
  }
  return out;
}

std::vector<Link> redundant_links_by_count(const AdfPlus& d) {
  std::vector<Link> out;
  const Adf& fw = d.framework();
  for (int s = 0; s < d.size(); ++s) {
    const CSetFamily& fam = d.family(s);
    const std::size_t total = fam.accepted.size();
    for (std::size_t b = 0; b < fam.parents.size(); ++b) {
      const std::uint32_t rbit = std::uint32_t{1} << b;
      std::size_t with_r = 0;
      for (std::uint32_t mask : fam.accepted) {
        if (mask & rbit) ++with_r;
      }
      // exact arithmetic; an odd family size can never satisfy the test
      if (2 * with_r == total) {
        out.push_back({fam.parents[b], fw.statements()->name(s)});
      }
    }
  }
  return out;
}

Interpretation gamma_plus(const AdfPlus& d, const Interpretation& v) {
  if (!same_universe(d.framework().statements(), v.universe())) {
    throw Error("universe mismatch in gamma_plus");
  }
  std::vector<Truth> out(d.size());
  for (int s = 0; s < d.size(); ++s) {
    out[s] = eval_kleene(d.simplified(s), v);
  }
  return Interpretation(d.framework().statements(), std::move(out));
}

std::vector<Interpretation> stable_models_plus(const AdfPlus& d, int bound) {
  detail::check_enum_bound(d.size(), bound, "stable_models_plus");
  const int n = d.size();
  std::vector<Interpretation> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    std::vector<Truth> values(n);
    for (int i = 0; i < n; ++i) {
      bool bit = (counter >> (n - 1 - i)) & 1;
      values[i] = bit ? Truth::True : Truth::False;
    }
    Interpretation v(d.framework().statements(), std::move(values));
    if (gamma_plus(d, v) == v) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Interpretation> l_stable_models(const Adf& d, int bound) {
  return detail::filter_minimal_unknown(complete_models(d, bound));
}

}  // namespace adfkit
