#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adfkit/errors.hpp"
#include "adfkit/interpretation.hpp"

namespace adfkit::detail {

inline void check_enum_bound(int n, int bound, const char* what) {
  if (n <= bound) return;
  std::string count;
  if (n <= 38) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= 3;
    count = std::to_string(c);
  } else {
    count = "3^" + std::to_string(n);
  }
  throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                      " atoms exceed the enumeration bound of " +
                      std::to_string(bound) + " (" + count +
                      " interpretations)");
}

// ≤_i-maximal elements, keeping the input order.
inline std::vector<Interpretation> filter_maximal_info(
    const std::vector<Interpretation>& models) {
  std::vector<Interpretation> out;
  for (const Interpretation& v : models) {
    bool maximal = true;
    for (const Interpretation& w : models) {
      if (!(v == w) && leq_info(v, w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(v);
  }
  return out;
}

// Elements whose unknown-atom set is ⊆-minimal, keeping the input order.
inline std::vector<Interpretation> filter_minimal_unknown(
    const std::vector<Interpretation>& models) {
  auto unknown_mask = [](const Interpretation& v) {
    std::uint64_t m = 0;
    for (int i = 0; i < v.size(); ++i) {
      if (v.value(i) == Truth::Unknown) m |= std::uint64_t{1} << i;
    }
    return m;
  };
  std::vector<std::uint64_t> masks;
  masks.reserve(models.size());
  for (const Interpretation& v : models) masks.push_back(unknown_mask(v));
  std::vector<Interpretation> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < models.size(); ++j) {
      if (masks[j] != masks[i] && (masks[j] & masks[i]) == masks[j]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(models[i]);
  }
  return out;
}

}  // namespace adfkit::detail
