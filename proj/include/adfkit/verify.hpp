#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adfkit/adf.hpp"
#include "adfkit/adfplus.hpp"
#include "adfkit/nlp.hpp"
#include "adfkit/translate.hpp"

namespace adfkit {

/// Deterministic 64-bit generator (splitmix64). The update constants are
/// part of the harness contract so that ports in other languages produce
/// identical instance streams:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
/// Bounded draws are output % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish value in [0, n); returns 0 when n == 0.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_atoms = 6;
  int max_rules = 8;
  int max_body = 3;
  int max_statements = 6;
  int max_parents = 5;
};

struct CheckFailure {
  std::uint64_t seed = 0;  // 0 marks a paper-fixed instance
  std::string instance;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check;
  int trials = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;  // informational only (witness searches)

  bool passed() const { return failures.empty(); }
};

/// Instance generators. Each consumes one per-instance seed; the checks
/// derive instance seeds from GenConfig::seed through a SplitMix64 stream,
/// so re-running a reported seed reproduces the instance.
Program gen_program(std::uint64_t seed, const GenConfig& cfg);
Program gen_negative_body_program(std::uint64_t seed, const GenConfig& cfg);
Adf gen_adf(std::uint64_t seed, const GenConfig& cfg);
AdfPlus gen_adfplus(std::uint64_t seed, const GenConfig& cfg);
CSetFamily gen_downward_family(std::uint64_t seed, const GenConfig& cfg);
Setaf gen_setaf(std::uint64_t seed, const GenConfig& cfg);

/// Registered check names, in canonical order. "search-negatives" is the
/// optional witness search and is excluded from default runs.
const std::vector<std::string>& check_names();

/// Runs one registered check: its paper-fixed instances first, then
/// cfg.trials randomized instances. Throws Error on an unknown name.
/// "pstable↔complete" is accepted as an alias of "pstable-complete".
CheckReport run_check(const std::string& name, const GenConfig& cfg);

/// JSON rendering of reports: an array of
/// {check, trials, failures: [{seed, instance, expected, actual}]}.
std::string reports_to_json(std::span<const CheckReport> reports);

}  // namespace adfkit
