#include "adfkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "detail.hpp"

namespace adfkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  return n == 0 ? 0 : next() % n;
}

namespace {

std::string atom_name(int i) {
  std::string out(1, static_cast<char>('a' + i % 26));
  if (i >= 26) out += std::to_string(i / 26);
  return out;
}

// literal-set rendering that is independent of universe order, so model
// sets over differently ordered universes compare reliably
std::string canonical_literals(const Interpretation& v) {
  std::vector<std::string> lits;
  for (int i = 0; i < v.size(); ++i) {
    if (v.value(i) == Truth::True) {
      lits.push_back(v.universe()->name(i));
    } else if (v.value(i) == Truth::False) {
      lits.push_back("~" + v.universe()->name(i));
    }
  }
  std::sort(lits.begin(), lits.end());
  std::string out = "{";
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out += ",";
    out += lits[i];
  }
  return out + "}";
}

std::string model_set(const std::vector<Interpretation>& ms) {
  std::vector<std::string> ss;
  ss.reserve(ms.size());
  for (const Interpretation& v : ms) ss.push_back(canonical_literals(v));
  std::sort(ss.begin(), ss.end());
  std::string out = "[";
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (i) out += " ";
    out += ss[i];
  }
  return out + "]";
}

std::string family_to_string(const CSetFamily& fam) {
  std::ostringstream out;
  out << "parents(";
  for (std::size_t i = 0; i < fam.parents.size(); ++i) {
    if (i) out << ",";
    out << fam.parents[i];
  }
  out << ") accepted(";
  for (std::size_t i = 0; i < fam.accepted.size(); ++i) {
    if (i) out << " ";
    out << "{";
    bool first = true;
    for (std::size_t b = 0; b < fam.parents.size(); ++b) {
      if (fam.accepted[i] & (std::uint32_t{1} << b)) {
        if (!first) out << ",";
        out << fam.parents[b];
        first = false;
      }
    }
    out << "}";
  }
  out << ")";
  return out.str();
}

}  // namespace

Program gen_program(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n_atoms = 1 + static_cast<int>(rng.bounded(cfg.max_atoms));
  const int n_rules = static_cast<int>(rng.bounded(cfg.max_rules + 1));
  std::vector<NamedRule> rules;
  for (int r = 0; r < n_rules; ++r) {
    NamedRule rule;
    rule.head = atom_name(static_cast<int>(rng.bounded(n_atoms)));
    const int body = static_cast<int>(rng.bounded(cfg.max_body + 1));
    for (int j = 0; j < body; ++j) {
      std::string a = atom_name(static_cast<int>(rng.bounded(n_atoms)));
      if (rng.bounded(2)) {
        rule.neg.push_back(std::move(a));
      } else {
        rule.pos.push_back(std::move(a));
      }
    }
    rules.push_back(std::move(rule));
  }
  return program_from_rules(rules);
}

Program gen_negative_body_program(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n_atoms = 1 + static_cast<int>(rng.bounded(cfg.max_atoms));
  const int n_rules = static_cast<int>(rng.bounded(cfg.max_rules + 1));
  std::vector<NamedRule> rules;
  for (int r = 0; r < n_rules; ++r) {
    NamedRule rule;
    rule.head = atom_name(static_cast<int>(rng.bounded(n_atoms)));
    const int body = static_cast<int>(rng.bounded(cfg.max_body + 1));
    for (int j = 0; j < body; ++j) {
      rule.neg.push_back(atom_name(static_cast<int>(rng.bounded(n_atoms))));
    }
    rules.push_back(std::move(rule));
  }
  return program_from_rules(rules);
}

namespace {

Formula gen_formula(SplitMix64& rng, int n_statements, int depth) {
  const std::uint64_t roll = rng.bounded(depth > 0 ? 10 : 6);
  switch (roll) {
    case 0:
    case 1:
    case 2:
    case 3:
      return Formula::atom(atom_name(static_cast<int>(rng.bounded(n_statements))));
    case 4:
      return Formula::verum();
    case 5:
      return Formula::falsum();
    case 6:
    case 7:
      return Formula::neg(gen_formula(rng, n_statements, depth - 1));
    default: {
      std::vector<Formula> kids;
      kids.push_back(gen_formula(rng, n_statements, depth - 1));
      kids.push_back(gen_formula(rng, n_statements, depth - 1));
      return roll == 8 ? Formula::conj(std::move(kids))
                       : Formula::disj(std::move(kids));
    }
  }
}

}  // namespace

Adf gen_adf(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n = 1 + static_cast<int>(rng.bounded(cfg.max_statements));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(atom_name(i));
  std::vector<Formula> formulas;
  for (int s = 0; s < n; ++s) formulas.push_back(gen_formula(rng, n, 2));
  return Adf(Universe::of(names), std::move(formulas));
}

AdfPlus gen_adfplus(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n = 1 + static_cast<int>(rng.bounded(cfg.max_statements));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(atom_name(i));
  std::vector<Formula> formulas;
  for (int s = 0; s < n; ++s) {
    const int max_par = std::min(cfg.max_parents, n);
    const int n_par = static_cast<int>(rng.bounded(max_par + 1));
    std::vector<int> parents;
    for (int j = 0; j < n_par; ++j) {
      int p = static_cast<int>(rng.bounded(n));
      if (std::find(parents.begin(), parents.end(), p) == parents.end()) {
        parents.push_back(p);
      }
    }
    // a disjunction of negative conjunctions is attacking by shape
    const int n_disjuncts = static_cast<int>(rng.bounded(4));
    std::vector<Formula> disjuncts;
    for (int dj = 0; dj < n_disjuncts; ++dj) {
      std::uint64_t mask = rng.bounded(std::uint64_t{1} << parents.size());
      std::vector<Formula> lits;
      for (std::size_t b = 0; b < parents.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) {
          lits.push_back(Formula::neg(Formula::atom(atom_name(parents[b]))));
        }
      }
      disjuncts.push_back(Formula::conj(std::move(lits)));
    }
    formulas.push_back(Formula::disj(std::move(disjuncts)));
  }
  return require_adfplus(Adf(Universe::of(names), std::move(formulas)));
}

CSetFamily gen_downward_family(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n_par = 1 + static_cast<int>(rng.bounded(cfg.max_parents));
  CSetFamily fam;
  // parents p1..pk so generated targets never collide with them
  for (int i = 0; i < n_par; ++i) {
    fam.parents.push_back("p" + std::to_string(i + 1));
  }
  const int n_seeds = static_cast<int>(rng.bounded(4));
  std::vector<bool> member(std::size_t{1} << n_par, false);
  for (int i = 0; i < n_seeds; ++i) {
    std::uint32_t top =
        static_cast<std::uint32_t>(rng.bounded(std::uint64_t{1} << n_par));
    // close downward: every submask of an accepted set is accepted
    std::uint32_t sub = top;
    while (true) {
      member[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & top;
    }
  }
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n_par); ++m) {
    if (member[m]) fam.accepted.push_back(m);
  }
  return fam;
}

Setaf gen_setaf(std::uint64_t seed, const GenConfig& cfg) {
  SplitMix64 rng(seed);
  const int n = 1 + static_cast<int>(rng.bounded(cfg.max_statements));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(atom_name(i));
  Setaf sf;
  sf.arguments = Universe::of(names);
  const int n_atts = static_cast<int>(rng.bounded(2 * n + 1));
  for (int i = 0; i < n_atts; ++i) {
    Setaf::Attack att;
    att.target = static_cast<int>(rng.bounded(n));
    const int k = 1 + static_cast<int>(rng.bounded(3));
    for (int j = 0; j < k; ++j) {
      att.sources.push_back(static_cast<int>(rng.bounded(n)));
    }
    std::sort(att.sources.begin(), att.sources.end());
    att.sources.erase(std::unique(att.sources.begin(), att.sources.end()),
                      att.sources.end());
    sf.attacks.push_back(std::move(att));
  }
  return sf;
}

namespace {

// paper-fixed instances; fixed-instance failures report seed 0

const char* kExNlp =
    "b :- c, not a.\n"
    "a :- not b.\n"
    "c :- d.\n"
    "p :- c, d, not p.\n"
    "p :- not a.\n"
    "d.\n";

const char* kP1 = "c.\nb :- not b.\na :- b.\na :- c.\n";

const char* kP2 =
    "c.\nb :- not b.\na :- b, not c.\na :- c, not b.\na :- b, c.\n";

const char* kExAdf =
    "s(a). s(b). s(c). s(d). s(e).\n"
    "ac(a, neg(b)). ac(b, neg(a)). ac(c, and(neg(b), e)).\n"
    "ac(d, neg(c)). ac(e, neg(d)).\n";

const char* kExAdf2 =
    "s(a). s(b). s(c). s(d). s(e).\n"
    "ac(a, neg(b)). ac(b, neg(a)).\n"
    "ac(c, or(and(neg(c), neg(a)), and(neg(c), neg(d)))).\n"
    "ac(d, neg(d)). ac(e, and(neg(e), neg(b))).\n";

const char* kPart1Adf =
    "s(a). s(b). s(c).\n"
    "ac(a, c(v)). ac(b, or(neg(a), c)). ac(c, b).\n";

const char* kSelfAttack = "s(a). ac(a, neg(a)).";

// negative-body-only program (P(Ξ) of the worked program example)
const char* kNegBody =
    "b :- not a.\na :- not b.\nc.\np :- not p.\np :- not a.\nd.\n";

using Mismatch = std::optional<std::pair<std::string, std::string>>;

struct Check {
  // runs all fixed instances and `trials` generated ones
  std::function<void(const GenConfig&, CheckReport&)> run;
};

void record(CheckReport& rep, std::uint64_t seed, const std::string& instance,
            const Mismatch& mm) {
  ++rep.trials;
  if (mm) rep.failures.push_back({seed, instance, mm->first, mm->second});
}

// generic driver: paper-fixed instances first, then the seeded stream
template <typename Instance, typename Gen, typename Ser, typename Test>
void drive_with(const GenConfig& cfg, CheckReport& rep,
                const std::vector<Instance>& fixed, Gen gen, Ser serialize,
                Test test) {
  for (const Instance& inst : fixed) {
    record(rep, 0, serialize(inst), test(inst));
  }
  SplitMix64 master(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    std::uint64_t seed = master.next();
    Instance inst = gen(seed, cfg);
    record(rep, seed, serialize(inst), test(inst));
  }
}

Mismatch check_pstable_complete_on(const Program& p) {
  std::string lhs = model_set(lp_models(p, LpSemantics::PartialStable));
  std::string rhs = model_set(complete_models(xi(p).framework()));
  if (lhs != rhs) return {{"psm(P) = " + lhs, "complete(xi(P)) = " + rhs}};
  return std::nullopt;
}

Mismatch check_equivalence_on(const Program& p) {
  AdfPlus d = xi(p);
  const Adf& fw = d.framework();
  std::string wf = model_set(lp_models(p, LpSemantics::WellFounded));
  std::string gr = model_set({grounded_model(fw)});
  if (wf != gr) return {{"wellfounded(P) = " + wf, "grounded(xi(P)) = " + gr}};
  std::string reg = model_set(lp_models(p, LpSemantics::Regular));
  std::string pref = model_set(preferred_models(fw));
  if (reg != pref) return {{"regular(P) = " + reg, "preferred(xi(P)) = " + pref}};
  std::string lst = model_set(lp_models(p, LpSemantics::Stable));
  std::string ast = model_set(stable_models(fw));
  if (lst != ast) return {{"stable(P) = " + lst, "stable(xi(P)) = " + ast}};
  std::string ll = model_set(lp_models(p, LpSemantics::LStable));
  std::string al = model_set(l_stable_models(fw));
  if (ll != al) return {{"lstable(P) = " + ll, "lstable(xi(P)) = " + al}};
  return std::nullopt;
}

Mismatch check_gammaomega_on(const AdfPlus& d) {
  const Adf& fw = d.framework();
  InterpretationStream stream(fw.statements());
  while (auto v = stream.next()) {
    Interpretation lhs = gamma(fw, *v);
    Interpretation rhs = gamma_plus(d, *v);
    if (!(lhs == rhs)) {
      return {{"gamma at v=" + canonical_literals(*v) + ": " +
                   canonical_literals(lhs),
               "gamma_plus: " + canonical_literals(rhs)}};
    }
  }
  return std::nullopt;
}

Mismatch check_stable2valued_on(const AdfPlus& d) {
  std::string lhs = model_set(stable_models(d.framework()));
  std::string rhs = model_set(stable_models_plus(d));
  if (lhs != rhs) return {{"stable(D) = " + lhs, "2-valued-complete(D) = " + rhs}};
  return std::nullopt;
}

Mismatch check_redundancy_on(const CSetFamily& fam) {
  // one statement t0 carrying the family, parents as falsum statements
  std::vector<std::string> names = fam.parents;
  names.push_back("t0");
  std::vector<Formula> formulas;
  for (std::size_t i = 0; i < fam.parents.size(); ++i) {
    formulas.push_back(Formula::falsum());
  }
  formulas.push_back(cset_to_formula(fam));
  Adf adf(Universe::of(names), std::move(formulas));
  AdfPlus plus = require_adfplus(adf);

  // the actual parents may be fewer than fam.parents when the full DNF
  // cancels an atom; classify only derived links
  const std::vector<int>& par = adf.parents(adf.size() - 1);

  std::vector<std::string> by_def;
  for (int r : par) {
    if (classify_link(adf, adf.statements()->name(r), "t0") ==
        LinkClass::Redundant) {
      by_def.push_back(adf.statements()->name(r));
    }
  }
  std::vector<std::string> by_count;
  for (const Link& l : redundant_links_by_count(plus)) {
    if (l.target == "t0") by_count.push_back(l.source);
  }
  std::sort(by_count.begin(), by_count.end());
  std::sort(by_def.begin(), by_def.end());

  // membership route: r in every maximal accepted subset
  CSetFamily fam_derived = formula_to_cset(adf.acceptance("t0"));
  CSetFamily mx = cmax(fam_derived);
  std::vector<std::string> by_cmax;
  for (std::size_t b = 0; b < fam_derived.parents.size(); ++b) {
    bool in_all = true;
    for (std::uint32_t mask : mx.accepted) {
      if (!(mask & (std::uint32_t{1} << b))) {
        in_all = false;
        break;
      }
    }
    if (in_all && !mx.accepted.empty()) by_cmax.push_back(fam_derived.parents[b]);
    if (mx.accepted.empty()) by_cmax.push_back(fam_derived.parents[b]);
  }
  std::sort(by_cmax.begin(), by_cmax.end());

  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (const std::string& x : xs) out += x + " ";
    return out;
  };
  if (by_def != by_count) {
    return {{"definition: " + join(by_def), "counting: " + join(by_count)}};
  }
  if (by_def != by_cmax) {
    return {{"definition: " + join(by_def), "cmax membership: " + join(by_cmax)}};
  }
  return std::nullopt;
}

Mismatch check_xi_eq_xi2_on(const Program& p) {
  Adf a = xi(p).framework();
  Adf b = xi2(p);
  if (!(*a.statements() == *b.statements())) {
    return {{"statements of xi(P)", "differ from xi2(P)"}};
  }
  // classical equivalence per statement over all 2-valued assignments
  auto u = a.statements();
  const int n = u->size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Truth> values(n);
    for (int i = 0; i < n; ++i) {
      values[i] = (mask >> i) & 1 ? Truth::True : Truth::False;
    }
    Interpretation v(u, std::move(values));
    for (int s = 0; s < n; ++s) {
      Truth ta = eval_kleene(a.acceptance(s), v);
      Truth tb = eval_kleene(b.acceptance(s), v);
      if (ta != tb) {
        return {{"xi(P) acceptance of '" + u->name(s) + "' at " +
                     canonical_literals(v) + " = " + to_char(ta),
                 std::string("xi2(P) = ") + to_char(tb)}};
      }
    }
  }
  return std::nullopt;
}

Mismatch check_setaf_on(const Setaf& sf) {
  AdfPlus d = setaf_to_adf(sf);
  auto result = check_adfplus(d.framework());
  if (auto* violation = std::get_if<AdfPlusViolation>(&result)) {
    return {{"an attacking framework", violation->describe()}};
  }
  return std::nullopt;
}

Mismatch check_psm_is_complete_on(const Adf& d) {
  std::vector<Interpretation> psm = part1_models(d, Part1Semantics::PartialStable);
  std::vector<Interpretation> completes = complete_models_kleene(d);
  for (const Interpretation& v : psm) {
    if (std::find(completes.begin(), completes.end(), v) == completes.end()) {
      return {{"partial stable " + canonical_literals(v),
               "is not a complete model"}};
    }
  }
  return std::nullopt;
}

Mismatch check_gamma_monotone_on(const Adf& d) {
  std::vector<Interpretation> all = enumerate_interpretations(d.statements());
  std::vector<Interpretation> images;
  images.reserve(all.size());
  for (const Interpretation& v : all) images.push_back(gamma(d, v));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (leq_info(all[i], all[j]) && !leq_info(images[i], images[j])) {
        return {{"gamma(" + canonical_literals(all[i]) + ") <=_i gamma(" +
                     canonical_literals(all[j]) + ")",
                 canonical_literals(images[i]) + " vs " +
                     canonical_literals(images[j])}};
      }
    }
  }
  return std::nullopt;
}

Mismatch check_grounded_least_on(const Adf& d) {
  Interpretation g = grounded_model(d);
  if (!(gamma(d, g) == g)) {
    return {{"grounded is a gamma fixpoint", canonical_literals(g)}};
  }
  for (const Interpretation& c : complete_models(d)) {
    if (!leq_info(g, c)) {
      return {{"grounded <=_i every complete model",
               canonical_literals(g) + " vs " + canonical_literals(c)}};
    }
  }
  // the pointwise-operator route: the Kleene grounded model is the least
  // fixpoint, the least pre-fixpoint and the least partial stable model
  Interpretation gk = grounded_model_kleene(d);
  if (!(gamma_kleene(d, gk) == gk)) {
    return {{"kleene grounded is a fixpoint", canonical_literals(gk)}};
  }
  InterpretationStream stream(d.statements());
  while (auto v = stream.next()) {
    if (leq_info(gamma_kleene(d, *v), *v) && !leq_info(gk, *v)) {
      return {{"kleene grounded <=_i every pre-fixpoint",
               canonical_literals(gk) + " vs " + canonical_literals(*v)}};
    }
  }
  std::vector<Interpretation> psm = part1_models(d, Part1Semantics::PartialStable);
  bool found = false;
  for (const Interpretation& v : psm) {
    if (v == gk) found = true;
    if (!leq_info(gk, v)) {
      return {{"kleene grounded <=_i every partial stable model",
               canonical_literals(gk) + " vs " + canonical_literals(v)}};
    }
  }
  if (!found) {
    return {{"kleene grounded is partial stable", canonical_literals(gk)}};
  }
  return std::nullopt;
}

// the reverse translation composed with the support-based one: the program
// P(Xi) and the framework Xi(P(Xi)) are equivalent under the whole
// semantics ladder. (The stronger reading "P(Xi) is equivalent to Xi
// itself" fails already on three-statement frameworks: positive-body rules
// derived from the subset families can be self-supporting, and the
// program's least-model computation rejects what the consensus operator
// accepts.)
Mismatch check_pxi_on(const Adf& d) {
  Program p = p_of_xi(d);
  AdfPlus round = xi(p);
  const Adf& fw = round.framework();
  std::string psm = model_set(lp_models(p, LpSemantics::PartialStable));
  std::string complete = model_set(complete_models(fw));
  if (psm != complete) {
    return {{"psm(P(Xi)) = " + psm, "complete(Xi(P(Xi))) = " + complete}};
  }
  std::string wf = model_set(lp_models(p, LpSemantics::WellFounded));
  std::string gr = model_set({grounded_model(fw)});
  if (wf != gr) {
    return {{"wellfounded(P(Xi)) = " + wf, "grounded(Xi(P(Xi))) = " + gr}};
  }
  std::string reg = model_set(lp_models(p, LpSemantics::Regular));
  std::string pref = model_set(preferred_models(fw));
  if (reg != pref) {
    return {{"regular(P(Xi)) = " + reg, "preferred(Xi(P(Xi))) = " + pref}};
  }
  std::string lst = model_set(lp_models(p, LpSemantics::Stable));
  std::string ast = model_set(stable_models(fw));
  if (lst != ast) {
    return {{"stable(P(Xi)) = " + lst, "stable(Xi(P(Xi))) = " + ast}};
  }
  return std::nullopt;
}

// looks for separating instances between the Part-I semantics pairs; the
// check itself never fails, found witnesses land in the notes
void run_search_negatives(const GenConfig& cfg, CheckReport& rep) {
  struct Claim {
    const char* name;
    int count = 0;
    std::uint64_t first_seed = 0;
  };
  Claim claims[4] = {{"preferred-not-regular"},
                     {"regular-not-preferred"},
                     {"lstable-not-semistable"},
                     {"semistable-not-lstable"}};
  auto not_subset = [](const std::vector<Interpretation>& a,
                       const std::vector<Interpretation>& b) {
    for (const Interpretation& v : a) {
      if (std::find(b.begin(), b.end(), v) == b.end()) return true;
    }
    return false;
  };
  SplitMix64 master(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    std::uint64_t seed = master.next();
    GenConfig clamped = cfg;
    clamped.max_statements = std::min(cfg.max_statements, 5);
    Adf d = gen_adf(seed, clamped);
    ++rep.trials;
    // Part-I preferred models are the ≤_i-maximal Kleene-complete models
    std::vector<Interpretation> preferred =
        detail::filter_maximal_info(complete_models_kleene(d));
    std::vector<Interpretation> regular = part1_models(d, Part1Semantics::Regular);
    std::vector<Interpretation> semi = part1_models(d, Part1Semantics::SemiStable);
    std::vector<Interpretation> lst = part1_models(d, Part1Semantics::LStable);
    bool hits[4] = {not_subset(preferred, regular), not_subset(regular, preferred),
                    not_subset(lst, semi), not_subset(semi, lst)};
    for (int i = 0; i < 4; ++i) {
      if (hits[i]) {
        if (claims[i].count == 0) claims[i].first_seed = seed;
        ++claims[i].count;
      }
    }
  }
  for (const Claim& c : claims) {
    std::ostringstream note;
    note << c.name << ": " << c.count << " witnesses";
    if (c.count > 0) note << " (first at seed " << c.first_seed << ")";
    rep.notes.push_back(note.str());
  }
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "pstable-complete", "equivalence",      "gammaomega",
      "stable2valued",    "redundancy-count", "xi-eq-xi2-negbody",
      "setaf-is-adfplus", "psm-is-complete",  "gamma-monotone",
      "grounded-least",   "pxi-equivalence",  "search-negatives"};
  return names;
}

CheckReport run_check(const std::string& name, const GenConfig& cfg) {
  std::string canonical = name;
  if (name == "pstable↔complete") canonical = "pstable-complete";

  CheckReport rep;
  rep.check = canonical;

  if (canonical == "pstable-complete") {
    drive_with<Program>(cfg, rep,
                        {parse_program(kExNlp), parse_program(kP1),
                         parse_program(kP2)},
                        gen_program, render_program, check_pstable_complete_on);
  } else if (canonical == "equivalence") {
    drive_with<Program>(cfg, rep,
                        {parse_program(kExNlp), parse_program(kP1),
                         parse_program(kP2)},
                        gen_program, render_program, check_equivalence_on);
  } else if (canonical == "gammaomega") {
    drive_with<AdfPlus>(
        cfg, rep,
        {require_adfplus(parse_adf(kExAdf2)), xi(parse_program(kExNlp))},
        gen_adfplus,
        [](const AdfPlus& d) { return render_adf(d.framework()); },
        check_gammaomega_on);
  } else if (canonical == "stable2valued") {
    drive_with<AdfPlus>(
        cfg, rep,
        {require_adfplus(parse_adf(kExAdf2)),
         require_adfplus(parse_adf(kSelfAttack)), xi(parse_program(kExNlp))},
        gen_adfplus,
        [](const AdfPlus& d) { return render_adf(d.framework()); },
        check_stable2valued_on);
  } else if (canonical == "redundancy-count") {
    CSetFamily section3;  // the worked redundancy example
    section3.parents = {"b", "c"};
    section3.accepted = {0u, 1u};  // ∅ and {b}
    CSetFamily only_empty;
    only_empty.parents = {"b"};
    only_empty.accepted = {0u};
    drive_with<CSetFamily>(cfg, rep, {section3, only_empty},
                           gen_downward_family, family_to_string,
                           check_redundancy_on);
  } else if (canonical == "xi-eq-xi2-negbody") {
    drive_with<Program>(cfg, rep, {parse_program(kNegBody)},
                        gen_negative_body_program, render_program,
                        check_xi_eq_xi2_on);
  } else if (canonical == "setaf-is-adfplus") {
    Setaf single = parse_setaf("arg(a). arg(b). att([a], b).");
    Setaf joint = parse_setaf("arg(a). arg(b). arg(c). att([a,b], c).");
    drive_with<Setaf>(cfg, rep, {single, joint}, gen_setaf, render_setaf,
                      check_setaf_on);
  } else if (canonical == "psm-is-complete") {
    drive_with<Adf>(cfg, rep, {parse_adf(kPart1Adf), parse_adf(kExAdf)},
                    gen_adf, render_adf, check_psm_is_complete_on);
  } else if (canonical == "gamma-monotone") {
    GenConfig clamped = cfg;
    clamped.max_statements = std::min(cfg.max_statements, 4);
    drive_with<Adf>(clamped, rep, {parse_adf(kExAdf), parse_adf(kExAdf2)},
                    gen_adf, render_adf, check_gamma_monotone_on);
  } else if (canonical == "grounded-least") {
    GenConfig clamped = cfg;
    clamped.max_statements = std::min(cfg.max_statements, 5);
    drive_with<Adf>(clamped, rep,
                    {parse_adf(kPart1Adf), parse_adf(kExAdf),
                     parse_adf(kExAdf2)},
                    gen_adf, render_adf, check_grounded_least_on);
  } else if (canonical == "pxi-equivalence") {
    GenConfig clamped = cfg;
    clamped.max_statements = std::min(cfg.max_statements, 5);
    drive_with<Adf>(clamped, rep, {parse_adf(kExAdf), parse_adf(kPart1Adf)},
                    gen_adf, render_adf, check_pxi_on);
  } else if (canonical == "search-negatives") {
    run_search_negatives(cfg, rep);
  } else {
    throw Error("unknown check '" + name + "'");
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const CheckFailure& a, const CheckFailure& b) {
              return a.seed < b.seed;
            });
  return rep;
}

std::string reports_to_json(std::span<const CheckReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckReport& rep : reports) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const CheckFailure& f : rep.failures) {
      failures.push_back({{"seed", f.seed},
                          {"instance", f.instance},
                          {"expected", f.expected},
                          {"actual", f.actual}});
    }
    arr.push_back({{"check", rep.check},
                   {"trials", rep.trials},
                   {"failures", std::move(failures)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace adfkit
