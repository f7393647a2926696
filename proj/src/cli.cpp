#include "adfkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adfkit/adf.hpp"
#include "adfkit/adfplus.hpp"
#include "adfkit/errors.hpp"
#include "adfkit/nlp.hpp"
#include "adfkit/translate.hpp"
#include "adfkit/verify.hpp"

namespace adfkit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapacity = 3;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// semantics names are flat; the format flag disambiguates the two worlds
const std::map<std::string, Part1Semantics> kPart1Names = {
    {"admissible", Part1Semantics::Admissible},
    {"partialstable", Part1Semantics::PartialStable},
    {"regular", Part1Semantics::Regular},
    {"semistable", Part1Semantics::SemiStable},
};

const std::map<std::string, LpSemantics> kLpNames = {
    {"psm", LpSemantics::PartialStable},
    {"wellfounded", LpSemantics::WellFounded},
    {"lpregular", LpSemantics::Regular},
    {"lpstable", LpSemantics::Stable},
    {"lplstable", LpSemantics::LStable},
};

bool adf_side_semantics(const std::string& name) {
  return name == "complete" || name == "grounded" || name == "preferred" ||
         name == "stable" || name == "lstable" || kPart1Names.count(name) > 0;
}

void print_models(const std::vector<Interpretation>& models,
                  const std::string& output, bool unicode, std::ostream& out) {
  if (output == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Interpretation& v : models) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (int i = 0; i < v.size(); ++i) {
        obj[v.universe()->name(i)] = std::string(1, to_char(v.value(i)));
      }
      arr.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["models"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    for (const Interpretation& v : models) {
      out << v.to_set_string(unicode) << "\n";
    }
  }
}

Adf load_adf_input(const std::string& format, const std::string& text,
                   bool assert_adfplus, std::ostream& err) {
  Adf d = format == "setaf" ? setaf_to_adf(parse_setaf(text)).framework()
                            : parse_adf(text);
  if (assert_adfplus && format == "adf") {
    auto result = check_adfplus(d);
    if (auto* violation = std::get_if<AdfPlusViolation>(&result)) {
      err << "error: " << violation->describe() << "\n";
      throw Error("input is not an attacking framework");
    }
  }
  return d;
}

int cmd_solve(const std::string& format, const std::string& semantics,
              const std::string& input_path, const std::string& output,
              bool unicode, bool assert_adfplus, int bound, std::istream& in,
              std::ostream& out, std::ostream& err) {
  std::string text = read_input(input_path, in);
  std::vector<Interpretation> models;

  if (format == "nlp") {
    if (adf_side_semantics(semantics)) {
      err << "error: semantics '" << semantics
          << "' applies to adf/setaf input";
      if (kLpNames.count("lp" + semantics)) {
        err << " (use 'lp" << semantics << "' for programs)";
      } else if (semantics == "stable" || semantics == "lstable") {
        err << " (use 'lp" << semantics << "' for programs)";
      }
      err << "\n";
      return kExitInputError;
    }
    auto it = kLpNames.find(semantics);
    if (it == kLpNames.end()) {
      err << "error: unknown semantics '" << semantics << "'\n";
      return kExitInputError;
    }
    Program p = parse_program(text);
    models = lp_models(p, it->second, bound);
  } else {
    if (kLpNames.count(semantics)) {
      err << "error: semantics '" << semantics
          << "' applies to nlp input (solve the translated framework or "
             "drop the lp prefix)\n";
      return kExitInputError;
    }
    Adf d = load_adf_input(format, text, assert_adfplus, err);
    if (semantics == "complete") {
      models = complete_models(d, bound);
    } else if (semantics == "grounded") {
      models = {grounded_model(d)};
    } else if (semantics == "preferred") {
      models = preferred_models(d, bound);
    } else if (semantics == "stable") {
      models = stable_models(d, bound);
    } else if (semantics == "lstable") {
      if (format == "adf" &&
          std::holds_alternative<AdfPlusViolation>(check_adfplus(d))) {
        err << "note: input is not an attacking framework; computing "
               "L-stable (Part II definition: complete models with minimal "
               "unknown set)\n";
      }
      models = l_stable_models(d, bound);
    } else {
      auto it = kPart1Names.find(semantics);
      if (it == kPart1Names.end()) {
        err << "error: unknown semantics '" << semantics << "'\n";
        return kExitInputError;
      }
      models = part1_models(d, it->second, bound);
    }
  }

  print_models(models, output, unicode, out);
  return models.empty() ? kExitEmpty : kExitOk;
}

int cmd_translate(const std::string& from, const std::string& to,
                  const std::string& input_path, bool naive,
                  bool assert_adfplus, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  std::string text = read_input(input_path, in);
  if (from == "nlp" && to == "adf") {
    Program p = parse_program(text);
    out << render_adf(naive ? xi2(p) : xi(p).framework());
    return kExitOk;
  }
  if (from == "adf" && to == "nlp") {
    Adf d = load_adf_input(from, text, assert_adfplus, err);
    out << render_program(p_of_xi(d));
    return kExitOk;
  }
  if (from == "setaf" && to == "adf") {
    out << render_adf(setaf_to_adf(parse_setaf(text)).framework());
    return kExitOk;
  }
  err << "error: unsupported translation " << from << " -> " << to
      << " (supported: nlp->adf, adf->nlp, setaf->adf)\n";
  return kExitInputError;
}

int cmd_links(const std::string& input_path, bool prune,
              bool assert_adfplus, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::string text = read_input(input_path, in);
  Adf d = load_adf_input("adf", text, assert_adfplus, err);
  auto result = check_adfplus(d);
  const AdfPlus* plus = std::get_if<AdfPlus>(&result);

  if (prune) {
    if (!plus) {
      err << "error: --prune-redundant needs an attacking framework: "
          << std::get<AdfPlusViolation>(result).describe() << "\n";
      return kExitInputError;
    }
    out << render_adf(plus->simplified_framework());
    return kExitOk;
  }

  if (plus) {
    // counting path: in an attacking framework every link is attacking,
    // and the counting test isolates the redundant ones
    std::vector<Link> redundant = redundant_links_by_count(*plus);
    for (const Link& link : d.links()) {
      bool is_redundant =
          std::find(redundant.begin(), redundant.end(), link) != redundant.end();
      out << "(" << link.source << "," << link.target
          << "): " << (is_redundant ? "redundant" : "attacking") << "\n";
    }
  } else {
    for (const Link& link : d.links()) {
      out << "(" << link.source << "," << link.target
          << "): " << to_string(classify_link(d, link.source, link.target))
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(std::vector<std::string> checks, std::uint64_t seed, int trials,
               const std::string& output, std::ostream& out,
               std::ostream& err) {
  if (checks.empty()) {
    for (const std::string& name : check_names()) {
      if (name != "search-negatives") checks.push_back(name);
    }
  }
  GenConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;

  std::vector<CheckReport> reports;
  for (const std::string& name : checks) {
    reports.push_back(run_check(name, cfg));
  }

  if (output == "json") {
    out << reports_to_json(reports);
  } else {
    for (const CheckReport& rep : reports) {
      out << "check " << rep.check << ": "
          << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.trials
          << " trials";
      if (!rep.passed()) out << ", " << rep.failures.size() << " failures";
      out << ")\n";
      for (const std::string& note : rep.notes) {
        out << "  note: " << note << "\n";
      }
      if (!rep.failures.empty()) {
        const CheckFailure& f = rep.failures.front();
        err << "first failure of " << rep.check << " (seed " << f.seed
            << "):\n  instance: " << f.instance << "\n  expected: " << f.expected
            << "\n  actual:   " << f.actual << "\n";
      }
    }
  }
  for (const CheckReport& rep : reports) {
    if (!rep.passed()) return kExitEmpty;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"semantics and translations for dialectical frameworks and "
               "normal logic programs"};
  app.require_subcommand(1);

  // solve
  std::string format = "adf";
  std::string semantics = "complete";
  std::string input_path = "-";
  std::string output = "text";
  bool unicode = false;
  bool assert_adfplus = false;
  int bound = kDefaultEnumerationBound;

  CLI::App* solve = app.add_subcommand("solve", "compute models");
  solve->add_option("--format", format, "input language: nlp, adf or setaf")
      ->check(CLI::IsMember({"nlp", "adf", "setaf"}))
      ->required();
  solve->add_option("--semantics", semantics, "semantics name")->required();
  solve->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--max-statements", bound, "enumeration bound");
  solve->add_flag("--unicode", unicode, "render negation as ¬");
  solve->add_flag("--assert-adfplus", assert_adfplus,
                  "reject non-attacking adf input");
  solve->add_option("input", input_path, "input file, or - for stdin");

  // translate
  std::string from, to;
  bool naive = false;
  CLI::App* translate = app.add_subcommand("translate", "convert formats");
  translate->add_option("--from", from, "source language")
      ->check(CLI::IsMember({"nlp", "adf", "setaf"}))
      ->required();
  translate->add_option("--to", to, "target language")
      ->check(CLI::IsMember({"nlp", "adf"}))
      ->required();
  translate->add_flag("--naive", naive,
                      "use the rule-body translation instead of the "
                      "support-based one (nlp->adf only)");
  translate->add_flag("--assert-adfplus", assert_adfplus,
                      "reject non-attacking adf input");
  translate->add_option("input", input_path, "input file, or - for stdin");

  // links
  bool prune = false;
  CLI::App* links = app.add_subcommand("links", "classify dependency links");
  links->add_flag("--prune-redundant", prune,
                  "print the framework with simplified acceptance conditions");
  links->add_flag("--assert-adfplus", assert_adfplus,
                  "reject non-attacking adf input");
  links->add_option("input", input_path, "input file, or - for stdin");

  // verify
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  int trials = 200;
  CLI::App* verify = app.add_subcommand("verify", "run the differential checks");
  verify->add_option("--check", checks, "check name (repeatable; default all)");
  verify->add_option("--seed", seed, "stream seed");
  verify->add_option("--trials", trials, "randomized trials per check");
  verify->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<const char*> argv;
    argv.push_back("adfkit");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(format, semantics, input_path, output, unicode,
                       assert_adfplus, bound, in, out, err);
    }
    if (translate->parsed()) {
      return cmd_translate(from, to, input_path, naive, assert_adfplus, in,
                           out, err);
    }
    if (links->parsed()) {
      return cmd_links(input_path, prune, assert_adfplus, in, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(checks, seed, trials, output, out, err);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace adfkit
