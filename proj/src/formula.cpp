#include "adfkit/formula.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "formula_parse.hpp"
#include "scan.hpp"

namespace adfkit {

struct Formula::Node {
  Kind kind;
  std::string atom;           // Atom
  std::vector<Formula> kids;  // Neg (one), And/Or (two or more)

  Node(Kind k, std::string a, std::vector<Formula> ks)
      : kind(k), atom(std::move(a)), kids(std::move(ks)) {}
};

Formula Formula::atom(std::string name) {
  if (!atom_name_valid(name)) {
    throw Error("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<Node>(Kind::Atom, std::move(name),
                                        std::vector<Formula>{}));
}

Formula Formula::verum() {
  return Formula(std::make_shared<Node>(Kind::Verum, std::string{},
                                        std::vector<Formula>{}));
}

Formula Formula::falsum() {
  return Formula(std::make_shared<Node>(Kind::Falsum, std::string{},
                                        std::vector<Formula>{}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<Node>(Kind::Neg, std::string{},
                                        std::vector<Formula>{std::move(f)}));
}

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty()) return verum();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula(std::make_shared<Node>(Kind::And, std::string{}, std::move(fs)));
}

Formula Formula::disj(std::vector<Formula> fs) {
  if (fs.empty()) return falsum();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula(std::make_shared<Node>(Kind::Or, std::string{}, std::move(fs)));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const { return node_->atom; }

const Formula& Formula::child() const { return node_->kids.front(); }

const std::vector<Formula>& Formula::children() const { return node_->kids; }

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out,
                   std::unordered_set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (seen.insert(f.atom_name()).second) out.push_back(f.atom_name());
      break;
    case Formula::Kind::Neg:
      collect_atoms(f.child(), out, seen);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const Formula& k : f.children()) collect_atoms(k, out, seen);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(*this, out, seen);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom:
      return atom_name() == other.atom_name();
    case Kind::Verum:
    case Kind::Falsum:
      return true;
    case Kind::Neg:
      return child() == other.child();
    case Kind::And:
    case Kind::Or:
      return children() == other.children();
  }
  return false;
}

Truth eval_kleene(const Formula& f, const Interpretation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return v.value(f.atom_name());
    case Formula::Kind::Verum:
      return Truth::True;
    case Formula::Kind::Falsum:
      return Truth::False;
    case Formula::Kind::Neg:
      return negate(eval_kleene(f.child(), v));
    case Formula::Kind::And: {
      Truth acc = Truth::True;
      for (const Formula& k : f.children()) {
        acc = conj(acc, eval_kleene(k, v));
        if (acc == Truth::False) break;
      }
      return acc;
    }
    case Formula::Kind::Or: {
      Truth acc = Truth::False;
      for (const Formula& k : f.children()) {
        acc = disj(acc, eval_kleene(k, v));
        if (acc == Truth::True) break;
      }
      return acc;
    }
  }
  throw Error("corrupt formula");
}

Formula substitute_falsum(const Formula& f,
                          const std::function<bool(const std::string&)>& pred) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return pred(f.atom_name()) ? Formula::falsum() : f;
    case Formula::Kind::Verum:
    case Formula::Kind::Falsum:
      return f;
    case Formula::Kind::Neg:
      return Formula::neg(substitute_falsum(f.child(), pred));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const Formula& k : f.children()) {
        kids.push_back(substitute_falsum(k, pred));
      }
      // keep the node arity; conj/disj only collapse the degenerate cases
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                            : Formula::disj(std::move(kids));
    }
  }
  throw Error("corrupt formula");
}

namespace detail {

Formula parse_formula_at(Scanner& scan) {
  if (!scan.ident_ahead()) scan.fail("expected a formula");
  std::string word = scan.ident();
  if (scan.peek() != '(') {
    if (!atom_name_valid(word)) {
      scan.fail("invalid atom name '" + word + "'");
    }
    return Formula::atom(std::move(word));
  }
  scan.expect('(', "after connective");
  if (word == "c") {
    std::string which = scan.ident();
    Formula out = Formula::verum();
    if (which == "v") {
      out = Formula::verum();
    } else if (which == "f") {
      out = Formula::falsum();
    } else {
      scan.fail("expected c(v) or c(f)");
    }
    scan.expect(')', "to close the constant");
    return out;
  }
  if (word == "neg") {
    Formula inner = parse_formula_at(scan);
    scan.expect(')', "to close neg(...)");
    return Formula::neg(std::move(inner));
  }
  if (word == "and" || word == "or") {
    std::vector<Formula> kids;
    kids.push_back(parse_formula_at(scan));
    while (scan.try_consume(',')) {
      kids.push_back(parse_formula_at(scan));
    }
    scan.expect(')', "to close the connective");
    return word == "and" ? Formula::conj(std::move(kids))
                         : Formula::disj(std::move(kids));
  }
  scan.fail("unknown connective '" + word + "'");
}

}  // namespace detail

Formula parse_formula(std::string_view text) {
  detail::Scanner scan(text);
  Formula out = detail::parse_formula_at(scan);
  if (!scan.eof()) scan.fail("trailing input after formula");
  return out;
}

namespace {

void render_to(const Formula& f, std::ostringstream& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out << f.atom_name();
      return;
    case Formula::Kind::Verum:
      out << "c(v)";
      return;
    case Formula::Kind::Falsum:
      out << "c(f)";
      return;
    case Formula::Kind::Neg:
      out << "neg(";
      render_to(f.child(), out);
      out << ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      out << (f.kind() == Formula::Kind::And ? "and(" : "or(");
      bool first = true;
      for (const Formula& k : f.children()) {
        if (!first) out << ',';
        render_to(k, out);
        first = false;
      }
      out << ')';
      return;
    }
  }
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::ostringstream out;
  render_to(f, out);
  return out.str();
}

}  // namespace adfkit
