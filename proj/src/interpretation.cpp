#include "adfkit/interpretation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adfkit {

bool atom_name_valid(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::shared_ptr<const Universe> Universe::of(std::vector<std::string> atoms) {
  auto u = std::make_shared<Universe>();
  u->atoms_ = std::move(atoms);
  u->index_.reserve(u->atoms_.size());
  for (int i = 0; i < static_cast<int>(u->atoms_.size()); ++i) {
    const std::string& name = u->atoms_[i];
    if (!atom_name_valid(name)) {
      throw Error("invalid atom name '" + name + "'");
    }
    if (!u->index_.emplace(name, i).second) {
      throw Error("duplicate atom '" + name + "'");
    }
  }
  return u;
}

int Universe::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Interpretation::Interpretation(UniversePtr universe, Truth fill)
    : universe_(std::move(universe)),
      values_(static_cast<std::size_t>(universe_->size()), fill) {}

Interpretation::Interpretation(UniversePtr universe, std::vector<Truth> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != universe_->size()) {
    throw Error("interpretation size does not match its universe");
  }
}

Interpretation Interpretation::from_literals(UniversePtr universe,
                                             std::span<const std::string> pos,
                                             std::span<const std::string> neg) {
  Interpretation v(universe);
  for (const std::string& a : pos) v.set(a, Truth::True);
  for (const std::string& a : neg) {
    if (v.value(a) == Truth::True) {
      throw Error("atom '" + a + "' listed both positively and negatively");
    }
    v.set(a, Truth::False);
  }
  return v;
}

Truth Interpretation::value(std::string_view atom) const {
  int i = universe_->index(atom);
  if (i < 0) throw Error("unknown atom '" + std::string(atom) + "'");
  return values_[i];
}

void Interpretation::set(std::string_view atom, Truth v) {
  int i = universe_->index(atom);
  if (i < 0) throw Error("unknown atom '" + std::string(atom) + "'");
  values_[i] = v;
}

bool Interpretation::is_two_valued() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](Truth t) { return t == Truth::Unknown; });
}

std::vector<int> Interpretation::unknown_atoms() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == Truth::Unknown) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Interpretation::true_atoms() const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == Truth::True) out.push_back(universe_->name(i));
  }
  return out;
}

std::vector<std::string> Interpretation::false_atoms() const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == Truth::False) out.push_back(universe_->name(i));
  }
  return out;
}

std::string Interpretation::to_set_string(bool unicode) const {
  const char* negation = unicode ? "¬" : "~";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == Truth::True) {
      if (!first) out << ", ";
      out << universe_->name(i);
      first = false;
    }
  }
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == Truth::False) {
      if (!first) out << ", ";
      out << negation << universe_->name(i);
      first = false;
    }
  }
  out << '}';
  return out.str();
}

std::uint64_t Interpretation::ternary_code() const {
  if (size() > 40) throw CapacityError("ternary code needs at most 40 atoms");
  // digit: u=0, f=1, t=2; first atom most significant
  std::uint64_t code = 0;
  for (int i = 0; i < size(); ++i) {
    std::uint64_t digit = 0;
    switch (values_[i]) {
      case Truth::Unknown:
        digit = 0;
        break;
      case Truth::False:
        digit = 1;
        break;
      case Truth::True:
        digit = 2;
        break;
    }
    code = code * 3 + digit;
  }
  return code;
}

bool Interpretation::operator==(const Interpretation& other) const {
  return same_universe(universe_, other.universe_) && values_ == other.values_;
}

namespace {

void require_same_universe(const Interpretation& a, const Interpretation& b,
                           const char* op) {
  if (!same_universe(a.universe(), b.universe())) {
    throw Error(std::string("universe mismatch in ") + op);
  }
}

}  // namespace

bool leq_info(const Interpretation& a, const Interpretation& b) {
  require_same_universe(a, b, "leq_info");
  for (int i = 0; i < a.size(); ++i) {
    if (!leq_info(a.value(i), b.value(i))) return false;
  }
  return true;
}

Interpretation meet(const Interpretation& a, const Interpretation& b) {
  require_same_universe(a, b, "meet");
  std::vector<Truth> values(a.size());
  for (int i = 0; i < a.size(); ++i) {
    values[i] = meet(a.value(i), b.value(i));
  }
  return Interpretation(a.universe(), std::move(values));
}

std::vector<Interpretation> two_valued_extensions(const Interpretation& v,
                                                  std::span<const int> relevant) {
  std::vector<int> unknown;
  for (int i : relevant) {
    if (i < 0 || i >= v.size()) {
      throw Error("two_valued_extensions: atom index out of range");
    }
    if (v.value(i) == Truth::Unknown) unknown.push_back(i);
  }
  std::sort(unknown.begin(), unknown.end());
  unknown.erase(std::unique(unknown.begin(), unknown.end()), unknown.end());

  if (unknown.size() > 30) {
    throw CapacityError("two_valued_extensions: too many unknown atoms (" +
                        std::to_string(unknown.size()) + ")");
  }
  const std::size_t k = unknown.size();
  std::vector<Interpretation> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << k); ++counter) {
    Interpretation w = v;
    // first unknown atom is the most significant bit; 0 = f, 1 = t
    for (std::size_t j = 0; j < k; ++j) {
      bool bit = (counter >> (k - 1 - j)) & 1;
      w.set(unknown[j], bit ? Truth::True : Truth::False);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Interpretation> two_valued_extensions(
    const Interpretation& v, std::span<const std::string> relevant) {
  std::vector<int> idx;
  idx.reserve(relevant.size());
  for (const std::string& name : relevant) {
    int i = v.universe()->index(name);
    if (i < 0) throw Error("unknown atom '" + name + "'");
    idx.push_back(i);
  }
  return two_valued_extensions(v, idx);
}

InterpretationStream::InterpretationStream(UniversePtr universe, int bound)
    : universe_(std::move(universe)),
      digits_(static_cast<std::size_t>(universe_->size()), Truth::Unknown) {
  int n = universe_->size();
  if (n > bound) {
    std::string count;
    if (n <= 38) {
      std::uint64_t c = 1;
      for (int i = 0; i < n; ++i) c *= 3;
      count = std::to_string(c);
    } else {
      count = "3^" + std::to_string(n);
    }
    throw CapacityError("enumeration over " + std::to_string(n) +
                        " atoms exceeds the bound of " + std::to_string(bound) +
                        " (" + count + " interpretations)");
  }
}

std::optional<Interpretation> InterpretationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Interpretation(universe_, digits_);
  }
  // ternary odometer, last atom least significant; digit order u < f < t
  for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
    if (digits_[i] == Truth::Unknown) {
      digits_[i] = Truth::False;
      return Interpretation(universe_, digits_);
    }
    if (digits_[i] == Truth::False) {
      digits_[i] = Truth::True;
      return Interpretation(universe_, digits_);
    }
    digits_[i] = Truth::Unknown;  // carry
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Interpretation> enumerate_interpretations(UniversePtr universe,
                                                      int bound) {
  InterpretationStream stream(std::move(universe), bound);
  std::vector<Interpretation> out;
  while (auto v = stream.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace adfkit
