#include "cml/valuation.hpp"

#include <sstream>

#include "cml/error.hpp"
#include "cml/formula.hpp"

namespace cml {

PartialValuation PartialValuation::from_literals(std::string_view text) {
  PartialValuation v;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool value = true;
    std::string name = tok;
    if (!name.empty() && name[0] == '!') {
      value = false;
      name.erase(0, 1);
    }
    if (!valid_atom_name(name))
      throw ValuationError("invalid literal '" + tok + "'");
    v.assign(name, value);
  }
  return v;
}

void PartialValuation::assign(const std::string& atom, bool value) {
  auto [it, inserted] = vals_.emplace(atom, value);
  if (!inserted && it->second != value)
    throw ValuationError("conflicting assignment for atom '" + atom + "'");
}

PartialValuation PartialValuation::extended_with(const std::string& atom, bool value) const {
  PartialValuation out = *this;
  out.assign(atom, value);
  return out;
}

std::optional<bool> PartialValuation::value(const std::string& atom) const {
  auto it = vals_.find(atom);
  if (it == vals_.end()) return std::nullopt;
  return it->second;
}

Truth PartialValuation::truth(const std::string& atom) const {
  auto it = vals_.find(atom);
  if (it == vals_.end()) return Truth::Undef;
  return truth_of(it->second);
}

bool PartialValuation::subset_of(const PartialValuation& wider) const {
  for (const auto& [atom, value] : vals_) {
    auto w = wider.value(atom);
    if (!w || *w != value) return false;
  }
  return true;
}

std::vector<std::string> PartialValuation::conflicts_with(const PartialValuation& other) const {
  std::vector<std::string> out;
  for (const auto& [atom, value] : vals_) {
    auto w = other.value(atom);
    if (w && *w != value) out.push_back(atom);
  }
  return out;
}

bool PartialValuation::total_over(std::span<const std::string> atom_universe) const {
  for (const auto& a : atom_universe)
    if (!defines(a)) return false;
  return true;
}

std::vector<std::string> PartialValuation::domain() const {
  std::vector<std::string> out;
  out.reserve(vals_.size());
  for (const auto& [atom, _] : vals_) out.push_back(atom);
  return out;
}

std::string PartialValuation::literals(std::span<const std::string> atom_universe) const {
  std::string out;
  for (const auto& a : atom_universe) {
    auto v = value(a);
    if (!v) continue;
    if (!out.empty()) out += ' ';
    if (!*v) out += '!';
    out += a;
  }
  return out;
}

}  // namespace cml
