#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cml/truth.hpp"

namespace cml {

// Consistent partial map from atom names to defined truth values. Atoms
// outside the domain are undefined, never contradictory.
class PartialValuation {
 public:
  PartialValuation() = default;

  // Parses whitespace-separated literals: "a !b" assigns a true, b false.
  // Conflicting literals for one atom raise ValuationError.
  static PartialValuation from_literals(std::string_view text);

  // Throws ValuationError when the atom is already defined with the other
  // value; assigning the same value twice is a no-op.
  void assign(const std::string& atom, bool value);

  PartialValuation extended_with(const std::string& atom, bool value) const;

  bool defines(const std::string& atom) const { return vals_.count(atom) != 0; }
  std::optional<bool> value(const std::string& atom) const;
  Truth truth(const std::string& atom) const;

  // Every assignment of this valuation appears in `wider` with equal value.
  bool subset_of(const PartialValuation& wider) const;

  // Atoms defined by both sides but with opposite values.
  std::vector<std::string> conflicts_with(const PartialValuation& other) const;

  bool total_over(std::span<const std::string> atom_universe) const;

  std::size_t size() const { return vals_.size(); }
  bool empty() const { return vals_.empty(); }

  // Domain in atom-name order.
  std::vector<std::string> domain() const;

  // Canonical literal rendering in the order of `atom_universe`; atoms of
  // the domain missing from the universe are an error elsewhere, so they
  // are simply skipped here.
  std::string literals(std::span<const std::string> atom_universe) const;

  bool operator==(const PartialValuation&) const = default;

  auto begin() const { return vals_.begin(); }
  auto end() const { return vals_.end(); }

 private:
  std::map<std::string, bool> vals_;
};

}  // namespace cml
