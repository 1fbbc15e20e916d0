#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cml/formula.hpp"

namespace cml {

struct FormulaBound {
  int max_connectives = 4;
  int max_modal_depth = 2;
  std::vector<std::string> atoms;
};

// Every formula over the given atoms with at most max_connectives connectives
// and modal depth at most max_modal_depth, in a fixed canonical order: grouped
// by connective count, within a group by connective (~, [], &, |, ->, <->),
// binary entries by left size, then left index, then right index.
//
// Entries are stored as a flat table of child indices rather than trees, so
// large families stay cheap to hold and to evaluate. Children always appear
// before their parents. The table for a smaller max_connectives is a prefix
// of the table for a larger one.
class BoundedEnumeration {
 public:
  explicit BoundedEnumeration(FormulaBound bound);

  std::size_t size() const { return entries_.size(); }
  Op op(std::size_t i) const { return entries_[i].op; }
  std::size_t left(std::size_t i) const { return entries_[i].a; }
  std::size_t right(std::size_t i) const { return entries_[i].b; }
  const std::string& atom_name(std::size_t i) const;
  int connectives(std::size_t i) const;
  int modal_depth(std::size_t i) const { return entries_[i].depth; }

  // First index with exactly n connectives (== size() when none).
  std::size_t group_begin(int n) const;
  std::size_t group_end(int n) const { return group_begin(n + 1); }

  Formula formula(std::size_t i) const;
  std::vector<Formula> materialize() const;

  const FormulaBound& bound() const { return bound_; }

 private:
  struct Entry {
    Op op;
    std::uint32_t a = 0;  // atom index, or left/only child
    std::uint32_t b = 0;  // right child
    std::uint16_t depth = 0;
  };

  FormulaBound bound_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> group_first_;  // group_first_[n] = begin of size-n group
};

std::vector<Formula> enumerate_formulas(const FormulaBound& bound);

}  // namespace cml
