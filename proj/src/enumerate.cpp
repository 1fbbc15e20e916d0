#include "cml/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cml/error.hpp"

namespace cml {

BoundedEnumeration::BoundedEnumeration(FormulaBound bound) : bound_(std::move(bound)) {
  if (bound_.max_connectives < 0 || bound_.max_modal_depth < 0)
    throw Error("enumeration bounds must be non-negative");
  if (bound_.atoms.empty()) throw Error("enumeration needs at least one atom");
  std::set<std::string> seen;
  for (const auto& a : bound_.atoms) {
    if (!valid_atom_name(a)) throw Error("invalid atom name '" + a + "'");
    if (!seen.insert(a).second) throw Error("duplicate atom '" + a + "'");
  }

  group_first_.push_back(0);
  for (std::uint32_t i = 0; i < bound_.atoms.size(); ++i)
    entries_.push_back({Op::Atom, i, 0, 0});

  const auto binary_ops = {Op::And, Op::Or, Op::Implies, Op::Iff};
  for (int n = 1; n <= bound_.max_connectives; ++n) {
    group_first_.push_back(entries_.size());
    std::size_t lo = group_first_[n - 1], hi = group_first_[n];
    for (std::size_t c = lo; c < hi; ++c)
      entries_.push_back({Op::Not, std::uint32_t(c), 0, entries_[c].depth});
    for (std::size_t c = lo; c < hi; ++c)
      if (entries_[c].depth < bound_.max_modal_depth)
        entries_.push_back({Op::Box, std::uint32_t(c), 0, std::uint16_t(entries_[c].depth + 1)});
    for (Op op : binary_ops)
      for (int ls = 0; ls < n; ++ls) {
        int rs = n - 1 - ls;
        for (std::size_t l = group_first_[ls]; l < group_first_[ls + 1]; ++l)
          for (std::size_t r = group_first_[rs]; r < group_first_[rs + 1]; ++r)
            entries_.push_back({op, std::uint32_t(l), std::uint32_t(r),
                                std::max(entries_[l].depth, entries_[r].depth)});
      }
  }
  group_first_.push_back(entries_.size());
}

const std::string& BoundedEnumeration::atom_name(std::size_t i) const {
  return bound_.atoms[entries_[i].a];
}

int BoundedEnumeration::connectives(std::size_t i) const {
  auto it = std::upper_bound(group_first_.begin(), group_first_.end(), i);
  return int(it - group_first_.begin()) - 1;
}

std::size_t BoundedEnumeration::group_begin(int n) const {
  if (n < 0) return 0;
  if (std::size_t(n) >= group_first_.size()) return entries_.size();
  return group_first_[n];
}

Formula BoundedEnumeration::formula(std::size_t i) const {
  const Entry& e = entries_[i];
  switch (e.op) {
    case Op::Atom: return Formula::atom(bound_.atoms[e.a]);
    case Op::Not: return Formula::negation(formula(e.a));
    case Op::Box: return Formula::box(formula(e.a));
    default: return Formula::make(e.op, formula(e.a), formula(e.b));
  }
}

std::vector<Formula> BoundedEnumeration::materialize() const {
  std::vector<Formula> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) {
    switch (e.op) {
      case Op::Atom: out.push_back(Formula::atom(bound_.atoms[e.a])); break;
      case Op::Not: out.push_back(Formula::negation(out[e.a])); break;
      case Op::Box: out.push_back(Formula::box(out[e.a])); break;
      default: out.push_back(Formula::make(e.op, out[e.a], out[e.b]));
    }
  }
  return out;
}

std::vector<Formula> enumerate_formulas(const FormulaBound& bound) {
  return BoundedEnumeration(bound).materialize();
}

}  // namespace cml
