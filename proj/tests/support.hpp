#pragma once

// Shared helpers for randomized tests. All generators take an explicit
// engine so every test pins its own seed and stays reproducible.

#include <random>
#include <string>
#include <vector>

#include "cml/formula.hpp"
#include "cml/model.hpp"
#include "cml/pairs.hpp"

namespace cml::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

// Random formula over the given atoms with roughly `size` connectives.
// allow_box=false keeps it propositional.
inline Formula random_formula(Rng& rng, const std::vector<std::string>& atom_names, int size,
                              bool allow_box = true) {
  if (size <= 0) return Formula::atom(atom_names[pick(rng, 0, int(atom_names.size()) - 1)]);
  int choice = pick(rng, 0, allow_box ? 5 : 4);
  switch (choice) {
    case 0: return Formula::negation(random_formula(rng, atom_names, size - 1, allow_box));
    case 5: return Formula::box(random_formula(rng, atom_names, size - 1, allow_box));
    default: {
      int left = pick(rng, 0, size - 1);
      Formula l = random_formula(rng, atom_names, left, allow_box);
      Formula r = random_formula(rng, atom_names, size - 1 - left, allow_box);
      Op op = static_cast<Op>(static_cast<int>(Op::And) + choice - 1);
      return Formula::make(op, std::move(l), std::move(r));
    }
  }
}

inline std::vector<std::string> atom_universe(int n) {
  static const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  return {pool.begin(), pool.begin() + n};
}

// Each atom independently unset, true, or false.
inline PartialValuation random_valuation(Rng& rng, const std::vector<std::string>& atoms) {
  PartialValuation v;
  for (const auto& a : atoms) {
    switch (pick(rng, 0, 2)) {
      case 1: v.assign(a, true); break;
      case 2: v.assign(a, false); break;
      default: break;
    }
  }
  return v;
}

// Extends `base` by defining some of the still-undefined atoms.
inline PartialValuation random_extension(Rng& rng, const PartialValuation& base,
                                         const std::vector<std::string>& atoms,
                                         int max_added = 100) {
  PartialValuation v = base;
  int added = 0;
  for (const auto& a : atoms) {
    if (v.defines(a) || added >= max_added || !coin(rng)) continue;
    v.assign(a, coin(rng));
    ++added;
  }
  return v;
}

inline KripkeModel with_mode(const KripkeModel& m, EvalMode mode) {
  return KripkeModel(m.atoms(), m.worlds(), m.edges(), m.shared(), m.reality_name(), mode);
}

struct ModelOptions {
  int atom_count = 3;
  int min_worlds = 1;
  int max_worlds = 5;
  double edge_density = 0.4;
  bool definedness_preserving = false;
};

// Random pointed model with empty shared valuation. With
// definedness_preserving set, edges only join worlds whose valuations are
// ordered by inclusion.
inline KripkeModel random_model(Rng& rng, const ModelOptions& opt = {}) {
  auto atoms = atom_universe(opt.atom_count);
  int n = pick(rng, opt.min_worlds, opt.max_worlds);
  std::vector<World> worlds;
  for (int i = 0; i < n; ++i) {
    PartialValuation v = opt.definedness_preserving && i > 0 && coin(rng)
                             ? random_extension(rng, worlds[pick(rng, 0, i - 1)].valuation, atoms)
                             : random_valuation(rng, atoms);
    worlds.push_back({"w" + std::to_string(i), v});
  }
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(opt.edge_density);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!keep(rng)) continue;
      if (opt.definedness_preserving && !worlds[i].valuation.subset_of(worlds[j].valuation))
        continue;
      edges.push_back({worlds[i].name, worlds[j].name});
    }
  }
  std::string reality = worlds[pick(rng, 0, n - 1)].name;
  return KripkeModel(atoms, std::move(worlds), std::move(edges), PartialValuation{},
                     std::move(reality));
}

// Reality a !b !c d over a..f together with every extension of it over the
// two open atoms, related by valuation inclusion (hence reflexive and
// definedness preserving). Shared ground a !b. Reality is named R; the other
// worlds w1..w8 in enumeration order.
inline KripkeModel conjectural_family_model(EvalMode mode = EvalMode::Printed) {
  std::vector<std::string> atoms{"a", "b", "c", "d", "e", "f"};
  auto reality = PartialValuation::from_literals("a !b !c d");
  std::vector<World> worlds;
  for (const auto& e : enumerate_worlds(atoms, reality, reality)) {
    std::string name = e.valuation == reality ? "R" : "w" + std::to_string(worlds.size());
    worlds.push_back({std::move(name), e.valuation});
  }
  std::vector<Edge> edges;
  for (const auto& from : worlds)
    for (const auto& to : worlds)
      if (from.valuation.subset_of(to.valuation)) edges.push_back({from.name, to.name});
  return KripkeModel(atoms, std::move(worlds), std::move(edges),
                     PartialValuation::from_literals("a !b"), "R", mode);
}

// All admissible worlds over the universe with inclusion edges; reality is
// one of them, drawn at random.
inline KripkeModel saturated_model(Rng& rng, const std::vector<std::string>& atoms,
                                   const PartialValuation& shared) {
  std::vector<World> worlds;
  for (const auto& e : enumerate_worlds(atoms, shared, shared))
    worlds.push_back({"s" + std::to_string(worlds.size()), e.valuation});
  std::vector<Edge> edges;
  for (const auto& from : worlds)
    for (const auto& to : worlds)
      if (from.valuation.subset_of(to.valuation)) edges.push_back({from.name, to.name});
  std::string reality = worlds[std::size_t(pick(rng, 0, int(worlds.size()) - 1))].name;
  return KripkeModel(atoms, std::move(worlds), std::move(edges), shared, std::move(reality));
}

}  // namespace cml::testing
