#include "cml/pairs.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cml/error.hpp"
#include "cml/formula.hpp"

namespace cml {

namespace {

std::set<std::string> checked_universe(const std::vector<std::string>& atoms) {
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (!valid_atom_name(a)) throw PairError("bad atom name: " + a);
    if (!seen.insert(a).second) throw PairError("duplicate atom: " + a);
  }
  return seen;
}

void check_within(const std::set<std::string>& universe, const PartialValuation& v,
                  const char* label) {
  for (const auto& [atom, value] : v) {
    (void)value;
    if (!universe.count(atom))
      throw PairError(std::string(label) + " valuation mentions unknown atom: " + atom);
  }
}

PartialValuation filled_false(const PartialValuation& base,
                              const std::vector<std::string>& atoms) {
  PartialValuation v = base;
  for (const auto& a : atoms)
    if (!v.defines(a)) v.assign(a, false);
  return v;
}

}  // namespace

DefinedModalPair::DefinedModalPair(PartialValuation reality_in, PartialValuation world_in,
                                   PartialValuation shared_in, std::vector<std::string> atoms_in,
                                   EvalMode mode_in)
    : reality(std::move(reality_in)),
      world(std::move(world_in)),
      shared(std::move(shared_in)),
      atoms(std::move(atoms_in)),
      mode(mode_in) {
  auto universe = checked_universe(atoms);
  check_within(universe, reality, "reality");
  check_within(universe, world, "world");
  check_within(universe, shared, "shared");
  if (!shared.subset_of(reality)) throw PairError("shared ground not settled at reality");
  if (!shared.subset_of(world)) throw PairError("shared ground not settled at the world");
}

const char* world_class_name(WorldClass c) {
  switch (c) {
    case WorldClass::Reality: return "Reality";
    case WorldClass::Epistemic: return "Epistemic";
    case WorldClass::Conjectural: return "Conjectural";
    case WorldClass::Delusional: return "Delusional";
    case WorldClass::Opinion: return "Opinion";
    case WorldClass::Mixed: return "Mixed";
  }
  throw Error("unreachable world class");
}

WorldClass classify_valuation(const PartialValuation& candidate,
                              const PartialValuation& shared,
                              const PartialValuation& reality) {
  if (candidate == reality) return WorldClass::Reality;
  if (candidate.subset_of(reality)) return WorldClass::Epistemic;
  if (reality.subset_of(candidate)) return WorldClass::Conjectural;
  if (!candidate.conflicts_with(reality).empty()) return WorldClass::Delusional;

  // No contradiction from here on, so common atoms agree; Opinion asks the
  // common ground to be nothing beyond what is shared by fiat.
  std::vector<std::string> common;
  for (const auto& [atom, value] : candidate) {
    (void)value;
    if (reality.defines(atom)) common.push_back(atom);
  }
  if (common == shared.domain()) return WorldClass::Opinion;
  return WorldClass::Mixed;
}

WorldClass classify_world(const DefinedModalPair& p) {
  return classify_valuation(p.world, p.shared, p.reality);
}

SystemProfile classify_pair(const DefinedModalPair& p) {
  SystemProfile prof;
  prof.k = true;
  prof.w_total = p.world.total_over(p.atoms);
  prof.w_subset_r = p.world.subset_of(p.reality);
  prof.r_subset_w = p.reality.subset_of(p.world);
  prof.kd = prof.w_total;
  prof.kt = prof.w_subset_r;
  prof.kc = prof.r_subset_w;
  prof.kdc = prof.kc && prof.kd;
  return prof;
}

KripkeModel pair_to_model(const DefinedModalPair& p) {
  return KripkeModel(p.atoms, {{"R", p.reality}, {"w", p.world}},
                     {{"R", "w"}, {"w", "w"}}, p.shared, "R", p.mode);
}

std::vector<EnumeratedWorld> enumerate_worlds(const std::vector<std::string>& atoms,
                                              const PartialValuation& shared,
                                              const PartialValuation& reality) {
  auto universe = checked_universe(atoms);
  check_within(universe, shared, "shared");
  check_within(universe, reality, "reality");
  if (!shared.subset_of(reality)) throw PairError("shared ground not settled at reality");

  std::vector<std::string> free;
  for (const auto& a : atoms)
    if (!shared.defines(a)) free.push_back(a);
  if (free.size() > 15) throw PairError("universe too large to enumerate");

  std::vector<EnumeratedWorld> out;
  std::vector<int> state(free.size(), 0);  // 0 unset, 1 false, 2 true
  for (;;) {
    PartialValuation v = shared;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (state[i] != 0) v.assign(free[i], state[i] == 2);

    EnumeratedWorld w;
    w.world_class = classify_valuation(v, shared, reality);
    w.epistemic_family = v.subset_of(reality);
    w.conjectural_family = reality.subset_of(v);
    w.valuation = std::move(v);
    out.push_back(std::move(w));

    int i = int(free.size()) - 1;
    while (i >= 0 && state[i] == 2) state[i--] = 0;
    if (i < 0) break;
    ++state[i];
  }
  return out;
}

DefinedModalPair realize_system(SystemId system, const std::vector<std::string>& atoms,
                                const PartialValuation& shared,
                                const PartialValuation& reality, EvalMode mode) {
  PartialValuation w;
  switch (system) {
    case SystemId::K:
    case SystemId::KT: w = shared; break;
    case SystemId::KD: w = filled_false(shared, atoms); break;
    case SystemId::KC: w = reality; break;
    case SystemId::KDC: w = filled_false(reality, atoms); break;
    default:
      throw PairError("no canonical witness pair for " + std::string(system_name(system)));
  }
  return DefinedModalPair(reality, std::move(w), shared, atoms, mode);
}

}  // namespace cml
