#pragma once

#include <string>
#include <vector>

#include "cml/model.hpp"
#include "cml/schema.hpp"
#include "cml/truth.hpp"
#include "cml/valuation.hpp"

namespace cml {

// Two-valuation snapshot: reality next to one alternative world, with the
// settled common ground both must extend. Construction enforces
// admissibility; a pair that survives it can always be turned into a model.
struct DefinedModalPair {
  DefinedModalPair(PartialValuation reality, PartialValuation world,
                   PartialValuation shared, std::vector<std::string> atoms,
                   EvalMode mode = EvalMode::Printed);

  PartialValuation reality;
  PartialValuation world;
  PartialValuation shared;
  std::vector<std::string> atoms;
  EvalMode mode;
};

// Which systems the pair supports, decided structurally from the two
// valuations. k is always on; the raw facts carry the reasons.
struct SystemProfile {
  bool k = false;
  bool kd = false;
  bool kt = false;
  bool kc = false;
  bool kdc = false;

  bool w_total = false;
  bool w_subset_r = false;
  bool r_subset_w = false;
};

enum class WorldClass {
  Reality,
  Epistemic,     // strictly below reality: forgets, never invents
  Conjectural,   // strictly above reality: invents, never contradicts
  Delusional,    // contradicts reality on some commonly defined atom
  Opinion,       // overlaps reality exactly on the shared ground
  Mixed,         // extends and forgets at once without contradiction
};

const char* world_class_name(WorldClass c);

// Classification of one candidate valuation against reality, first match in
// declaration order wins. The caller vouches for consistency; contradiction
// with `reality` is what Delusional detects, not an input error.
WorldClass classify_valuation(const PartialValuation& candidate,
                              const PartialValuation& shared,
                              const PartialValuation& reality);

WorldClass classify_world(const DefinedModalPair& p);

SystemProfile classify_pair(const DefinedModalPair& p);

// Model view of the pair: worlds R and w, R sees w, w sees itself. Boxed
// formulas at R thus report on w, and w stays serial rather than boxing
// everything vacuously.
KripkeModel pair_to_model(const DefinedModalPair& p);

struct EnumeratedWorld {
  PartialValuation valuation;
  WorldClass world_class;
  // Inclusive cousins of the two inclusion classes: reality belongs to both
  // families but to neither strict class.
  bool epistemic_family = false;
  bool conjectural_family = false;
};

// All admissible worlds over the universe: every way to extend `shared` with
// a three-way choice (unset, false, true) per remaining atom. Atoms cycle in
// universe order, later atoms fastest, unset before false before true.
std::vector<EnumeratedWorld> enumerate_worlds(const std::vector<std::string>& atoms,
                                              const PartialValuation& shared,
                                              const PartialValuation& reality);

// Canonical witness pair for a system: K and KT sit at the shared ground, KC
// at reality, KD and KDC take the least total completion (unset atoms go
// false). Only K, KD, KT, KC and KDC can be realized this way.
DefinedModalPair realize_system(SystemId system, const std::vector<std::string>& atoms,
                                const PartialValuation& shared,
                                const PartialValuation& reality,
                                EvalMode mode = EvalMode::Printed);

}  // namespace cml
