#pragma once

#include <optional>
#include <set>
#include <string>

#include "cml/enumerate.hpp"
#include "cml/model.hpp"

namespace cml {

class ModelEvaluator;

struct CPropagationWitness {
  std::string world;
  Formula formula;
  std::string successor;
};

struct CPropagationReport {
  bool holds = true;
  std::optional<CPropagationWitness> witness;
};

// A bound with no atoms borrows the model's atom universe.
FormulaBound resolve_bound(FormulaBound b, const KripkeModel& m);

// Does every bounded formula that is true at a world stay true at every
// successor? The witness is the first failure in world, formula, successor
// order. The bound-free overload checks up to 5 connectives at modal depth 2,
// which is only desk-scale for small atom universes.
CPropagationReport check_c_propagation(const ModelEvaluator& ev);
CPropagationReport check_c_propagation(const KripkeModel& m, const FormulaBound& b);
CPropagationReport check_c_propagation(const KripkeModel& m);

// The bounded formulas with a defined value at the world.
std::set<Formula> defined_set(const KripkeModel& m, std::string_view world_name,
                              const FormulaBound& b);

}  // namespace cml
