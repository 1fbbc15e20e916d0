#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cml/enumerate.hpp"
#include "cml/model.hpp"
#include "cml/propagation.hpp"

namespace cml {

enum class AxiomSchema : unsigned char { K, D, T, Four, Five, C };

std::string_view schema_name(AxiomSchema s);  // K D T 4 5 C
int schema_arity(AxiomSchema s);              // 2 for K, 1 otherwise

Formula instantiate(AxiomSchema s, const Formula& phi);
Formula instantiate(AxiomSchema s, const Formula& phi, const Formula& psi);

enum class Verdict : unsigned char { Valid, Undetermined, Violated };
std::string_view verdict_name(Verdict v);

struct SchemaWitness {
  std::string world;
  Formula phi;
  std::optional<Formula> psi;  // second slot of a K instance
  Truth value;
};

// Violated wins over Undetermined; the witness is the least failing cell in
// world-then-instance order (the first undefined cell when Undetermined).
struct SchemaStatus {
  Verdict verdict = Verdict::Valid;
  std::optional<SchemaWitness> witness;
};

// Truth value of every table entry at every world, filled bottom-up in one
// pass. Holds references only, so one table can serve many models.
class ModelEvaluator {
 public:
  ModelEvaluator(const KripkeModel& m, const BoundedEnumeration& table);

  const KripkeModel& model() const { return *model_; }
  const BoundedEnumeration& table() const { return *table_; }

  Truth value(std::size_t entry, std::size_t world) const {
    return vals_[entry * world_count_ + world];
  }
  // Value of []e at the world: the conjunction fold over its successors.
  Truth box_value(std::size_t entry, std::size_t world) const;

 private:
  const KripkeModel* model_;
  const BoundedEnumeration* table_;
  std::size_t world_count_;
  std::vector<Truth> vals_;
};

// Instantiates the schema over every bounded formula (every joint-size pair
// for K, so that instances stay within the connective budget) and evaluates
// at every world.
SchemaStatus check_schema(const ModelEvaluator& ev, AxiomSchema s);
SchemaStatus check_schema(const KripkeModel& m, AxiomSchema s, const FormulaBound& b);

enum class SystemId : unsigned char { K, KD, KT, KC, KDC, KC45, KDC45 };

std::string_view system_name(SystemId id);
std::optional<SystemId> system_from_name(std::string_view name);
std::vector<AxiomSchema> system_schemas(SystemId id);

struct CheckedSchema {
  AxiomSchema schema;
  SchemaStatus status;
};

struct SystemCondition {
  std::string name;  // seriality, transitivity, euclideanness, c-propagation
  bool holds = false;
  std::vector<std::string> successorless;         // seriality only
  std::optional<CPropagationWitness> witness;     // c-propagation only
};

struct SystemReport {
  SystemId system;
  std::vector<CheckedSchema> schemas;
  std::vector<SystemCondition> conditions;
  bool holds = true;  // no schema Violated and every condition met
};

SystemReport check_system(const KripkeModel& m, SystemId id, FormulaBound b = {});

// phi <-> []phi over the bounded formulas. Successorless worlds make boxes
// true for free, so they are reported alongside the verdict.
struct CollapseReport {
  SchemaStatus status;
  std::vector<std::string> vacuous_worlds;
};

CollapseReport collapse_check(const ModelEvaluator& ev);
CollapseReport collapse_check(const KripkeModel& m, FormulaBound b = {});

std::string render(const CheckedSchema& cs);
std::string render(const SystemCondition& c);
std::string render(const SystemReport& rep);  // one line per schema and condition, then the verdict
std::string render(const CollapseReport& rep);

}  // namespace cml
