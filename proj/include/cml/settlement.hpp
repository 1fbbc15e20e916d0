#pragma once

#include <string>
#include <vector>

#include "cml/formula.hpp"
#include "cml/model.hpp"
#include "cml/pairs.hpp"
#include "cml/schema.hpp"

namespace cml {

// One public announcement: the formula now counts as settled to a definite
// value. Undefinedness cannot be announced, hence a plain bool.
struct Settlement {
  Formula formula;
  bool value;
};

struct Reclassification {
  std::string world;
  WorldClass old_class;
  WorldClass new_class;
};

struct SettlementOutcome {
  KripkeModel model;
  // Pre-existing worlds whose class changed, in model order. Worlds created
  // by the settlement itself are not listed; they are visible in the model.
  std::vector<Reclassification> reclassifications;
  WorldClass previous_reality_class;
};

// Moves reality to the minimal extension of its valuation that settles the
// formula. The extension reuses the first world already carrying exactly
// that valuation; otherwise a fresh world (old name plus an apostrophe) is
// added, reached from the old reality, looped, and wired into every world
// it is included in. A compound formula is realized by the unique minimal
// assignment to its undefined atoms that gives it the requested value;
// several minimal assignments are an error, not a choice.
SettlementOutcome apply_settlement(const KripkeModel& m, const Settlement& s);

// Left fold of apply_settlement. A formula scheduled for both values fails
// upfront, before any step runs; step numbers in errors are 1-based.
SettlementOutcome apply_sequence(const KripkeModel& m, const std::vector<Settlement>& seq);

// Neither formula occurs inside the other.
bool independent(const Formula& f1, const Formula& f2);

enum class CommutationKind { Commute, Differ, OrderDependent };

struct CommutationResult {
  CommutationKind kind = CommutationKind::Commute;
  std::string witness;  // first differing component for Differ
  int step = 0;         // failing step for OrderDependent
};

// Runs [s1, s2] and [s2, s1] and compares the results structurally: reality
// valuation, world valuation multiset, and the relation as a multiset of
// valuation pairs, so settlement-created names cannot matter. Two orders
// failing at the same step for the same reason count as commuting.
CommutationResult check_commutation(const KripkeModel& m, const Settlement& s1,
                                    const Settlement& s2);

struct PreservationReport {
  SettlementOutcome outcome;
  SystemReport system_report;  // for the settled model
  bool still_holds = false;
  // Worlds conjectural before whose conjecture did not survive: anything
  // reclassified away from Conjectural other than the new reality.
  std::vector<std::string> pruned_conjectural;
};

PreservationReport check_preservation(const KripkeModel& m, const std::vector<Settlement>& seq,
                                      SystemId system, FormulaBound bound = {});

}  // namespace cml
