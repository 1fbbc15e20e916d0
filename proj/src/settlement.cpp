#include "cml/settlement.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cml/error.hpp"

namespace cml {

namespace {

Truth want_truth(bool v) { return v ? Truth::True : Truth::False; }

// Reality moves to the world carrying the extended valuation, created on
// demand. A created world loops, is reachable from the old reality, and
// reaches every world whose valuation contains the new one, so the new
// reality keeps serial and definedness-preserving frames that way.
KripkeModel moved_reality(const KripkeModel& m, const PartialValuation& target) {
  for (const auto& w : m.worlds())
    if (w.valuation == target) return m.with_reality(w.name);

  std::string name = m.reality_name() + "'";
  while (m.has_world(name)) name += "'";
  std::vector<Edge> extra{{m.reality_name(), name}, {name, name}};
  for (const auto& w : m.worlds())
    if (target.subset_of(w.valuation)) extra.push_back({name, w.name});
  return m.with_world_and_edges({name, target}, std::move(extra), name);
}

// Every partial assignment over `atoms`, the empty one first; within one
// atom unset precedes false precedes true, later atoms cycle fastest.
std::vector<PartialValuation> assignments_over(const std::vector<std::string>& atoms) {
  std::vector<PartialValuation> out;
  std::vector<int> state(atoms.size(), 0);
  for (;;) {
    PartialValuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (state[i] != 0) v.assign(atoms[i], state[i] == 2);
    out.push_back(std::move(v));
    int i = int(atoms.size()) - 1;
    while (i >= 0 && state[i] == 2) state[i--] = 0;
    if (i < 0) break;
    ++state[i];
  }
  return out;
}

PartialValuation merged(const PartialValuation& base, const PartialValuation& add) {
  PartialValuation v = base;
  for (const auto& [atom, value] : add) v.assign(atom, value);
  return v;
}

}  // namespace

SettlementOutcome apply_settlement(const KripkeModel& m, const Settlement& s) {
  const PartialValuation& reality_val = m.reality().valuation;
  if (m.eval(m.reality_name(), s.formula) != Truth::Undef)
    throw SettlementError("already settled at reality: " + s.formula.str(),
                          SettlementFault::AlreadyDefined);

  PartialValuation chosen;
  if (s.formula.op() == Op::Atom) {
    chosen.assign(s.formula.atom_name(), s.value);
  } else {
    std::vector<std::string> open;
    for (const auto& a : atoms(s.formula))
      if (!reality_val.defines(a)) open.push_back(a);

    // Try every assignment against the model it would produce; boxes make
    // the answer depend on where the new reality lands, so a dry valuation
    // check is not enough.
    std::vector<PartialValuation> realizers;
    for (auto& sigma : assignments_over(open)) {
      if (sigma.empty()) continue;
      auto probe = moved_reality(m, merged(reality_val, sigma));
      if (probe.eval(probe.reality_name(), s.formula) == want_truth(s.value))
        realizers.push_back(std::move(sigma));
    }
    if (realizers.empty())
      throw SettlementError("no way to settle " + s.formula.str() + " to that value",
                            SettlementFault::NoRealization);
    std::vector<const PartialValuation*> minimal;
    for (const auto& cand : realizers) {
      bool dominated = std::any_of(realizers.begin(), realizers.end(), [&](const auto& other) {
        return other.size() < cand.size() && other.subset_of(cand);
      });
      if (!dominated) minimal.push_back(&cand);
    }
    if (minimal.size() > 1)
      throw SettlementError("several minimal settlements realize " + s.formula.str(),
                            SettlementFault::Ambiguous);
    chosen = *minimal.front();
  }

  auto new_val = merged(reality_val, chosen);
  auto updated = moved_reality(m, new_val);

  SettlementOutcome out{std::move(updated), {}, WorldClass::Epistemic};
  for (const auto& w : m.worlds()) {
    auto before = classify_valuation(w.valuation, m.shared(), reality_val);
    auto after = classify_valuation(w.valuation, m.shared(), new_val);
    if (before != after) out.reclassifications.push_back({w.name, before, after});
  }
  out.previous_reality_class = classify_valuation(reality_val, m.shared(), new_val);
  return out;
}

SettlementOutcome apply_sequence(const KripkeModel& m, const std::vector<Settlement>& seq) {
  for (std::size_t j = 1; j < seq.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (seq[i].formula == seq[j].formula && seq[i].value != seq[j].value)
        throw SettlementError("sequence settles " + seq[j].formula.str() + " to both values",
                              SettlementFault::Contradiction, int(j) + 1);

  KripkeModel cur = m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      cur = apply_settlement(cur, seq[i]).model;
    } catch (const SettlementError& e) {
      throw SettlementError(std::string(e.what()) + " (step " + std::to_string(i + 1) + ")",
                            e.fault, int(i) + 1);
    }
  }

  const auto& before_val = m.reality().valuation;
  const auto& after_val = cur.reality().valuation;
  std::vector<Reclassification> recls;
  for (const auto& w : m.worlds()) {
    auto before = classify_valuation(w.valuation, m.shared(), before_val);
    auto after = classify_valuation(w.valuation, m.shared(), after_val);
    if (before != after) recls.push_back({w.name, before, after});
  }
  auto previous = classify_valuation(before_val, m.shared(), after_val);
  return {std::move(cur), std::move(recls), previous};
}

bool independent(const Formula& f1, const Formula& f2) {
  auto contains = [](const Formula& hay, const Formula& needle) {
    auto subs = subformulas(hay);
    return std::find(subs.begin(), subs.end(), needle) != subs.end();
  };
  return !contains(f1, f2) && !contains(f2, f1);
}

namespace {

struct OrderRun {
  std::optional<SettlementOutcome> outcome;
  SettlementFault fault{};
  int step = 0;
};

OrderRun run_order(const KripkeModel& m, const Settlement& a, const Settlement& b) {
  try {
    return {apply_sequence(m, {a, b}), {}, 0};
  } catch (const SettlementError& e) {
    return {std::nullopt, e.fault, e.step};
  }
}

std::string joined(const std::multiset<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += "{" + s + "}";
  }
  return out;
}

std::multiset<std::string> world_prints(const KripkeModel& m) {
  std::multiset<std::string> out;
  for (const auto& w : m.worlds()) out.insert(w.valuation.literals(m.atoms()));
  return out;
}

std::multiset<std::string> edge_prints(const KripkeModel& m) {
  std::multiset<std::string> out;
  for (const auto& e : m.edges())
    out.insert("{" + m.world(e.from).valuation.literals(m.atoms()) + "} => {" +
               m.world(e.to).valuation.literals(m.atoms()) + "}");
  return out;
}

}  // namespace

CommutationResult check_commutation(const KripkeModel& m, const Settlement& s1,
                                    const Settlement& s2) {
  auto first = run_order(m, s1, s2);
  auto second = run_order(m, s2, s1);

  if (!first.outcome || !second.outcome) {
    if (!first.outcome && !second.outcome && first.fault == second.fault &&
        first.step == second.step)
      return {CommutationKind::Commute, "", 0};
    return {CommutationKind::OrderDependent, "",
            !first.outcome ? first.step : second.step};
  }

  const auto& a = first.outcome->model;
  const auto& b = second.outcome->model;
  auto reality_a = a.reality().valuation.literals(a.atoms());
  auto reality_b = b.reality().valuation.literals(b.atoms());
  if (reality_a != reality_b)
    return {CommutationKind::Differ, "reality: {" + reality_a + "} vs {" + reality_b + "}", 0};
  auto worlds_a = world_prints(a), worlds_b = world_prints(b);
  if (worlds_a != worlds_b)
    return {CommutationKind::Differ, "worlds: " + joined(worlds_a) + " vs " + joined(worlds_b),
            0};
  auto edges_a = edge_prints(a), edges_b = edge_prints(b);
  if (edges_a != edges_b)
    return {CommutationKind::Differ, "edges: " + joined(edges_a) + " vs " + joined(edges_b), 0};
  return {CommutationKind::Commute, "", 0};
}

PreservationReport check_preservation(const KripkeModel& m, const std::vector<Settlement>& seq,
                                      SystemId system, FormulaBound bound) {
  auto outcome = apply_sequence(m, seq);
  auto report = check_system(outcome.model, system, std::move(bound));

  std::vector<std::string> pruned;
  for (const auto& rc : outcome.reclassifications)
    if (rc.old_class == WorldClass::Conjectural && rc.new_class != WorldClass::Conjectural &&
        rc.new_class != WorldClass::Reality)
      pruned.push_back(rc.world);

  bool holds = report.holds;
  return {std::move(outcome), std::move(report), holds, std::move(pruned)};
}

}  // namespace cml
