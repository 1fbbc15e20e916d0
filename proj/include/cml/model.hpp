#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cml/formula.hpp"
#include "cml/truth.hpp"
#include "cml/valuation.hpp"

namespace cml {

struct World {
  std::string name;
  PartialValuation valuation;

  bool operator==(const World&) const = default;
};

struct Edge {
  std::string from, to;

  bool operator==(const Edge&) const = default;
};

// One atom whose definedness or value is lost along an edge.
struct DefinednessViolation {
  std::string from, to, atom;

  bool operator==(const DefinednessViolation&) const = default;
};

struct DefinednessReport {
  bool preserving = true;
  std::vector<DefinednessViolation> violations;
};

struct FrameProperties {
  bool serial = false;
  bool reflexive = false;
  bool transitive = false;
  bool euclidean = false;
  // Worlds where a box holds vacuously; nonempty exactly when not serial.
  std::vector<std::string> successorless;
};

// Pointed Kripke frame over partial valuations. Immutable once built; the
// constructor validates every structural invariant:
//   - atom and world names are well-formed and unique
//   - edges join existing worlds (duplicates collapse, the relation is a set)
//   - every world valuation ranges over declared atoms
//   - the shared valuation is contained in every world valuation
//   - the designated reality world exists
class KripkeModel {
 public:
  KripkeModel(std::vector<std::string> atoms, std::vector<World> worlds, std::vector<Edge> edges,
              PartialValuation shared, std::string reality, EvalMode mode = EvalMode::Printed);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<World>& worlds() const { return worlds_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const PartialValuation& shared() const { return shared_; }
  const std::string& reality_name() const { return reality_; }
  const World& reality() const { return worlds_[reality_index_]; }
  std::size_t reality_index() const { return reality_index_; }
  EvalMode mode() const { return mode_; }

  bool has_world(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws ModelError
  const World& world(std::string_view name) const { return worlds_[index_of(name)]; }

  // Successor world indices in world order.
  std::span<const std::size_t> successors(std::size_t world_index) const;

  bool has_atom(const std::string& name) const;

  // Three-valued evaluation at a world. A box is the conjunction of its
  // operand over all successors and is true when there are none. Unknown
  // worlds or atoms raise ModelError.
  Truth eval(std::string_view world_name, const Formula& f) const;
  Truth eval_at(std::size_t world_index, const Formula& f) const;

  // Only the designated value counts as satisfaction.
  bool satisfies(std::string_view world_name, const Formula& f) const {
    return eval(world_name, f) == Truth::True;
  }

  // The subset of `candidates` with a defined value at the world.
  std::set<Formula> defined_set(std::string_view world_name,
                                const std::set<Formula>& candidates) const;

  // Edges must never lose atoms: the source valuation is contained in the
  // target valuation. Violations list each offending (edge, atom).
  DefinednessReport definedness_report() const;
  bool is_definedness_preserving() const { return definedness_report().preserving; }

  FrameProperties frame_properties() const;

  // Frame repairs. Each returns an equivalent model when nothing is missing
  // and is idempotent. close_serial gives every successorless world a fresh
  // looped duplicate (named with a trailing '*') so the result is serial.
  KripkeModel close_serial() const;
  KripkeModel close_transitive() const;
  KripkeModel close_euclidean() const;

  // Rebuilders used by settlements; both revalidate.
  KripkeModel with_reality(std::string new_reality) const;
  KripkeModel with_world_and_edges(World added, std::vector<Edge> extra_edges,
                                   std::string new_reality) const;

  bool operator==(const KripkeModel&) const;

 private:
  KripkeModel replace_edges(std::vector<Edge> edges) const;

  std::vector<std::string> atoms_;
  std::vector<World> worlds_;
  std::vector<Edge> edges_;
  PartialValuation shared_;
  std::string reality_;
  EvalMode mode_;

  std::size_t reality_index_ = 0;
  std::map<std::string, std::size_t, std::less<>> world_index_;
  std::set<std::string> atom_set_;
  std::vector<std::vector<std::size_t>> successors_;
};

}  // namespace cml
