#include "cml/model.hpp"

#include <algorithm>
#include <cctype>

#include "cml/error.hpp"

namespace cml {

namespace {

bool valid_world_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return c == '#' || c == ':' || std::isspace(c) != 0;
  });
}

}  // namespace

KripkeModel::KripkeModel(std::vector<std::string> atoms, std::vector<World> worlds,
                         std::vector<Edge> edges, PartialValuation shared, std::string reality,
                         EvalMode mode)
    : atoms_(std::move(atoms)),
      worlds_(std::move(worlds)),
      shared_(std::move(shared)),
      reality_(std::move(reality)),
      mode_(mode) {
  for (const auto& a : atoms_) {
    if (!valid_atom_name(a)) throw ModelError("invalid atom name '" + a + "'");
    if (!atom_set_.insert(a).second) throw ModelError("duplicate atom '" + a + "'");
  }
  if (worlds_.empty()) throw ModelError("model needs at least one world");
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    const World& w = worlds_[i];
    if (!valid_world_name(w.name)) throw ModelError("invalid world name '" + w.name + "'");
    if (!world_index_.emplace(w.name, i).second)
      throw ModelError("duplicate world '" + w.name + "'");
    for (const auto& [atom, _] : w.valuation)
      if (!atom_set_.count(atom))
        throw ModelError("world '" + w.name + "' assigns undeclared atom '" + atom + "'");
    if (!shared_.subset_of(w.valuation))
      throw ModelError("world '" + w.name + "' does not extend the shared valuation");
  }
  for (const auto& [atom, _] : shared_)
    if (!atom_set_.count(atom)) throw ModelError("shared valuation uses undeclared atom '" + atom + "'");

  auto at = world_index_.find(reality_);
  if (at == world_index_.end()) throw ModelError("reality world '" + reality_ + "' not declared");
  reality_index_ = at->second;

  successors_.resize(worlds_.size());
  std::vector<std::vector<bool>> seen(worlds_.size(), std::vector<bool>(worlds_.size(), false));
  for (const auto& e : edges) {
    auto f = world_index_.find(e.from);
    auto t = world_index_.find(e.to);
    if (f == world_index_.end() || t == world_index_.end())
      throw ModelError("edge '" + e.from + " -> " + e.to + "' references an unknown world");
    if (seen[f->second][t->second]) continue;  // the relation is a set
    seen[f->second][t->second] = true;
    edges_.push_back(e);
    successors_[f->second].push_back(t->second);
  }
  for (auto& s : successors_) std::sort(s.begin(), s.end());
}

bool KripkeModel::has_world(std::string_view name) const {
  return world_index_.find(name) != world_index_.end();
}

std::size_t KripkeModel::index_of(std::string_view name) const {
  auto it = world_index_.find(name);
  if (it == world_index_.end())
    throw ModelError("unknown world '" + std::string(name) + "'");
  return it->second;
}

std::span<const std::size_t> KripkeModel::successors(std::size_t world_index) const {
  return successors_[world_index];
}

bool KripkeModel::has_atom(const std::string& name) const { return atom_set_.count(name) != 0; }

Truth KripkeModel::eval(std::string_view world_name, const Formula& f) const {
  return eval_at(index_of(world_name), f);
}

Truth KripkeModel::eval_at(std::size_t w, const Formula& f) const {
  switch (f.op()) {
    case Op::Atom: {
      const std::string& a = f.atom_name();
      if (!has_atom(a)) throw ModelError("unknown atom '" + a + "'");
      return worlds_[w].valuation.truth(a);
    }
    case Op::Not:
      return neg(eval_at(w, f.lhs()));
    case Op::Box: {
      Truth acc = Truth::True;  // vacuously true without successors
      for (std::size_t s : successors_[w]) acc = conj(acc, eval_at(s, f.lhs()), mode_);
      return acc;
    }
    case Op::And:
      return conj(eval_at(w, f.lhs()), eval_at(w, f.rhs()), mode_);
    case Op::Or:
      return disj(eval_at(w, f.lhs()), eval_at(w, f.rhs()), mode_);
    case Op::Implies:
      return implies(eval_at(w, f.lhs()), eval_at(w, f.rhs()), mode_);
    case Op::Iff:
      return iff(eval_at(w, f.lhs()), eval_at(w, f.rhs()), mode_);
  }
  throw ModelError("unreachable formula kind");
}

std::set<Formula> KripkeModel::defined_set(std::string_view world_name,
                                           const std::set<Formula>& candidates) const {
  std::size_t w = index_of(world_name);
  std::set<Formula> out;
  for (const auto& f : candidates)
    if (defined(eval_at(w, f))) out.insert(f);
  return out;
}

DefinednessReport KripkeModel::definedness_report() const {
  DefinednessReport rep;
  for (const auto& e : edges_) {
    const PartialValuation& from = worlds_[index_of(e.from)].valuation;
    const PartialValuation& to = worlds_[index_of(e.to)].valuation;
    for (const auto& [atom, value] : from) {
      auto v = to.value(atom);
      if (!v || *v != value) rep.violations.push_back({e.from, e.to, atom});
    }
  }
  rep.preserving = rep.violations.empty();
  return rep;
}

FrameProperties KripkeModel::frame_properties() const {
  FrameProperties p;
  std::size_t n = worlds_.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : successors_[i]) r[i][j] = true;

  p.serial = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (successors_[i].empty()) {
      p.serial = false;
      p.successorless.push_back(worlds_[i].name);
    }
  }
  p.reflexive = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!r[i][i]) p.reflexive = false;

  p.transitive = true;
  p.euclidean = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!r[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (r[b][c] && !r[a][c]) p.transitive = false;
        if (r[a][c] && !r[b][c]) p.euclidean = false;
      }
    }
  }
  return p;
}

KripkeModel KripkeModel::close_serial() const {
  std::vector<World> worlds = worlds_;
  std::vector<Edge> edges = edges_;
  std::set<std::string> taken;
  for (const auto& w : worlds_) taken.insert(w.name);
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (!successors_[i].empty()) continue;
    std::string name = worlds_[i].name + "*";
    while (taken.count(name)) name += "*";
    taken.insert(name);
    worlds.push_back({name, worlds_[i].valuation});
    edges.push_back({worlds_[i].name, name});
    edges.push_back({name, name});  // keeps the repair itself serial
  }
  return KripkeModel(atoms_, std::move(worlds), std::move(edges), shared_, reality_, mode_);
}

KripkeModel KripkeModel::replace_edges(std::vector<Edge> edges) const {
  return KripkeModel(atoms_, worlds_, std::move(edges), shared_, reality_, mode_);
}

KripkeModel KripkeModel::close_transitive() const {
  std::size_t n = worlds_.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : successors_[i]) r[i][j] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;

  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j] && !std::binary_search(successors_[i].begin(), successors_[i].end(), j))
        edges.push_back({worlds_[i].name, worlds_[j].name});
  return replace_edges(std::move(edges));
}

KripkeModel KripkeModel::close_euclidean() const {
  std::size_t n = worlds_.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : successors_[i]) r[i][j] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r[a][b])
          for (std::size_t c = 0; c < n; ++c)
            if (r[a][c] && !r[b][c]) {
              r[b][c] = true;
              changed = true;
            }
  }

  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j] && !std::binary_search(successors_[i].begin(), successors_[i].end(), j))
        edges.push_back({worlds_[i].name, worlds_[j].name});
  return replace_edges(std::move(edges));
}

KripkeModel KripkeModel::with_reality(std::string new_reality) const {
  return KripkeModel(atoms_, worlds_, edges_, shared_, std::move(new_reality), mode_);
}

KripkeModel KripkeModel::with_world_and_edges(World added, std::vector<Edge> extra_edges,
                                              std::string new_reality) const {
  std::vector<World> worlds = worlds_;
  worlds.push_back(std::move(added));
  std::vector<Edge> edges = edges_;
  edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
  return KripkeModel(atoms_, std::move(worlds), std::move(edges), shared_, std::move(new_reality),
                     mode_);
}

bool KripkeModel::operator==(const KripkeModel& o) const {
  return atoms_ == o.atoms_ && worlds_ == o.worlds_ && edges_ == o.edges_ &&
         shared_ == o.shared_ && reality_ == o.reality_ && mode_ == o.mode_;
}

}  // namespace cml
