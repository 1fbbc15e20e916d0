#include "cml/schema.hpp"

#include <sstream>

#include "cml/error.hpp"

namespace cml {

std::string_view schema_name(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::K: return "K";
    case AxiomSchema::D: return "D";
    case AxiomSchema::T: return "T";
    case AxiomSchema::Four: return "4";
    case AxiomSchema::Five: return "5";
    default: return "C";
  }
}

int schema_arity(AxiomSchema s) { return s == AxiomSchema::K ? 2 : 1; }

Formula instantiate(AxiomSchema s, const Formula& phi) {
  switch (s) {
    case AxiomSchema::D:
      return Formula::implication(Formula::box(phi),
                                  Formula::negation(Formula::box(Formula::negation(phi))));
    case AxiomSchema::T: return Formula::implication(Formula::box(phi), phi);
    case AxiomSchema::Four:
      return Formula::implication(Formula::box(phi), Formula::box(Formula::box(phi)));
    case AxiomSchema::Five:
      return Formula::implication(Formula::negation(Formula::box(phi)),
                                  Formula::box(Formula::negation(Formula::box(phi))));
    case AxiomSchema::C: return Formula::implication(phi, Formula::box(phi));
    default: throw Error("schema K takes two formulas");
  }
}

Formula instantiate(AxiomSchema s, const Formula& phi, const Formula& psi) {
  if (s != AxiomSchema::K) return instantiate(s, phi);
  return Formula::implication(
      Formula::box(Formula::implication(phi, psi)),
      Formula::implication(Formula::box(phi), Formula::box(psi)));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "Valid";
    case Verdict::Undetermined: return "Undetermined";
    default: return "Violated";
  }
}

ModelEvaluator::ModelEvaluator(const KripkeModel& m, const BoundedEnumeration& table)
    : model_(&m), table_(&table), world_count_(m.worlds().size()) {
  for (const auto& a : table.bound().atoms)
    if (!m.has_atom(a)) throw ModelError("enumeration atom '" + a + "' not in the model");

  const EvalMode mode = m.mode();
  vals_.resize(table.size() * world_count_);
  for (std::size_t i = 0; i < table.size(); ++i) {
    Truth* row = vals_.data() + i * world_count_;
    switch (table.op(i)) {
      case Op::Atom:
        for (std::size_t w = 0; w < world_count_; ++w)
          row[w] = m.worlds()[w].valuation.truth(table.atom_name(i));
        break;
      case Op::Not: {
        const Truth* child = vals_.data() + table.left(i) * world_count_;
        for (std::size_t w = 0; w < world_count_; ++w) row[w] = neg(child[w]);
        break;
      }
      case Op::Box: {
        const Truth* child = vals_.data() + table.left(i) * world_count_;
        for (std::size_t w = 0; w < world_count_; ++w) {
          Truth acc = Truth::True;
          for (std::size_t v : m.successors(w)) {
            acc = conj(acc, child[v], mode);
            if (mode == EvalMode::Printed && acc == Truth::False) break;
          }
          row[w] = acc;
        }
        break;
      }
      default: {
        const Truth* l = vals_.data() + table.left(i) * world_count_;
        const Truth* r = vals_.data() + table.right(i) * world_count_;
        for (std::size_t w = 0; w < world_count_; ++w) {
          switch (table.op(i)) {
            case Op::And: row[w] = conj(l[w], r[w], mode); break;
            case Op::Or: row[w] = disj(l[w], r[w], mode); break;
            case Op::Implies: row[w] = implies(l[w], r[w], mode); break;
            default: row[w] = iff(l[w], r[w], mode);
          }
        }
      }
    }
  }
}

Truth ModelEvaluator::box_value(std::size_t entry, std::size_t world) const {
  const EvalMode mode = model_->mode();
  Truth acc = Truth::True;
  for (std::size_t v : model_->successors(world)) {
    acc = conj(acc, value(entry, v), mode);
    if (mode == EvalMode::Printed && acc == Truth::False) break;
  }
  return acc;
}

namespace {

Truth unary_instance(const ModelEvaluator& ev, AxiomSchema s, std::size_t i, std::size_t w) {
  const EvalMode mode = ev.model().mode();
  switch (s) {
    case AxiomSchema::T: return implies(ev.box_value(i, w), ev.value(i, w), mode);
    case AxiomSchema::D: {
      Truth box_neg = Truth::True;
      for (std::size_t v : ev.model().successors(w))
        box_neg = conj(box_neg, neg(ev.value(i, v)), mode);
      return implies(ev.box_value(i, w), neg(box_neg), mode);
    }
    case AxiomSchema::Four: {
      Truth box_box = Truth::True;
      for (std::size_t v : ev.model().successors(w))
        box_box = conj(box_box, ev.box_value(i, v), mode);
      return implies(ev.box_value(i, w), box_box, mode);
    }
    case AxiomSchema::Five: {
      Truth box_not_box = Truth::True;
      for (std::size_t v : ev.model().successors(w))
        box_not_box = conj(box_not_box, neg(ev.box_value(i, v)), mode);
      return implies(neg(ev.box_value(i, w)), box_not_box, mode);
    }
    default: return implies(ev.value(i, w), ev.box_value(i, w), mode);  // C
  }
}

SchemaStatus check_k(const ModelEvaluator& ev) {
  const auto& tb = ev.table();
  const auto& m = ev.model();
  const EvalMode mode = m.mode();
  const int budget = tb.bound().max_connectives;
  std::optional<SchemaWitness> first_undef;
  std::vector<Truth> box_here(tb.size());
  for (std::size_t w = 0; w < m.worlds().size(); ++w) {
    auto succ = m.successors(w);
    for (std::size_t e = 0; e < tb.size(); ++e) box_here[e] = ev.box_value(e, w);
    for (std::size_t i = 0; i < tb.size(); ++i) {
      // joint budget: the pair must fit the instance inside the bound
      std::size_t j_end = tb.group_end(budget - tb.connectives(i));
      for (std::size_t j = 0; j < j_end; ++j) {
        Truth ante = Truth::True;
        for (std::size_t v : succ) {
          ante = conj(ante, implies(ev.value(i, v), ev.value(j, v), mode), mode);
          if (mode == EvalMode::Printed && ante == Truth::False) break;
        }
        Truth inst = implies(ante, implies(box_here[i], box_here[j], mode), mode);
        if (inst == Truth::False)
          return {Verdict::Violated,
                  SchemaWitness{m.worlds()[w].name, tb.formula(i), tb.formula(j), inst}};
        if (inst == Truth::Undef && !first_undef)
          first_undef = SchemaWitness{m.worlds()[w].name, tb.formula(i), tb.formula(j), inst};
      }
    }
  }
  if (first_undef) return {Verdict::Undetermined, std::move(first_undef)};
  return {Verdict::Valid, std::nullopt};
}

}  // namespace

SchemaStatus check_schema(const ModelEvaluator& ev, AxiomSchema s) {
  if (s == AxiomSchema::K) return check_k(ev);
  const auto& tb = ev.table();
  const auto& m = ev.model();
  std::optional<SchemaWitness> first_undef;
  for (std::size_t w = 0; w < m.worlds().size(); ++w)
    for (std::size_t i = 0; i < tb.size(); ++i) {
      Truth inst = unary_instance(ev, s, i, w);
      if (inst == Truth::False)
        return {Verdict::Violated,
                SchemaWitness{m.worlds()[w].name, tb.formula(i), std::nullopt, inst}};
      if (inst == Truth::Undef && !first_undef)
        first_undef = SchemaWitness{m.worlds()[w].name, tb.formula(i), std::nullopt, inst};
    }
  if (first_undef) return {Verdict::Undetermined, std::move(first_undef)};
  return {Verdict::Valid, std::nullopt};
}

SchemaStatus check_schema(const KripkeModel& m, AxiomSchema s, const FormulaBound& b) {
  BoundedEnumeration table(resolve_bound(b, m));
  return check_schema(ModelEvaluator(m, table), s);
}

std::string_view system_name(SystemId id) {
  switch (id) {
    case SystemId::K: return "K";
    case SystemId::KD: return "KD";
    case SystemId::KT: return "KT";
    case SystemId::KC: return "KC";
    case SystemId::KDC: return "KDC";
    case SystemId::KC45: return "KC45";
    default: return "KDC45";
  }
}

std::optional<SystemId> system_from_name(std::string_view name) {
  for (SystemId id : {SystemId::K, SystemId::KD, SystemId::KT, SystemId::KC, SystemId::KDC,
                      SystemId::KC45, SystemId::KDC45})
    if (system_name(id) == name) return id;
  return std::nullopt;
}

std::vector<AxiomSchema> system_schemas(SystemId id) {
  using S = AxiomSchema;
  switch (id) {
    case SystemId::K: return {S::K};
    case SystemId::KD: return {S::K, S::D};
    case SystemId::KT: return {S::K, S::T};
    case SystemId::KC: return {S::K, S::C};
    case SystemId::KDC: return {S::K, S::D, S::C};
    case SystemId::KC45: return {S::K, S::C, S::Four, S::Five};
    default: return {S::K, S::D, S::C, S::Four, S::Five};
  }
}

SystemReport check_system(const KripkeModel& m, SystemId id, FormulaBound b) {
  BoundedEnumeration table(resolve_bound(std::move(b), m));
  ModelEvaluator ev(m, table);

  SystemReport rep{id, {}, {}, true};
  auto schemas = system_schemas(id);
  for (AxiomSchema s : schemas) {
    CheckedSchema cs{s, check_schema(ev, s)};
    if (cs.status.verdict == Verdict::Violated) rep.holds = false;
    rep.schemas.push_back(std::move(cs));
  }

  auto has = [&](AxiomSchema s) {
    for (AxiomSchema x : schemas)
      if (x == s) return true;
    return false;
  };
  auto props = m.frame_properties();
  if (has(AxiomSchema::D))
    rep.conditions.push_back({"seriality", props.serial, props.successorless, std::nullopt});
  if (has(AxiomSchema::Four))
    rep.conditions.push_back({"transitivity", props.transitive, {}, std::nullopt});
  if (has(AxiomSchema::Five))
    rep.conditions.push_back({"euclideanness", props.euclidean, {}, std::nullopt});
  if (has(AxiomSchema::C)) {
    auto prop = check_c_propagation(ev);
    rep.conditions.push_back({"c-propagation", prop.holds, {}, std::move(prop.witness)});
  }
  for (const auto& c : rep.conditions)
    if (!c.holds) rep.holds = false;
  return rep;
}

CollapseReport collapse_check(const ModelEvaluator& ev) {
  const auto& tb = ev.table();
  const auto& m = ev.model();
  const EvalMode mode = m.mode();
  std::optional<SchemaWitness> first_undef;
  SchemaStatus status{Verdict::Valid, std::nullopt};
  for (std::size_t w = 0; w < m.worlds().size() && status.verdict == Verdict::Valid; ++w)
    for (std::size_t i = 0; i < tb.size(); ++i) {
      Truth inst = iff(ev.value(i, w), ev.box_value(i, w), mode);
      if (inst == Truth::False) {
        status = {Verdict::Violated,
                  SchemaWitness{m.worlds()[w].name, tb.formula(i), std::nullopt, inst}};
        break;
      }
      if (inst == Truth::Undef && !first_undef)
        first_undef = SchemaWitness{m.worlds()[w].name, tb.formula(i), std::nullopt, inst};
    }
  if (status.verdict == Verdict::Valid && first_undef)
    status = {Verdict::Undetermined, std::move(first_undef)};
  return {std::move(status), m.frame_properties().successorless};
}

CollapseReport collapse_check(const KripkeModel& m, FormulaBound b) {
  BoundedEnumeration table(resolve_bound(std::move(b), m));
  return collapse_check(ModelEvaluator(m, table));
}

namespace {

void render_witness(std::ostringstream& out, const SchemaWitness& w) {
  out << " [witness: world=" << w.world << " phi=" << w.phi.str();
  if (w.psi) out << " psi=" << w.psi->str();
  out << "]";
}

}  // namespace

std::string render(const CheckedSchema& cs) {
  std::ostringstream out;
  out << "SCHEMA " << schema_name(cs.schema) << ": " << verdict_name(cs.status.verdict);
  if (cs.status.witness) render_witness(out, *cs.status.witness);
  return out.str();
}

std::string render(const SystemCondition& c) {
  std::ostringstream out;
  out << "CONDITION " << c.name << ": " << (c.holds ? "holds" : "fails");
  if (!c.successorless.empty()) {
    out << " [successorless:";
    for (const auto& w : c.successorless) out << " " << w;
    out << "]";
  }
  if (c.witness)
    out << " [witness: world=" << c.witness->world << " phi=" << c.witness->formula.str()
        << " successor=" << c.witness->successor << "]";
  return out.str();
}

std::string render(const SystemReport& rep) {
  std::ostringstream out;
  for (const auto& cs : rep.schemas) out << render(cs) << "\n";
  for (const auto& c : rep.conditions) out << render(c) << "\n";
  out << "SYSTEM " << system_name(rep.system) << ": " << (rep.holds ? "holds" : "fails") << "\n";
  return out.str();
}

std::string render(const CollapseReport& rep) {
  std::ostringstream out;
  out << "COLLAPSE: " << verdict_name(rep.status.verdict);
  if (rep.status.witness) render_witness(out, *rep.status.witness);
  out << "\n";
  if (!rep.vacuous_worlds.empty()) {
    out << "NOTE vacuous box at:";
    for (const auto& w : rep.vacuous_worlds) out << " " << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace cml
