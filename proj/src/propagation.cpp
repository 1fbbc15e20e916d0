#include "cml/propagation.hpp"

#include "cml/schema.hpp"

namespace cml {

FormulaBound resolve_bound(FormulaBound b, const KripkeModel& m) {
  if (b.atoms.empty()) b.atoms = m.atoms();
  return b;
}

CPropagationReport check_c_propagation(const ModelEvaluator& ev) {
  const auto& tb = ev.table();
  const auto& m = ev.model();
  for (std::size_t w = 0; w < m.worlds().size(); ++w)
    for (std::size_t i = 0; i < tb.size(); ++i) {
      if (ev.value(i, w) != Truth::True) continue;
      for (std::size_t v : m.successors(w))
        if (ev.value(i, v) != Truth::True)
          return {false, CPropagationWitness{m.worlds()[w].name, tb.formula(i),
                                             m.worlds()[v].name}};
    }
  return {true, std::nullopt};
}

CPropagationReport check_c_propagation(const KripkeModel& m, const FormulaBound& b) {
  BoundedEnumeration table(resolve_bound(b, m));
  return check_c_propagation(ModelEvaluator(m, table));
}

CPropagationReport check_c_propagation(const KripkeModel& m) {
  return check_c_propagation(m, FormulaBound{5, 2, {}});
}

std::set<Formula> defined_set(const KripkeModel& m, std::string_view world_name,
                              const FormulaBound& b) {
  BoundedEnumeration table(resolve_bound(b, m));
  ModelEvaluator ev(m, table);
  std::size_t w = m.index_of(world_name);
  std::set<Formula> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (defined(ev.value(i, w))) out.insert(table.formula(i));
  return out;
}

}  // namespace cml
