#include "cml/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cml/enumerate.hpp"
#include "cml/error.hpp"
#include "cml/formula.hpp"
#include "cml/model.hpp"
#include "cml/model_io.hpp"
#include "cml/pairs.hpp"
#include "cml/schema.hpp"
#include "cml/settlement.hpp"
#include "cml/truth.hpp"
#include "cml/valuation.hpp"

namespace cml {
namespace {

using nlohmann::json;

constexpr std::array<WorldClass, 6> kClassOrder = {
    WorldClass::Reality,    WorldClass::Epistemic, WorldClass::Conjectural,
    WorldClass::Delusional, WorldClass::Opinion,   WorldClass::Mixed,
};

std::string_view mode_name(EvalMode mode) {
  return mode == EvalMode::Printed ? "printed" : "contagious";
}

KripkeModel with_mode(const KripkeModel& m, EvalMode mode) {
  return KripkeModel(m.atoms(), m.worlds(), m.edges(), m.shared(), m.reality_name(), mode);
}

// Atom lists on the command line may be comma or whitespace separated.
std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) names.push_back(std::exchange(current, {}));
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(current);
  return names;
}

json witness_json(const SchemaWitness& w) {
  json j{{"world", w.world}, {"phi", w.phi.str()}, {"value", std::string(to_string(w.value))}};
  if (w.psi) j["psi"] = w.psi->str();
  return j;
}

json status_json(const SchemaStatus& status) {
  json j{{"verdict", std::string(verdict_name(status.verdict))}, {"witness", nullptr}};
  if (status.witness) j["witness"] = witness_json(*status.witness);
  return j;
}

json report_json(const SystemReport& rep) {
  json schemas = json::array();
  for (const auto& cs : rep.schemas) {
    json j = status_json(cs.status);
    j["name"] = std::string(schema_name(cs.schema));
    schemas.push_back(std::move(j));
  }
  json conditions = json::array();
  for (const auto& c : rep.conditions) {
    json j{{"name", c.name}, {"holds", c.holds}};
    if (!c.successorless.empty()) j["successorless"] = c.successorless;
    if (c.witness) {
      j["witness"] = {{"world", c.witness->world},
                      {"formula", c.witness->formula.str()},
                      {"successor", c.witness->successor}};
    }
    conditions.push_back(std::move(j));
  }
  return json{{"system", std::string(system_name(rep.system))},
              {"holds", rep.holds},
              {"schemas", std::move(schemas)},
              {"conditions", std::move(conditions)}};
}

int cmd_parse(const std::string& text, bool as_json, std::ostream& out) {
  Formula f = parse_formula(text);
  if (as_json) {
    json j{{"command", "parse"},
           {"formula", f.str()},
           {"connectives", f.connectives()},
           {"modal_depth", f.modal_depth()}};
    out << j.dump(2) << "\n";
  } else {
    out << f.str() << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& world, const std::string& mode,
             const std::string& text, bool as_json, std::ostream& out) {
  KripkeModel m = read_model_file(model_path);
  if (mode == "printed") m = with_mode(m, EvalMode::Printed);
  if (mode == "contagious") m = with_mode(m, EvalMode::Contagious);
  Formula f = parse_formula(text);
  Truth v = m.eval(world, f);
  if (as_json) {
    json j{{"command", "eval"},
           {"formula", f.str()},
           {"world", world},
           {"mode", std::string(mode_name(m.mode()))},
           {"value", std::string(to_string(v))}};
    out << j.dump(2) << "\n";
  } else {
    out << truth_char(v) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& model_path, const std::string& system, int max_connectives,
              int max_depth, bool as_json, std::ostream& out) {
  KripkeModel m = read_model_file(model_path);
  SystemId id = *system_from_name(system);  // the option only admits valid names
  SystemReport rep = check_system(m, id, {max_connectives, max_depth, {}});
  if (as_json) {
    json j = report_json(rep);
    j["command"] = "check";
    j["bound"] = {{"max_connectives", max_connectives}, {"max_depth", max_depth}};
    out << j.dump(2) << "\n";
  } else {
    out << render(rep);
  }
  return rep.holds ? 0 : 1;
}

int cmd_classify(const std::string& model_path, bool as_json, std::ostream& out) {
  KripkeModel m = read_model_file(model_path);
  const PartialValuation& reality = m.reality().valuation;
  std::map<WorldClass, int> counts;
  std::vector<WorldClass> classes;
  classes.reserve(m.worlds().size());
  for (const World& w : m.worlds()) {
    WorldClass c = classify_valuation(w.valuation, m.shared(), reality);
    classes.push_back(c);
    ++counts[c];
  }
  if (as_json) {
    json worlds = json::array();
    for (std::size_t i = 0; i < m.worlds().size(); ++i) {
      worlds.push_back({{"name", m.worlds()[i].name},
                        {"literals", m.worlds()[i].valuation.literals(m.atoms())},
                        {"class", world_class_name(classes[i])}});
    }
    json count_obj = json::object();
    for (WorldClass c : kClassOrder) {
      if (counts.count(c)) count_obj[world_class_name(c)] = counts[c];
    }
    json j{{"command", "classify"},
           {"reality", m.reality_name()},
           {"worlds", std::move(worlds)},
           {"counts", std::move(count_obj)}};
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < m.worlds().size(); ++i) {
      out << m.worlds()[i].name << ": {" << m.worlds()[i].valuation.literals(m.atoms()) << "} -> "
          << world_class_name(classes[i]) << "\n";
    }
    out << "worlds: " << m.worlds().size() << "\n";
    for (WorldClass c : kClassOrder) {
      if (counts.count(c)) out << world_class_name(c) << ": " << counts[c] << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const std::string& atoms_text, const std::string& shared_text,
                  const std::string& reality_text, bool as_json, std::ostream& out) {
  std::vector<std::string> atoms = split_names(atoms_text);
  PartialValuation shared = PartialValuation::from_literals(shared_text);
  PartialValuation reality = PartialValuation::from_literals(reality_text);
  std::vector<EnumeratedWorld> worlds = enumerate_worlds(atoms, shared, reality);

  // The two inclusion classes count their whole family, reality included, so
  // the numbers match how wide each notion reaches rather than the partition.
  std::map<WorldClass, int> counts;
  for (const EnumeratedWorld& w : worlds) {
    if (w.world_class == WorldClass::Epistemic || w.world_class == WorldClass::Conjectural)
      continue;
    ++counts[w.world_class];
  }
  for (const EnumeratedWorld& w : worlds) {
    if (w.epistemic_family) ++counts[WorldClass::Epistemic];
    if (w.conjectural_family) ++counts[WorldClass::Conjectural];
  }

  if (as_json) {
    json rows = json::array();
    for (const EnumeratedWorld& w : worlds) {
      rows.push_back({{"literals", w.valuation.literals(atoms)},
                      {"class", world_class_name(w.world_class)},
                      {"epistemic_family", w.epistemic_family},
                      {"conjectural_family", w.conjectural_family}});
    }
    json count_obj = json::object();
    for (WorldClass c : kClassOrder) {
      if (counts.count(c)) count_obj[world_class_name(c)] = counts[c];
    }
    json j{{"command", "enumerate"},
           {"worlds", std::move(rows)},
           {"counts", std::move(count_obj)}};
    out << j.dump(2) << "\n";
  } else {
    for (const EnumeratedWorld& w : worlds) {
      out << "{" << w.valuation.literals(atoms) << "} -> " << world_class_name(w.world_class)
          << "\n";
    }
    out << "worlds: " << worlds.size() << "\n";
    for (WorldClass c : kClassOrder) {
      if (counts.count(c)) out << world_class_name(c) << ": " << counts[c] << "\n";
    }
  }
  return 0;
}

int cmd_settle(const std::string& model_path, const std::string& formula_text,
               const std::string& value, const std::string& out_path, bool as_json,
               std::ostream& out) {
  KripkeModel m = read_model_file(model_path);
  Settlement s{parse_formula(formula_text), value == "true"};
  SettlementOutcome outcome = apply_settlement(m, s);
  std::string model_text = write_model(outcome.model);
  if (!out_path.empty()) write_model_file(outcome.model, out_path);
  if (as_json) {
    json moves = json::array();
    for (const Reclassification& rc : outcome.reclassifications) {
      moves.push_back({{"world", rc.world},
                       {"from", world_class_name(rc.old_class)},
                       {"to", world_class_name(rc.new_class)}});
    }
    json j{{"command", "settle"},
           {"formula", s.formula.str()},
           {"value", s.value},
           {"reality", {{"from", m.reality_name()}, {"to", outcome.model.reality_name()}}},
           {"previous_reality_class", world_class_name(outcome.previous_reality_class)},
           {"reclassifications", std::move(moves)},
           {"model", model_text}};
    out << j.dump(2) << "\n";
  } else {
    // The summary rides along as comment lines, so the combined stream is
    // still a readable model description.
    if (out_path.empty()) out << model_text;
    out << "# settled " << s.formula.str() << " := " << (s.value ? "true" : "false") << "\n";
    out << "# reality " << m.reality_name() << " -> " << outcome.model.reality_name() << "\n";
    for (const Reclassification& rc : outcome.reclassifications) {
      out << "# " << rc.world << ": " << world_class_name(rc.old_class) << " -> "
          << world_class_name(rc.new_class) << "\n";
    }
  }
  return 0;
}

int cmd_collapse_demo(bool paracomplete, bool as_json, std::ostream& out) {
  KripkeModel m =
      paracomplete
          ? KripkeModel({"a"}, {{"root", {}}, {"tip", PartialValuation::from_literals("a")}},
                        {{"root", "tip"}, {"tip", "tip"}}, {}, "root")
          : KripkeModel({"p", "q"}, {{"w", PartialValuation::from_literals("p !q")}},
                        {{"w", "w"}}, {}, "w");
  CollapseReport rep = collapse_check(m, {4, 2, {}});
  if (as_json) {
    json j = status_json(rep.status);
    j["command"] = "collapse-demo";
    j["mode"] = paracomplete ? "paracomplete" : "classical";
    j["vacuous_worlds"] = rep.vacuous_worlds;
    j["model"] = write_model(m);
    out << j.dump(2) << "\n";
  } else {
    out << write_model(m) << render(rep);
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"three-valued Kripke models: evaluation, world taxonomy, settlements"};
  app.name("cml");
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string parse_text;
  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a formula, print its normal form");
  parse_cmd->add_option("formula", parse_text, "formula text")->required();

  std::string eval_model, eval_world, eval_mode, eval_text;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula at a world");
  eval_cmd->add_option("--model", eval_model, "model file")->required();
  eval_cmd->add_option("--world", eval_world, "world name")->required();
  eval_cmd->add_option("--mode", eval_mode, "override the model's connective mode")
      ->check(CLI::IsMember({"printed", "contagious"}));
  eval_cmd->add_option("formula", eval_text, "formula text")->required();

  std::string check_model, check_sys;
  int max_connectives = 4;
  int max_depth = 2;
  CLI::App* check_cmd = app.add_subcommand("check", "check a modal system against a model");
  check_cmd->add_option("--system", check_sys, "system name")
      ->required()
      ->check(CLI::IsMember({"K", "KD", "KT", "KC", "KDC", "KC45", "KDC45"}));
  check_cmd->add_option("--max-connectives", max_connectives, "connective budget per instance");
  check_cmd->add_option("--max-depth", max_depth, "modal depth budget");
  check_cmd->add_option("file", check_model, "model file")->required();

  std::string classify_model;
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify every world against reality");
  classify_cmd->add_option("file", classify_model, "model file")->required();

  std::string enum_atoms, enum_shared, enum_reality;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "enumerate admissible worlds over an atom universe");
  enum_cmd->add_option("--atoms", enum_atoms, "atom names, comma or space separated")->required();
  enum_cmd->add_option("--shared", enum_shared, "settled literals every world extends");
  enum_cmd->add_option("--reality", enum_reality, "reality literals")->required();

  std::string settle_model, settle_formula, settle_value, settle_out;
  CLI::App* settle_cmd = app.add_subcommand("settle", "settle a formula and move reality");
  settle_cmd->add_option("--model", settle_model, "model file")->required();
  settle_cmd->add_option("--formula", settle_formula, "formula to settle")->required();
  settle_cmd->add_option("--value", settle_value, "settled value")
      ->required()
      ->check(CLI::IsMember({"true", "false"}));
  settle_cmd->add_option("--out", settle_out, "write the settled model here instead of stdout");

  bool paracomplete = false;
  CLI::App* collapse_cmd =
      app.add_subcommand("collapse-demo", "box collapse on a classical vs a gappy model");
  collapse_cmd->add_flag("--paracomplete", paracomplete, "use the model with a truth-value gap");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_text, as_json, out);
    if (eval_cmd->parsed())
      return cmd_eval(eval_model, eval_world, eval_mode, eval_text, as_json, out);
    if (check_cmd->parsed())
      return cmd_check(check_model, check_sys, max_connectives, max_depth, as_json, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_model, as_json, out);
    if (enum_cmd->parsed())
      return cmd_enumerate(enum_atoms, enum_shared, enum_reality, as_json, out);
    if (settle_cmd->parsed())
      return cmd_settle(settle_model, settle_formula, settle_value, settle_out, as_json, out);
    if (collapse_cmd->parsed()) return cmd_collapse_demo(paracomplete, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cml
