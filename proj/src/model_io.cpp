#include "cml/model_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "cml/error.hpp"

namespace cml {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

PartialValuation literals_at(const std::string& text, std::size_t line) {
  try {
    return PartialValuation::from_literals(text);
  } catch (const ValuationError& e) {
    throw ModelIoError("line " + std::to_string(line) + ": " + e.what(), line);
  }
}

}  // namespace

KripkeModel read_model(std::istream& in) {
  std::vector<std::string> atoms;
  bool have_atoms = false;
  std::optional<PartialValuation> shared;
  std::vector<World> worlds;
  std::vector<Edge> edges;
  std::optional<std::string> reality;
  std::optional<EvalMode> mode;

  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ModelIoError("line " + std::to_string(line_no) + ": " + msg, line_no);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = raw;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected '<keyword>:'");
    std::string head = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    auto head_toks = split_tokens(head);
    if (head_toks.empty()) fail("missing keyword");
    const std::string& keyword = head_toks[0];

    if (!have_atoms && keyword != "atoms") fail("the atoms line must come first");

    if (keyword == "atoms") {
      if (have_atoms) fail("duplicate atoms line");
      if (head_toks.size() != 1) fail("malformed atoms line");
      atoms = split_tokens(rest);
      have_atoms = true;
    } else if (keyword == "shared") {
      if (head_toks.size() != 1) fail("malformed shared line");
      if (shared) fail("duplicate shared line");
      shared = literals_at(rest, line_no);
    } else if (keyword == "world") {
      if (head_toks.size() != 2) fail("expected 'world <name>:'");
      worlds.push_back({head_toks[1], literals_at(rest, line_no)});
    } else if (keyword == "reality") {
      if (head_toks.size() != 1) fail("malformed reality line");
      if (reality) fail("duplicate reality line");
      auto toks = split_tokens(rest);
      if (toks.size() != 1) fail("reality expects exactly one world name");
      reality = toks[0];
    } else if (keyword == "edge") {
      if (head_toks.size() != 1) fail("malformed edge line");
      auto toks = split_tokens(rest);
      if (toks.size() != 2) fail("edge expects '<from> <to>'");
      edges.push_back({toks[0], toks[1]});
    } else if (keyword == "mode") {
      if (head_toks.size() != 1) fail("malformed mode line");
      if (mode) fail("duplicate mode line");
      auto toks = split_tokens(rest);
      if (toks.size() == 1 && toks[0] == "printed")
        mode = EvalMode::Printed;
      else if (toks.size() == 1 && toks[0] == "contagious")
        mode = EvalMode::Contagious;
      else
        fail("mode must be 'printed' or 'contagious'");
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }

  if (!have_atoms) throw ModelIoError("missing atoms line", 0);
  if (!reality) throw ModelIoError("missing reality line", 0);
  try {
    return KripkeModel(std::move(atoms), std::move(worlds), std::move(edges),
                       shared.value_or(PartialValuation{}), std::move(*reality),
                       mode.value_or(EvalMode::Printed));
  } catch (const ModelError& e) {
    throw ModelIoError(e.what(), 0);
  }
}

KripkeModel read_model_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_model(in);
}

KripkeModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  return read_model(in);
}

std::string write_model(const KripkeModel& m) {
  std::string out = "atoms:";
  for (const auto& a : m.atoms()) {
    out += ' ';
    out += a;
  }
  out += '\n';
  std::string shared = m.shared().literals(m.atoms());
  out += "shared:";
  if (!shared.empty()) {
    out += ' ';
    out += shared;
  }
  out += '\n';
  for (const auto& w : m.worlds()) {
    out += "world " + w.name + ":";
    std::string lits = w.valuation.literals(m.atoms());
    if (!lits.empty()) {
      out += ' ';
      out += lits;
    }
    out += '\n';
  }
  out += "reality: " + m.reality_name() + "\n";
  for (const auto& e : m.edges()) out += "edge: " + e.from + " " + e.to + "\n";
  out += std::string("mode: ") + (m.mode() == EvalMode::Printed ? "printed" : "contagious") + "\n";
  return out;
}

void write_model_file(const KripkeModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file '" + path + "'");
  out << write_model(m);
}

}  // namespace cml
