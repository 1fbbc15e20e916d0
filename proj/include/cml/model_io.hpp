#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cml/model.hpp"

namespace cml {

// Line-oriented UTF-8 model description. '#' starts a comment anywhere on a
// line. The atoms line must come first; the rest may appear in any order:
//
//   atoms: a b c d e f
//   shared: a !b
//   world R: a !b !c d
//   world w: a !b !c d !e
//   reality: R
//   edge: R w
//   edge: w w
//   mode: printed
//
// Literals read `p` as p true and `!p` as p false. The shared and mode lines
// are optional (defaults: empty, printed). Errors carry 1-based line numbers.
KripkeModel read_model(std::istream& in);
KripkeModel read_model_text(std::string_view text);
KripkeModel read_model_file(const std::string& path);

// Canonical rendering; read_model_text(write_model(m)) equals m.
std::string write_model(const KripkeModel& m);
void write_model_file(const KripkeModel& m, const std::string& path);

}  // namespace cml
