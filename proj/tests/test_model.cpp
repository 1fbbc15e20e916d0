#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cml/error.hpp"
#include "cml/model.hpp"
#include "cml/model_io.hpp"
#include "support.hpp"

using namespace cml;

namespace {

const char* kPairText = R"(
# worked two-world example
atoms: a b c d e f
shared: a !b
world R: a !b !c d
world w: a !b !c d !e
reality: R
edge: R w
edge: w w
)";

KripkeModel pair_model() { return read_model_text(kPairText); }

Formula f(const char* s) { return parse_formula(s); }

}  // namespace

TEST_CASE("partial valuation basics") {
  auto v = PartialValuation::from_literals("a !b c");
  CHECK(v.truth("a") == Truth::True);
  CHECK(v.truth("b") == Truth::False);
  CHECK(v.truth("z") == Truth::Undef);
  CHECK(v.defines("c"));
  CHECK(!v.defines("z"));
  CHECK(v.size() == 3);
  CHECK_THROWS_AS(PartialValuation::from_literals("a !a"), ValuationError);
  CHECK_THROWS_AS(PartialValuation::from_literals("a ?b"), ValuationError);
  CHECK(PartialValuation::from_literals("a a") == PartialValuation::from_literals("a"));

  auto w = v.extended_with("d", false);
  CHECK(v.subset_of(w));
  CHECK(!w.subset_of(v));
  CHECK(v.subset_of(v));
  CHECK_THROWS_AS(v.extended_with("a", false), ValuationError);

  auto flipped = PartialValuation::from_literals("!a c");
  auto confl = v.conflicts_with(flipped);
  CHECK(confl == std::vector<std::string>{"a"});
  CHECK(!v.subset_of(flipped));

  std::vector<std::string> universe = {"c", "b", "a"};
  CHECK(v.literals(universe) == "c !b a");  // universe order, not name order
  CHECK(v.total_over(universe));
  CHECK(!v.total_over(std::vector<std::string>{"a", "z"}));
  CHECK(PartialValuation{}.literals(universe).empty());
}

TEST_CASE("model construction validates its invariants") {
  auto atoms = std::vector<std::string>{"a", "b"};
  auto va = PartialValuation::from_literals("a");
  World w1{"w1", va};

  CHECK_THROWS_AS(KripkeModel(atoms, {}, {}, {}, "w1"), ModelError);
  CHECK_THROWS_AS(KripkeModel(atoms, {w1, w1}, {}, {}, "w1"), ModelError);
  CHECK_THROWS_AS(KripkeModel(atoms, {w1}, {}, {}, "nope"), ModelError);
  CHECK_THROWS_AS(KripkeModel(atoms, {w1}, {{"w1", "w2"}}, {}, "w1"), ModelError);
  CHECK_THROWS_AS(KripkeModel({"a", "a"}, {w1}, {}, {}, "w1"), ModelError);
  // world assigns an undeclared atom
  CHECK_THROWS_AS(KripkeModel({"b"}, {w1}, {}, {}, "w1"), ModelError);
  // world does not extend the shared valuation
  CHECK_THROWS_AS(KripkeModel(atoms, {w1}, {}, PartialValuation::from_literals("b"), "w1"),
                  ModelError);
  CHECK_THROWS_AS(KripkeModel(atoms, {w1}, {}, PartialValuation::from_literals("!a"), "w1"),
                  ModelError);

  // duplicate edges collapse
  KripkeModel m(atoms, {w1}, {{"w1", "w1"}, {"w1", "w1"}}, {}, "w1");
  CHECK(m.edges().size() == 1);
}

TEST_CASE("evaluation over the two-world example") {
  auto m = pair_model();
  CHECK(m.eval("R", f("a")) == Truth::True);
  CHECK(m.eval("R", f("~b")) == Truth::True);
  CHECK(m.eval("R", f("e")) == Truth::Undef);
  CHECK(m.eval("R", f("[]~e")) == Truth::True);
  CHECK(m.eval("R", f("[]a")) == Truth::True);
  CHECK(m.eval("R", f("[]f")) == Truth::Undef);
  CHECK(m.eval("R", f("e | ~e")) == Truth::Undef);  // no excluded middle
  CHECK(m.eval("w", f("~e")) == Truth::True);
  CHECK(m.satisfies("R", f("[]~e")));
  CHECK(!m.satisfies("R", f("e")));
  CHECK(!m.satisfies("R", f("~(e & ~e)")));  // undefined, hence not satisfied

  CHECK_THROWS_AS(m.eval("R", f("zz")), ModelError);
  CHECK_THROWS_AS(m.eval("nope", f("a")), ModelError);
}

TEST_CASE("printed and contagious modes differ on partially defined input") {
  const char* text = R"(
atoms: a b
world w: !a
reality: w
mode: contagious
)";
  auto contagious = read_model_text(text);
  CHECK(contagious.mode() == EvalMode::Contagious);
  CHECK(contagious.eval("w", f("a & b")) == Truth::Undef);  // b undefined infects
  CHECK(contagious.eval("w", f("~a | b")) == Truth::Undef);

  auto printed = KripkeModel(contagious.atoms(), contagious.worlds(), contagious.edges(),
                             contagious.shared(), contagious.reality_name(), EvalMode::Printed);
  CHECK(printed.eval("w", f("a & b")) == Truth::False);
  CHECK(printed.eval("w", f("~a | b")) == Truth::True);
}

TEST_CASE("box is the conjunction over successors and true without any") {
  const char* text = R"(
atoms: x
world a:
world b: x
world c: !x
reality: a
edge: a b
edge: a c
)";
  auto m = read_model_text(text);
  CHECK(m.eval("a", f("[]x")) == Truth::False);   // one successor refutes x
  CHECK(m.eval("a", f("[]~x")) == Truth::False);  // and one refutes ~x
  CHECK(m.eval("b", f("[]x")) == Truth::True);    // vacuous
  CHECK(m.eval("b", f("[]~x")) == Truth::True);   // vacuous

  const char* undef = R"(
atoms: x
world a:
world b: x
world c:
reality: a
edge: a b
edge: a c
)";
  auto m2 = read_model_text(undef);
  CHECK(m2.eval("a", f("[]x")) == Truth::Undef);  // true at b, undefined at c
}

TEST_CASE("defined set filters by definedness at the world") {
  auto m = pair_model();
  std::set<Formula> candidates = {f("a"), f("e"), f("e | a"), f("e & f"), f("[]~e")};
  auto at_r = m.defined_set("R", candidates);
  CHECK(at_r == std::set<Formula>{f("a"), f("e | a"), f("[]~e")});
  // e is settled false at w, which also grounds e & f there
  auto at_w = m.defined_set("w", candidates);
  CHECK(at_w == candidates);
}

TEST_CASE("definedness report lists lost and flipped atoms per edge") {
  const char* text = R"(
atoms: a b
world u: a b
world v: a
world x: !a
reality: u
edge: u v
edge: v x
edge: v v
)";
  auto m = read_model_text(text);
  auto rep = m.definedness_report();
  CHECK(!rep.preserving);
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0] == DefinednessViolation{"u", "v", "b"});  // b lost
  CHECK(rep.violations[1] == DefinednessViolation{"v", "x", "a"});  // a flipped

  CHECK(pair_model().is_definedness_preserving());
}

TEST_CASE("frame properties") {
  auto one = read_model_text("atoms: a\nworld w:\nreality: w\nedge: w w\n");
  auto p = one.frame_properties();
  CHECK(p.serial);
  CHECK(p.reflexive);
  CHECK(p.transitive);
  CHECK(p.euclidean);
  CHECK(p.successorless.empty());

  auto two = read_model_text("atoms: a\nworld u:\nworld v:\nreality: u\nedge: u v\n");
  auto q = two.frame_properties();
  CHECK(!q.serial);
  CHECK(q.successorless == std::vector<std::string>{"v"});
  CHECK(!q.reflexive);
  CHECK(q.transitive);   // no chain to break it
  CHECK(!q.euclidean);   // u R v but not v R v
}

TEST_CASE("serial closure duplicates dead ends and loops them") {
  auto m = read_model_text("atoms: a\nworld w: a\nreality: w\n");
  auto closed = m.close_serial();
  REQUIRE(closed.worlds().size() == 2);
  CHECK(closed.worlds()[1].name == "w*");
  CHECK(closed.worlds()[1].valuation == m.worlds()[0].valuation);
  CHECK(closed.edges() == std::vector<Edge>{{"w", "w*"}, {"w*", "w*"}});
  CHECK(closed.frame_properties().serial);
  CHECK(closed.is_definedness_preserving());

  // already serial: unchanged
  CHECK(closed.close_serial() == closed);
  // name collision bumps the suffix
  auto clash = read_model_text("atoms: a\nworld w:\nworld w*: a\nreality: w\nedge: w* w*\n");
  auto fixed = clash.close_serial();
  CHECK(fixed.worlds().back().name == "w**");
}

TEST_CASE("transitive closure") {
  auto m = read_model_text(
      "atoms: a\nworld x:\nworld y:\nworld z:\nreality: x\nedge: x y\nedge: y z\n");
  auto t = m.close_transitive();
  CHECK(t.frame_properties().transitive);
  CHECK(t.edges().size() == 3);
  CHECK(std::find(t.edges().begin(), t.edges().end(), Edge{"x", "z"}) != t.edges().end());
  CHECK(t.close_transitive() == t);
}

TEST_CASE("euclidean closure on the fork") {
  auto m = read_model_text(
      "atoms: a\nworld u:\nworld v:\nworld x:\nreality: u\nedge: u v\nedge: u x\n");
  auto e = m.close_euclidean();
  CHECK(e.frame_properties().euclidean);
  auto& es = e.edges();
  for (Edge want : {Edge{"v", "x"}, Edge{"x", "v"}, Edge{"v", "v"}, Edge{"x", "x"}})
    CHECK(std::find(es.begin(), es.end(), want) != es.end());
  CHECK(es.size() == 6);
  CHECK(e.close_euclidean() == e);
}

TEST_CASE("closures are idempotent on random models") {
  testing::Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_model(rng);
    auto s = m.close_serial();
    CHECK(s.frame_properties().serial);
    CHECK(s.close_serial() == s);
    auto t = m.close_transitive();
    CHECK(t.frame_properties().transitive);
    CHECK(t.close_transitive() == t);
    auto e = m.close_euclidean();
    CHECK(e.frame_properties().euclidean);
    CHECK(e.close_euclidean() == e);
  }
}

TEST_CASE("serial and transitive closures preserve definedness preservation") {
  testing::Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_model(rng, {.definedness_preserving = true});
    REQUIRE(m.is_definedness_preserving());
    CHECK(m.close_serial().is_definedness_preserving());
    CHECK(m.close_transitive().is_definedness_preserving());
  }
}

TEST_CASE("euclidean closure can break definedness preservation") {
  // Siblings with incomparable valuations get connected by the closure.
  auto m = read_model_text(
      "atoms: a b\nworld u:\nworld v: a\nworld x: b\nreality: u\nedge: u v\nedge: u x\n");
  REQUIRE(m.is_definedness_preserving());
  CHECK(!m.close_euclidean().is_definedness_preserving());
}

TEST_CASE("eval is monotone along valuation inclusion for propositional formulas") {
  testing::Rng rng(9);
  auto atoms = testing::atom_universe(3);
  for (int i = 0; i < 300; ++i) {
    auto lo = testing::random_valuation(rng, atoms);
    auto hi = testing::random_extension(rng, lo, atoms);
    KripkeModel m(atoms, {{"lo", lo}, {"hi", hi}}, {}, {}, "lo",
                  testing::coin(rng) ? EvalMode::Printed : EvalMode::Contagious);
    Formula g = testing::random_formula(rng, atoms, testing::pick(rng, 0, 6), false);
    CHECK(info_leq(m.eval("lo", g), m.eval("hi", g)));
  }
}

TEST_CASE("model text round trip") {
  auto m = pair_model();
  auto text = write_model(m);
  auto back = read_model_text(text);
  CHECK(back == m);
  CHECK(write_model(back) == text);

  testing::Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    auto r = testing::random_model(rng);
    CHECK(read_model_text(write_model(r)) == r);
  }
}

TEST_CASE("model reader reports line numbers") {
  auto line_of = [](const char* text) {
    try {
      read_model_text(text);
    } catch (const ModelIoError& e) {
      return e.line;
    }
    return std::size_t(-1);
  };
  CHECK(line_of("world w:\natoms: a\nreality: w\n") == 1);  // atoms must come first
  CHECK(line_of("atoms: a\nworld w: a !a\nreality: w\n") == 2);
  CHECK(line_of("atoms: a\nworld w:\nbogus: x\nreality: w\n") == 3);
  CHECK(line_of("atoms: a\nworld w:\nreality: w\nmode: loud\n") == 4);
  CHECK(line_of("atoms: a\nworld w:\nedge: w\nreality: w\n") == 3);
  CHECK(line_of("atoms: a\nworld w:\nreality: w v\n") == 3);
  CHECK(line_of("atoms: a\natoms: a\nworld w:\nreality: w\n") == 2);

  CHECK_THROWS_AS(read_model_text("atoms: a\nworld w:\n"), ModelIoError);   // no reality
  CHECK_THROWS_AS(read_model_text("# nothing\n"), ModelIoError);            // no atoms
  // comments and blank lines are fine anywhere
  auto m = read_model_text("# head\natoms: a # universe\n\nworld w: a\nreality: w # done\n");
  CHECK(m.worlds().size() == 1);
}
