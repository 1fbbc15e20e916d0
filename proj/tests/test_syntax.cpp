#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cml/error.hpp"
#include "cml/formula.hpp"
#include "support.hpp"

using namespace cml;

namespace {

Formula fa() { return Formula::atom("a"); }
Formula fb() { return Formula::atom("b"); }
Formula fc() { return Formula::atom("c"); }

}  // namespace

TEST_CASE("atoms validate their names") {
  CHECK(valid_atom_name("a"));
  CHECK(valid_atom_name("abc_09"));
  CHECK(!valid_atom_name(""));
  CHECK(!valid_atom_name("A"));
  CHECK(!valid_atom_name("9a"));
  CHECK(!valid_atom_name("_a"));
  CHECK(!valid_atom_name("a-b"));
  CHECK_THROWS_AS(Formula::atom("Bad"), Error);
}

TEST_CASE("structural equality and ordering") {
  CHECK(fa() == fa());
  CHECK(fa() != fb());
  CHECK(Formula::conjunction(fa(), fb()) == Formula::conjunction(fa(), fb()));
  CHECK(Formula::conjunction(fa(), fb()) != Formula::conjunction(fb(), fa()));
  CHECK(Formula::negation(fa()) != Formula::box(fa()));
  CHECK(fa() < Formula::negation(fa()));  // atom rank below connectives
}

TEST_CASE("measures") {
  Formula f = parse_formula("~a & [](b -> []c)");
  CHECK(f.connectives() == 5);
  CHECK(f.modal_depth() == 2);
  CHECK(fa().connectives() == 0);
  CHECK(fa().modal_depth() == 0);
  CHECK(Formula::equivalence(fa(), fb()).connectives() == 1);

  auto at = atoms(f);
  CHECK(at == std::set<std::string>{"a", "b", "c"});

  auto sub = subformulas(parse_formula("a & a"));
  CHECK(sub.size() == 2);  // a, a&a
  auto sub2 = subformulas(parse_formula("[]a -> a"));
  CHECK(sub2.size() == 3);  // a, []a, []a->a
}

TEST_CASE("precedence and associativity") {
  // ~ and [] bind tightest, then &, |, ->, <->.
  CHECK(parse_formula("~a & b | c") ==
        Formula::disjunction(Formula::conjunction(Formula::negation(fa()), fb()), fc()));
  CHECK(parse_formula("a | b & c") ==
        Formula::disjunction(fa(), Formula::conjunction(fb(), fc())));
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implication(fa(), Formula::implication(fb(), fc())));
  CHECK(parse_formula("a <-> b <-> c") ==
        Formula::equivalence(fa(), Formula::equivalence(fb(), fc())));
  CHECK(parse_formula("a & b & c") ==
        Formula::conjunction(Formula::conjunction(fa(), fb()), fc()));
  CHECK(parse_formula("a | b -> c <-> a") ==
        Formula::equivalence(Formula::implication(Formula::disjunction(fa(), fb()), fc()), fa()));
  CHECK(parse_formula("~[]a") == Formula::negation(Formula::box(fa())));
  CHECK(parse_formula("[]~a") == Formula::box(Formula::negation(fa())));
  CHECK(parse_formula("(a | b) & c") ==
        Formula::conjunction(Formula::disjunction(fa(), fb()), fc()));
}

TEST_CASE("box spellings") {
  CHECK(parse_formula("B a") == Formula::box(fa()));
  CHECK(parse_formula("Ba") == Formula::box(fa()));
  CHECK(parse_formula("BBa") == Formula::box(Formula::box(fa())));
  CHECK(parse_formula("[]a") == parse_formula("B a"));
  CHECK(parse_formula("[] []a") == Formula::box(Formula::box(fa())));
}

TEST_CASE("whitespace and comments are insignificant") {
  CHECK(parse_formula("  a\t&\n b ") == Formula::conjunction(fa(), fb()));
  CHECK(parse_formula("a & # trailing words\nb") == Formula::conjunction(fa(), fb()));
}

TEST_CASE("iff is a connective of its own, not sugar") {
  Formula f = parse_formula("a <-> b");
  CHECK(f.op() == Op::Iff);
  CHECK(f != parse_formula("(a -> b) & (b -> a)"));
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(parse_formula("[]a").str() == "[]a");
  CHECK(parse_formula("a -> []a").str() == "a -> []a");
  CHECK(parse_formula("a & (b | c)").str() == "a & (b | c)");
  CHECK(parse_formula("(a & b) | c").str() == "a & b | c");
  CHECK(parse_formula("a -> (b -> c)").str() == "a -> b -> c");
  CHECK(parse_formula("(a -> b) -> c").str() == "(a -> b) -> c");
  CHECK(parse_formula("a & (b & c)").str() == "a & (b & c)");
  CHECK(parse_formula("(a & b) & c").str() == "a & b & c");
  CHECK(parse_formula("~(a & b)").str() == "~(a & b)");
  CHECK(parse_formula("~a & b").str() == "~a & b");
  CHECK(parse_formula("[](a -> b)").str() == "[](a -> b)");
  CHECK(parse_formula("~~a").str() == "~~a");
  CHECK(parse_formula("~[]~a").str() == "~[]~a");
  CHECK(parse_formula("B a").str() == "[]a");  // normalized spelling
  CHECK(parse_formula("(a <-> b) <-> c").str() == "(a <-> b) <-> c");
  CHECK(parse_formula("a <-> (b <-> c)").str() == "a <-> b <-> c");
}

TEST_CASE("parse errors carry byte offsets and expectations") {
  auto offset_of = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.offset;
    }
    return std::size_t(-1);
  };
  CHECK(offset_of("a &") == 3);
  CHECK(offset_of("a & & b") == 4);
  CHECK(offset_of("(a | b") == 6);
  CHECK(offset_of("a b") == 2);
  CHECK(offset_of("?") == 0);
  CHECK(offset_of("a -> [b") == 6);
  CHECK(offset_of("") == 0);

  try {
    parse_formula("a &");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(!e.expected.empty());
    CHECK(std::string(e.what()).find("byte 3") != std::string::npos);
  }
}

TEST_CASE("parse of print is identity on random formulas") {
  testing::Rng rng(20260814);
  std::vector<std::string> names = {"a", "b", "c", "p_1", "qz"};
  for (int i = 0; i < 2000; ++i) {
    Formula f = testing::random_formula(rng, names, testing::pick(rng, 0, 12));
    Formula g = parse_formula(f.str());
    CAPTURE(f.str());
    REQUIRE(f == g);
  }
}
