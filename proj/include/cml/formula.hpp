#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cml {

// Rank order is the canonical connective order used by bounded enumeration:
// within one size class, negations come first, then boxes, then the binary
// connectives.
enum class Op : unsigned char { Atom, Not, Box, And, Or, Implies, Iff };

constexpr bool is_binary(Op op) { return op >= Op::And; }
constexpr bool is_unary(Op op) { return op == Op::Not || op == Op::Box; }

// Immutable formula tree with value semantics. Copies share structure, so
// passing and storing formulas is cheap and concurrent reads are safe.
class Formula {
 public:
  static Formula atom(std::string name);  // validates [a-z][a-z0-9_]*
  static Formula negation(Formula f);
  static Formula box(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);
  static Formula make(Op op, Formula l, Formula r);  // binary ops only

  Op op() const { return node_->op; }
  const std::string& atom_name() const;  // atoms only
  Formula lhs() const;                   // unary: the operand
  Formula rhs() const;                   // binary only

  // Number of connective nodes; atoms count zero.
  int connectives() const { return static_cast<int>(node_->size); }
  // Deepest nesting of boxes.
  int modal_depth() const { return static_cast<int>(node_->depth); }

  bool operator==(const Formula& o) const { return compare(*this, o) == 0; }
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

  // Structural order: op rank, then atom name, then children left to right.
  static int compare(const Formula& a, const Formula& b);

  // Minimal-parenthesis rendering; parse(str()) reproduces the formula.
  std::string str() const;

  // Stable identity of the underlying node, for memo tables.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula unary(Op op, Formula f);

  struct Node {
    Op op;
    std::uint16_t depth;
    std::uint32_t size;
    std::string name;                    // atoms only
    std::shared_ptr<const Node> l, r;    // children, null where absent
  };

  std::shared_ptr<const Node> node_;
};

inline std::string to_string(const Formula& f) { return f.str(); }

bool valid_atom_name(std::string_view name);

// All distinct subformulas, the formula itself included.
std::set<Formula> subformulas(const Formula& f);

// Names of the atoms occurring in f.
std::set<std::string> atoms(const Formula& f);

// Recursive-descent parser for the concrete syntax:
//
//   formula := iff
//   iff     := impl ("<->" impl)*          right-associative
//   impl    := or ("->" impl)?             right-associative
//   or      := and ("|" and)*              left-associative
//   and     := unary ("&" unary)*          left-associative
//   unary   := "~" unary | "[]" unary | "B" unary | atom | "(" formula ")"
//   atom    := [a-z][a-z0-9_]*
//
// Whitespace is insignificant; "#" starts a comment running to end of line.
// Failures raise ParseError with a byte offset and the expected tokens.
Formula parse_formula(std::string_view text);

}  // namespace cml
