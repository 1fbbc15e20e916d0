#include "cml/formula.hpp"

#include <algorithm>
#include <utility>

#include "cml/error.hpp"

namespace cml {

namespace {

std::uint16_t depth_of(Op op, const Formula* l, const Formula* r) {
  int d = 0;
  if (l) d = l->modal_depth();
  if (r) d = std::max(d, r->modal_depth());
  if (op == Op::Box) ++d;
  return static_cast<std::uint16_t>(d);
}

std::uint32_t size_of(const Formula* l, const Formula* r) {
  std::uint32_t s = 1;
  if (l) s += static_cast<std::uint32_t>(l->connectives());
  if (r) s += static_cast<std::uint32_t>(r->connectives());
  return s;
}

}  // namespace

bool valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->depth = 0;
  n->size = 0;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::unary(Op op, Formula f) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->depth = depth_of(op, &f, nullptr);
  n->size = size_of(&f, nullptr);
  n->l = f.node_;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) { return unary(Op::Not, std::move(f)); }
Formula Formula::box(Formula f) { return unary(Op::Box, std::move(f)); }

Formula Formula::make(Op op, Formula l, Formula r) {
  if (!is_binary(op)) throw Error("Formula::make expects a binary connective");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->depth = depth_of(op, &l, &r);
  n->size = size_of(&l, &r);
  n->l = l.node_;
  n->r = r.node_;
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula l, Formula r) { return make(Op::And, std::move(l), std::move(r)); }
Formula Formula::disjunction(Formula l, Formula r) { return make(Op::Or, std::move(l), std::move(r)); }
Formula Formula::implication(Formula l, Formula r) { return make(Op::Implies, std::move(l), std::move(r)); }
Formula Formula::equivalence(Formula l, Formula r) { return make(Op::Iff, std::move(l), std::move(r)); }

const std::string& Formula::atom_name() const {
  if (node_->op != Op::Atom) throw Error("atom_name on a compound formula");
  return node_->name;
}

Formula Formula::lhs() const {
  if (!node_->l) throw Error("lhs on an atom");
  return Formula(node_->l);
}

Formula Formula::rhs() const {
  if (!node_->r) throw Error("rhs on a non-binary formula");
  return Formula(node_->r);
}

int Formula::compare(const Formula& a, const Formula& b) {
  const Node* x = a.node_.get();
  const Node* y = b.node_.get();
  if (x == y) return 0;
  if (x->op != y->op) return x->op < y->op ? -1 : 1;
  if (x->op == Op::Atom) return x->name.compare(y->name);
  if (int c = compare(Formula(x->l), Formula(y->l)); c != 0) return c;
  if (!x->r) return 0;
  return compare(Formula(x->r), Formula(y->r));
}

namespace {

// Binding strength; parenthesise a child that binds looser than its parent,
// or equally loose on the recursive side the grammar does not repeat on.
int prec(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    default: return 5;  // unary and atoms
  }
}

const char* spelling(Op op) {
  switch (op) {
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Implies: return "->";
    case Op::Iff: return "<->";
    default: return "";
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.atom_name();
      return;
    case Op::Not:
    case Op::Box: {
      out += f.op() == Op::Not ? "~" : "[]";
      Formula c = f.lhs();
      bool paren = is_binary(c.op());
      if (paren) out += '(';
      render(c, out);
      if (paren) out += ')';
      return;
    }
    default: {
      Formula l = f.lhs(), r = f.rhs();
      int p = prec(f.op());
      bool right_assoc = f.op() == Op::Implies || f.op() == Op::Iff;
      bool pl = right_assoc ? prec(l.op()) <= p : prec(l.op()) < p;
      bool pr = right_assoc ? prec(r.op()) < p : prec(r.op()) <= p;
      if (pl) out += '(';
      render(l, out);
      if (pl) out += ')';
      out += ' ';
      out += spelling(f.op());
      out += ' ';
      if (pr) out += '(';
      render(r, out);
      if (pr) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  render(*this, out);
  return out;
}

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.op() == Op::Atom) return;
  collect_subformulas(f.lhs(), out);
  if (is_binary(f.op())) collect_subformulas(f.rhs(), out);
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) {
    out.insert(f.atom_name());
    return;
  }
  collect_atoms(f.lhs(), out);
  if (is_binary(f.op())) collect_atoms(f.rhs(), out);
}

}  // namespace

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace cml
