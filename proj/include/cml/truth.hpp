#pragma once

#include <string_view>

namespace cml {

// Third truth value reads as "undefined", not "unknown": a sentence the
// world has simply not settled either way.
enum class Truth : unsigned char { False = 0, Undef = 1, True = 2 };

// Two connective regimes over the same three values.
//
// Printed (default): a false conjunct annihilates an undefined one and a
// true disjunct absorbs it, so 0&u = 0 and 1|u = 1. Equivalent to ordering
// the values 0 < u < 1 and taking min for & and max for |.
//
// Contagious: undefinedness infects every compound; any undefined operand
// makes the result undefined regardless of the other side.
enum class EvalMode { Printed, Contagious };

constexpr bool defined(Truth t) { return t != Truth::Undef; }

constexpr Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

constexpr Truth neg(Truth a) {
  switch (a) {
    case Truth::True: return Truth::False;
    case Truth::False: return Truth::True;
    default: return Truth::Undef;
  }
}

constexpr Truth conj(Truth a, Truth b, EvalMode mode = EvalMode::Printed) {
  if (mode == EvalMode::Contagious && (!defined(a) || !defined(b))) return Truth::Undef;
  return a < b ? a : b;  // min over 0 < u < 1
}

constexpr Truth disj(Truth a, Truth b, EvalMode mode = EvalMode::Printed) {
  if (mode == EvalMode::Contagious && (!defined(a) || !defined(b))) return Truth::Undef;
  return a < b ? b : a;  // max over 0 < u < 1
}

constexpr Truth implies(Truth a, Truth b, EvalMode mode = EvalMode::Printed) {
  return disj(neg(a), b, mode);
}

constexpr Truth iff(Truth a, Truth b, EvalMode mode = EvalMode::Printed) {
  return conj(implies(a, b, mode), implies(b, a, mode), mode);
}

// Information order: u below both defined values, defined values incomparable.
constexpr bool info_leq(Truth lo, Truth hi) { return lo == Truth::Undef || lo == hi; }

constexpr char truth_char(Truth t) {
  switch (t) {
    case Truth::True: return '1';
    case Truth::False: return '0';
    default: return 'u';
  }
}

constexpr std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::True: return "1";
    case Truth::False: return "0";
    default: return "u";
  }
}

}  // namespace cml
