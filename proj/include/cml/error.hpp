#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cml {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the formula parser. Carries the byte offset of the failure and
// the set of token spellings that would have been accepted there.
struct ParseError : Error {
  ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected)
      : Error(std::move(msg)), offset(offset), expected(std::move(expected)) {}

  std::size_t offset;
  std::vector<std::string> expected;
};

// Inconsistent or malformed partial valuations.
struct ValuationError : Error {
  using Error::Error;
};

// Model construction, validation, lookup and evaluation failures.
struct ModelError : Error {
  using Error::Error;
};

// Model file reader failures; line is 1-based.
struct ModelIoError : Error {
  ModelIoError(std::string msg, std::size_t line) : Error(std::move(msg)), line(line) {}
  std::size_t line;
};

// Admissibility violations in two-world pairs.
struct PairError : Error {
  using Error::Error;
};

enum class SettlementFault {
  AlreadyDefined,   // target formula has a defined value at reality
  NoRealization,    // no atomic extension realizes the requested value
  Ambiguous,        // several minimal atomic extensions realize it
  Contradiction,    // sequence settles one formula to both values
};

struct SettlementError : Error {
  SettlementError(std::string msg, SettlementFault fault, int step = 0)
      : Error(std::move(msg)), fault(fault), step(step) {}

  SettlementFault fault;
  int step;  // 1-based position in a sequence, 0 for single settlements
};

}  // namespace cml
