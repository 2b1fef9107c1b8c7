#pragma once

#include <stdexcept>
#include <string>

namespace swapalg {

// ---- construction / lookup errors ----

struct DuplicatePoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownPoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PointSetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadModel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- arithmetic errors ----

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedRank : std::domain_error {
  using std::domain_error::domain_error;
};

// Denominator lies in the rank-n determinantal ideal: the fraction is legal
// over Z(P) but has no meaning in the rank-n quotient.
struct DenominatorVanishesInZn : std::domain_error {
  using std::domain_error::domain_error;
};

struct IllegalCrossFraction : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- polygon / cluster errors ----

struct InsufficientPoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedSize : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotADiagonal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateFlags : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- verification / CLI errors ----

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace swapalg
