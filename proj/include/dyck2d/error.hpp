#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyck2d {

enum class Errc {
  ragged_rows,
  unknown_token,
  index_out_of_range,
  size_mismatch,
  domain_out_of_bounds,
  neutral_not_allowed,
  not_dyck,
  odd_length,
  contains_neutral,
  not_in_dc,
  degree_violation,
  stale_redex,
  not_quaternate,
  three_corner_anomaly,
  length_mismatch,
  not_dyck_border,
  budget_exceeded,
  hierarchy_violation,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ragged_rows: return "RaggedRows";
    case Errc::unknown_token: return "UnknownToken";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::domain_out_of_bounds: return "DomainOutOfBounds";
    case Errc::neutral_not_allowed: return "NeutralNotAllowed";
    case Errc::not_dyck: return "NotDyck";
    case Errc::odd_length: return "OddLength";
    case Errc::contains_neutral: return "ContainsNeutral";
    case Errc::not_in_dc: return "NotInDC";
    case Errc::degree_violation: return "DegreeViolation";
    case Errc::stale_redex: return "StaleRedex";
    case Errc::not_quaternate: return "NotQuaternate";
    case Errc::three_corner_anomaly: return "ThreeCornerAnomaly";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_dyck_border: return "NotDyckBorder";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::hierarchy_violation: return "HierarchyViolation";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Malformed picture text; line and column are 1-based, column counts cells.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dyck2d
