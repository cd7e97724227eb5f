#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fhelix {

enum class ErrorCode {
  // expression and document parsing
  illegal_character,
  syntax_error,
  unknown_identifier,
  coord_out_of_range,
  wrong_symbol_kind,
  non_constant_exponent,
  missing_field,
  dimension_mismatch,
  invalid_value,
  io_error,
  // jet arithmetic
  domain_error,
  overflow,
  division_by_zero,
  insufficient_order,
  // curve geometry
  degenerate_curve,
  not_regular,
  degenerate_curvature,
  // reductions
  empty_input,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Lexer/parser failure inside one expression or one spec document.
/// `position` is a byte offset into the parsed text; `line` is 1-based and 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(code, what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

class JetError : public Error {
 public:
  using Error::Error;
};

/// The curve is not a Frenet curve of proper n at parameter `s`.
/// `index` is the offending derivative (DegenerateCurve) or curvature (DegenerateCurvature), 0 otherwise.
class CurveError : public Error {
 public:
  CurveError(ErrorCode code, const std::string& what, int index, double s)
      : Error(code, what), index_(index), s_(s) {}

  int index() const noexcept { return index_; }
  double s() const noexcept { return s_; }

 private:
  int index_;
  double s_;
};

}  // namespace fhelix
