#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fhelix/expr.hpp"

namespace fhelix {

inline constexpr int kDefaultSamples = 512;
inline constexpr double kDefaultTolConst = 1e-8;
inline constexpr double kDefaultTolFrame = 1e-10;

/// A curve alpha: [s_min, s_max] -> R^n, a scalar field f: R^n -> R, and the sampling settings.
struct CurveSpec {
  int dimension = 0;
  std::vector<std::string> component_sources;
  std::vector<Expr> components;
  std::string field_source;
  Expr field;
  double s_min = 0.0;
  double s_max = 0.0;
  int samples = kDefaultSamples;
  double tol_const = kDefaultTolConst;  // constancy tolerance
  double tol_frame = kDefaultTolFrame;  // degeneracy threshold

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Parses the key/value spec document:
///
///     dimension = 3
///     curve = ["cos(s/sqrt(2))", "s/sqrt(2)", "sin(s/sqrt(2))"]
///     field = "x1^2 + x2 + x3^2"
///     s_range = [0, 12.566]
///     samples = 512          # optional, also tol_const and tol_frame
///
/// Entries are separated by newlines or ';'. `#` starts a comment.
/// Errors are ParseError with a 1-based line number.
CurveSpec parse_curve_spec(std::string_view document);

CurveSpec load_curve_spec(const std::filesystem::path& path);

/// Builds and validates a spec from expression sources (used by the catalog and tests).
CurveSpec make_curve_spec(std::vector<std::string> components, std::string field, double s_min,
                          double s_max, int samples = kDefaultSamples,
                          double tol_const = kDefaultTolConst, double tol_frame = kDefaultTolFrame);

/// Serializes back to the document format. Tolerances are written only when not default.
std::string to_document(const CurveSpec& spec);

/// Throws Error(invalid_value | dimension_mismatch) when an invariant is violated.
void validate(const CurveSpec& spec);

}  // namespace fhelix
