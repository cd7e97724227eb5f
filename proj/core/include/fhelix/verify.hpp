#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fhelix/classify.hpp"

namespace fhelix {

/// Grid maxima of the pointwise theorem identities. Fields are empty when the
/// curve dimension is below 3 (no harmonic curvatures exist).
struct TheoremResiduals {
  // tangent family
  std::optional<double> sys_helix;           // max_i,s |<V_{i+2}, grad f> - H_i <V_1, grad f>|
  std::optional<double> axis_helix;          // max_s |grad f - |grad f| cos(theta) (V_1 + sum H_i V_{i+2})|
  std::optional<double> sumsq_helix_spread;  // spread of sum H_i^2
  std::optional<double> tan_identity;        // max_s |cos^2(theta) (1 + sum H_i^2) - 1|
  std::optional<double> hn2_min;             // min_s |H_{n-2}|
  std::optional<double> cor31;               // max_s |V_1[H_{n-2}] + k_{n-1} H_{n-3}|
  // normal family
  std::optional<double> sys_slant;           // max_i,s |<V_{n-i-1}, grad f> - H*_i <V_n, grad f>|
  std::optional<double> axis_slant;          // max_s |grad f - <grad f, V_n> (H*_{n-2} V_1 + ... + H*_1 V_{n-2} + V_n)|
  std::optional<double> sumsq_slant_spread;  // spread of sum H*_i^2
  std::optional<double> hn2star_min;         // min_s |H*_{n-2}|
  std::optional<double> cor41;               // max_s |V_1[H*_{n-2}] - k_1 H*_{n-3}|

  friend bool operator==(const TheoremResiduals&, const TheoremResiduals&) = default;
};

/// Outcome of one theorem-side check. When `hypotheses_met` is false the
/// residuals are still filled (diagnostic mode) and `reason` says why.
struct HypothesisStatus {
  bool hypotheses_met = false;
  std::string reason;

  friend bool operator==(const HypothesisStatus&, const HypothesisStatus&) = default;
};

struct HelixCheck {
  HypothesisStatus status;
  TheoremResiduals residuals;  // only the helix-side fields are set
};

struct SlantCheck {
  HypothesisStatus status;
  TheoremResiduals residuals;  // only the slant-side fields are set
};

/// Theorem hypotheses for the tangent family: n >= 3, helix, parallel gradient,
/// and theta bounded away from 0.
HelixCheck verify_helix_theorems(std::span<const Sample> samples, const Classification& c);

/// Theorem hypotheses for the normal family: n >= 3, V_n-slant helix, parallel gradient.
SlantCheck verify_slant_theorems(std::span<const Sample> samples, const Classification& c);

struct Orthogonality {
  double v2 = 0.0;   // max |<grad f, V_2>|
  double vn1 = 0.0;  // max |<grad f, V_{n-1}>|
  bool applicable = false;
  std::string reason;

  friend bool operator==(const Orthogonality&, const Orthogonality&) = default;
};

/// Both maxima are always computed; `applicable` requires a parallel gradient.
Orthogonality orthogonality_checks(std::span<const Sample> samples, const Classification& c);

/// |grad f| cos(theta) (V_1 + H_1 V_3 + ... + H_{n-2} V_n) at one sample.
std::vector<double> helix_axis(const Sample& sample, double cos_theta);

/// <grad f, V_n> (H*_{n-2} V_1 + ... + H*_1 V_{n-2} + V_n) at one sample.
std::vector<double> slant_axis(const Sample& sample);

/// Below this |theta| the tangent-side theorems are reported as out of scope.
inline constexpr double kThetaScopeLimit = 1e-6;

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view text);

struct VerdictEntry {
  Verdict verdict = Verdict::not_applicable;
  std::string reason;

  friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

struct Verdicts {
  VerdictEntry thm31, thm32, thm33, cor31;
  VerdictEntry thm41, thm42, thm43, cor41;

  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct Verification {
  Classification classification;
  TheoremResiduals residuals;
  HypothesisStatus helix_status;
  HypothesisStatus slant_status;
  Orthogonality orthogonality;
  Verdicts verdicts;
  double tolerance = 0.0;
  bool theta_outside_scope = false;
};

/// PASS <=> hypotheses met and residual <= tol; FAIL <=> hypotheses met and
/// residual > tol; NOT-APPLICABLE otherwise.
Verdicts make_verdicts(const TheoremResiduals& r, const HypothesisStatus& helix, const HypothesisStatus& slant,
                       double tol, double tol_frame);

/// Classification, residuals and verdicts over precomputed samples.
Verification verify(std::span<const Sample> samples, const CurveSpec& spec, std::optional<double> tol = {});

Verification verify(const CurveSpec& spec, std::optional<double> tol = {});

}  // namespace fhelix
