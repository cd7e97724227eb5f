#pragma once

#include <span>
#include <vector>

#include "fhelix/jet.hpp"

namespace fhelix {

using JetVector = std::vector<Jet>;

/// Frenet apparatus of a curve at one parameter value, carried as jets in s.
struct FrenetData {
  double s = 0.0;
  Jet speed;                       // |alpha'|
  std::vector<JetVector> frame;    // frame[i] = V_{i+1}, each a vector of n component jets
  std::vector<Jet> curvatures;     // curvatures[i] = k_{i+1}, all values > 0

  int dimension() const noexcept { return static_cast<int>(frame.size()); }

  /// Value-level unit vector V_i (1-based i).
  std::vector<double> vector(int i) const;
  double curvature(int i) const { return curvatures.at(static_cast<std::size_t>(i - 1)).value(); }

  /// max |<V_i, V_j> - delta_ij| over all pairs.
  double orthonormality_defect() const;

  /// max over i and components of |V_i'/|alpha'| + k_{i-1} V_{i-1} - k_i V_{i+1}|, V_0 = V_{n+1} = 0.
  double frenet_residual() const;
};

/// Orthonormal frame by modified Gram-Schmidt (one reorthogonalization pass) on
/// alpha', alpha'', ..., alpha^(n), with k_i = <V_i', V_{i+1}> / |alpha'|.
///
/// Requires curve jets of order >= n+1. Throws CurveError(not_regular) when
/// |alpha'| <= tol_frame and CurveError(degenerate_curve, i) when alpha^(i) lies
/// within tol_frame (relative to the derivative magnitudes) of span{alpha', ..., alpha^(i-1)}.
FrenetData frenet_apparatus(std::span<const Jet> curve, double tol_frame, double s = 0.0);

/// V_1[g] = g' / |alpha'|, one order lower than g.
Jet directional_derivative(const Jet& g, const Jet& speed);

Jet dot(std::span<const Jet> a, std::span<const Jet> b);

}  // namespace fhelix
