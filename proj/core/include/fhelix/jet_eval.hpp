#pragma once

#include <span>
#include <vector>

#include "fhelix/curve_spec.hpp"
#include "fhelix/field_jet.hpp"
#include "fhelix/jet.hpp"

namespace fhelix {

/// Jet order used along the curve: K = n + max(0, n-3) + 1.
///
/// The frame needs alpha^(1..n), so V_n carries K-n orders and k_{n-1} as many.
/// Each tangent/normal harmonic-curvature level consumes one more derivative up
/// to index n-2, and the derivative identities need one derivative of the last
/// level, which leaves exactly order 1 on H_{n-2} and H*_{n-2}.
int default_jet_order(int dimension);

/// Taylor jets of every curve component at parameter s.
std::vector<Jet> eval_curve_jet(const CurveSpec& spec, double s, int order);

/// Value, gradient and Hessian of the spec's field at `point`.
FieldJet eval_field_jet(const CurveSpec& spec, std::span<const double> point);

/// Same for an arbitrary field expression in `dimension` coordinates.
FieldJet eval_field_jet(const Expr& field, int dimension, std::span<const double> point);

/// Jets of a single expression in s.
Jet eval_jet(const Expr& expr, double s, int order);

}  // namespace fhelix
