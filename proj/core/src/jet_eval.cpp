#include "fhelix/jet_eval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fhelix {

int default_jet_order(int dimension) { return dimension + std::max(0, dimension - 3) + 1; }

Jet eval_jet(const Expr& expr, double s, int order) {
  const Jet var = Jet::variable(s, order);
  return evaluate_with<Jet>(
      expr,
      [&](const auto& leaf) -> Jet {
        if constexpr (std::is_same_v<std::decay_t<decltype(leaf)>, CoordNode>) {
          throw Error(ErrorCode::wrong_symbol_kind, "coordinate in a curve expression");
        } else {
          return var;
        }
      },
      [&](double c) { return Jet::constant(c, order); });
}

std::vector<Jet> eval_curve_jet(const CurveSpec& spec, double s, int order) {
  if (order < 1) throw JetError(ErrorCode::insufficient_order, "curve jets need order >= 1");
  const double slack = 1e-12 * std::max({1.0, std::abs(spec.s_min), std::abs(spec.s_max)});
  if (!(s >= spec.s_min - slack && s <= spec.s_max + slack)) {
    throw Error(ErrorCode::invalid_value, "s = " + std::to_string(s) + " outside s_range");
  }
  std::vector<Jet> out;
  out.reserve(spec.components.size());
  for (const auto& c : spec.components) out.push_back(check_finite(eval_jet(c, s, order)));
  return out;
}

FieldJet eval_field_jet(const Expr& field, int dimension, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(dimension)) {
    throw Error(ErrorCode::dimension_mismatch, "field point has wrong dimension");
  }
  for (double x : point) {
    if (!std::isfinite(x)) throw Error(ErrorCode::invalid_value, "field point is not finite");
  }
  return evaluate_with<FieldJet>(
      field,
      [&](const auto& leaf) -> FieldJet {
        if constexpr (std::is_same_v<std::decay_t<decltype(leaf)>, CoordNode>) {
          const int i = leaf.index - 1;
          return FieldJet::coordinate(point[static_cast<std::size_t>(i)], i, dimension);
        } else {
          throw Error(ErrorCode::wrong_symbol_kind, "parameter s in a field expression");
        }
      },
      [&](double c) { return FieldJet::constant(c, dimension); });
}

FieldJet eval_field_jet(const CurveSpec& spec, std::span<const double> point) {
  return eval_field_jet(spec.field, spec.dimension, point);
}

}  // namespace fhelix
