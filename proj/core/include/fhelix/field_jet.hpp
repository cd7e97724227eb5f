#pragma once

// Second-order forward-mode duals in n variables: value, gradient and Hessian
// of a scalar field, propagated exactly through the expression tree.

#include <cstddef>
#include <span>
#include <vector>

#include "fhelix/errors.hpp"

namespace fhelix {

class FieldJet {
 public:
  FieldJet() = default;

  static FieldJet constant(double value, int dimension);
  /// The coordinate function x_{index+1} at `value` (index is 0-based).
  static FieldJet coordinate(double value, int index, int dimension);

  int dimension() const noexcept { return static_cast<int>(gradient_.size()); }
  double value() const noexcept { return value_; }
  std::span<const double> gradient() const noexcept { return gradient_; }
  /// Row-major n x n.
  std::span<const double> hessian() const noexcept { return hessian_; }
  double hessian(int i, int j) const {
    return hessian_[static_cast<std::size_t>(i) * gradient_.size() + static_cast<std::size_t>(j)];
  }

  double gradient_norm() const;
  double hessian_frobenius_norm() const;

  /// Applies g = phi(f) given phi(v), phi'(v), phi''(v) at v = value().
  FieldJet chain(double phi, double dphi, double ddphi) const;

  friend FieldJet operator+(const FieldJet& a, const FieldJet& b);
  friend FieldJet operator-(const FieldJet& a, const FieldJet& b);
  friend FieldJet operator*(const FieldJet& a, const FieldJet& b);
  friend FieldJet operator/(const FieldJet& a, const FieldJet& b);
  friend FieldJet operator-(const FieldJet& a);

 private:
  double value_ = 0.0;
  std::vector<double> gradient_;
  std::vector<double> hessian_;
};

FieldJet sin(const FieldJet& a);
FieldJet cos(const FieldJet& a);
FieldJet exp(const FieldJet& a);
FieldJet log(const FieldJet& a);
FieldJet sqrt(const FieldJet& a);
FieldJet power(const FieldJet& a, double p);

}  // namespace fhelix
