#pragma once

// Truncated Taylor series ("jets") in one variable.
//
// A jet of order K holds normalized coefficients c_j = g^(j)(s0) / j!, j = 0..K.
// Arithmetic is exact up to truncation: the result of every operation is the
// order-K truncation of the series of the composed function. When operands of
// different order meet, the result has the smaller order.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fhelix/errors.hpp"

namespace fhelix {

class Jet {
 public:
  /// The order-0 jet of 0.
  Jet() : c_(1, 0.0) {}

  explicit Jet(std::vector<double> coeffs);
  Jet(std::initializer_list<double> coeffs) : Jet(std::vector<double>(coeffs)) {}

  static Jet constant(double value, int order);
  /// Jet of the identity function s -> s expanded at s0.
  static Jet variable(double s0, int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  double value() const noexcept { return c_[0]; }
  double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  std::span<const double> coeffs() const noexcept { return c_; }

  /// The j-th derivative at the expansion point, j! * c_j.
  double derivative_value(int j) const;

  /// d/ds as a jet of order K-1. Throws insufficient_order on an order-0 jet.
  Jet derivative() const;

  /// Drops coefficients above `order` (order <= this->order()).
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator*=(double k);

  friend Jet operator-(Jet a);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  friend Jet operator+(Jet a, double k);
  friend Jet operator+(double k, Jet a) { return std::move(a) + k; }
  friend Jet operator-(Jet a, double k) { return std::move(a) + (-k); }
  friend Jet operator-(double k, const Jet& a) { return (-a) + k; }
  friend Jet operator*(Jet a, double k) { return a *= k; }
  friend Jet operator*(double k, Jet a) { return a *= k; }
  friend Jet operator/(Jet a, double k);
  friend Jet operator/(double k, const Jet& b) { return constant(k, b.order()) / b; }

 private:
  std::vector<double> c_;
};

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);

/// a^p for constant p. Integer p uses repeated products (any sign of a);
/// non-integer p requires a.value() > 0.
Jet power(const Jet& a, double p);

/// sin and cos of the same argument computed together.
struct SinCos {
  Jet sin;
  Jet cos;
};
SinCos sincos(const Jet& a);

/// Throws overflow if any coefficient is not finite.
const Jet& check_finite(const Jet& a);

}  // namespace fhelix
