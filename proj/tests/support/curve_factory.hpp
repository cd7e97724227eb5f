#pragma once

// Curves with known helix / slant-helix structure, given as DSL text.

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "trig_poly.hpp"

namespace testcurves {

using Matrix = std::vector<std::vector<double>>;

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

/// (a cos(p s), a sin(p s), b p s): circular helix with axis e3.
inline std::vector<std::string> circular_helix(double a, double b, double p) {
  return {num(a) + "*cos(" + num(p) + "*s)", num(a) + "*sin(" + num(p) + "*s)", num(b * p) + "*s"};
}

/// (a cos(p s), a sin(p s), b cos(q s), b sin(q s)): W-curve in R^4.
inline std::vector<std::string> wcurve_r4(double a, double p, double b, double q) {
  return {num(a) + "*cos(" + num(p) + "*s)", num(a) + "*sin(" + num(p) + "*s)", num(b) + "*cos(" + num(q) + "*s)",
          num(b) + "*sin(" + num(q) + "*s)"};
}

/// Haar-ish random rotation: Gram-Schmidt on a Gaussian matrix, rows orthonormal.
inline Matrix random_rotation(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix q;
  while (static_cast<int>(q.size()) < n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = g(rng);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : q) {
        double p = 0;
        for (int i = 0; i < n; ++i) p += v[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= p * e[static_cast<std::size_t>(i)];
      }
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-3) continue;
    for (auto& x : v) x /= norm;
    q.push_back(v);
  }
  return q;
}

/// Components of Q alpha + shift.
inline std::vector<std::string> transform(const Matrix& q, const std::vector<std::string>& curve,
                                          const std::vector<double>& shift = {}) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::string c = shift.empty() ? std::string() : "(" + num(shift[i]) + ")";
    for (std::size_t j = 0; j < curve.size(); ++j) {
      if (!c.empty()) c += " + ";
      c += "(" + num(q[i][j]) + ")*(" + curve[j] + ")";
    }
    out.push_back(c);
  }
  return out;
}

/// Linear field sum_i u_i x_i + c.
inline std::string linear_field(const std::vector<double>& u, double c = 0.0) {
  std::string f = "(" + num(c) + ")";
  for (std::size_t i = 0; i < u.size(); ++i) f += " + (" + num(u[i]) + ")*x" + std::to_string(i + 1);
  return f;
}

/// Q e_k (column k of Q).
inline std::vector<double> column(const Matrix& q, std::size_t k) {
  std::vector<double> c;
  for (const auto& row : q) c.push_back(row[k]);
  return c;
}

/// Unit spherical curve w(t) = (cos(at) cos(bt), cos(at) sin(bt), sin(at)).
inline std::array<TrigPoly, 3> spherical(double a, double b) {
  return {TrigPoly::cos_term(1, a) * TrigPoly::cos_term(1, b), TrigPoly::cos_term(1, a) * TrigPoly::sin_term(1, b),
          TrigPoly::sin_term(1, a)};
}

/// Unit-speed helix in R^4 with axis e4 and cos(theta) = cos(phi):
/// alpha = (sin(phi) * integral of w, cos(phi) * t).
inline std::vector<std::string> cylinder_helix_r4(double a, double b, double phi) {
  const auto w = spherical(a, b);
  std::vector<std::string> out;
  for (const auto& c : w) out.push_back((std::sin(phi) * c.integral()).to_string());
  out.push_back((TrigPoly::linear(std::cos(phi))).to_string());
  return out;
}

/// Curve whose V4 is parallel to the tangent of the matching cylinder helix:
/// alpha' = (cos(phi) w' x w'', -sin(phi) det(w, w', w'')). It is a V4-slant
/// helix with axis e4.
inline std::vector<std::string> slant_dual_r4(double a, double b, double phi) {
  const auto w = spherical(a, b);
  std::array<TrigPoly, 3> d1, d2;
  for (int i = 0; i < 3; ++i) {
    d1[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)].derivative();
    d2[static_cast<std::size_t>(i)] = d1[static_cast<std::size_t>(i)].derivative();
  }
  const std::array<TrigPoly, 3> cross{d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
                                      d1[0] * d2[1] - d1[1] * d2[0]};
  const TrigPoly det = w[0] * cross[0] + w[1] * cross[1] + w[2] * cross[2];
  std::vector<std::string> out;
  for (const auto& c : cross) out.push_back((std::cos(phi) * c).integral().to_string());
  out.push_back(((-std::sin(phi)) * det).integral().to_string());
  return out;
}

}  // namespace testcurves
