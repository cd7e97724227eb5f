#pragma once

// Quad-precision finite-difference oracles. Nothing here touches the jet engine:
// expressions are evaluated pointwise in float128 and differenced.

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/float128.hpp>

#include "fhelix/curve_spec.hpp"
#include "fhelix/expr.hpp"

namespace oracle {

using quad = boost::multiprecision::float128;

inline quad eval_curve(const fhelix::Expr& e, quad s) {
  return fhelix::evaluate_as<quad>(e, s, std::span<const quad>{});
}

inline quad eval_field(const fhelix::Expr& e, std::span<const quad> x) {
  return fhelix::evaluate_as<quad>(e, quad(0), x);
}

/// g^(j)(s) for j = 0..4 by central differences at h and h/2, Richardson-combined
/// as (4 D(h/2) - D(h)) / 3. Stencil: s, s +- h/2, s +- h, s +- 2h.
inline std::array<quad, 5> derivatives(const std::function<quad(quad)>& g, quad s, quad h = quad(1e-5)) {
  const quad f0 = g(s);
  auto d = [&](quad k, quad fm2, quad fm1, quad fp1, quad fp2) {
    return std::array<quad, 4>{
        (fp1 - fm1) / (2 * k),
        (fp1 - 2 * f0 + fm1) / (k * k),
        (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * k * k * k),
        (fp2 - 4 * fp1 + 6 * f0 - 4 * fm1 + fm2) / (k * k * k * k),
    };
  };
  const quad a = g(s - h / 2), b = g(s + h / 2), c = g(s - h), e = g(s + h), m = g(s - 2 * h), p = g(s + 2 * h);
  const auto coarse = d(h, m, c, e, p);
  const auto fine = d(h / 2, c, a, b, e);
  std::array<quad, 5> out{f0, 0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(j) + 1] = (4 * fine[static_cast<std::size_t>(j)] - coarse[static_cast<std::size_t>(j)]) / 3;
  return out;
}

inline std::array<quad, 5> curve_derivatives(const fhelix::Expr& e, double s) {
  return derivatives([&](quad t) { return eval_curve(e, t); }, quad(s));
}

/// Value, gradient and Hessian of a field by central differences in each coordinate.
struct FieldDerivs {
  quad value;
  std::vector<quad> grad;
  std::vector<quad> hess;  // row major
};

inline FieldDerivs field_derivatives(const fhelix::Expr& f, std::span<const double> point, quad h = quad(1e-5)) {
  const std::size_t n = point.size();
  std::vector<quad> x(point.begin(), point.end());
  FieldDerivs out;
  out.value = eval_field(f, x);
  out.grad.resize(n);
  out.hess.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto along = [&](quad t) {
      auto y = x;
      y[i] += t;
      return eval_field(f, y);
    };
    const auto d = derivatives(along, quad(0), h);
    out.grad[i] = d[1];
    out.hess[i * n + i] = d[2];
    for (std::size_t j = 0; j < i; ++j) {
      // mixed partial: derivative along e_j of the i-th partial
      auto partial_i = [&](quad t) {
        auto y = x;
        y[j] += t;
        auto inner = [&](quad u) {
          auto z = y;
          z[i] += u;
          return eval_field(f, z);
        };
        return derivatives(inner, quad(0), quad(1e-6))[1];
      };
      const quad m = derivatives(partial_i, quad(0), quad(1e-4))[1];
      out.hess[i * n + j] = out.hess[j * n + i] = m;
    }
  }
  return out;
}

/// Brute-force Frenet apparatus: finite-difference derivative vectors, classical
/// Gram-Schmidt in quad precision, k_i = |u_{i+1}| / (|u_i| |alpha'|).
struct FdFrenet {
  quad speed;
  std::vector<std::vector<quad>> frame;
  std::vector<quad> k;
};

inline FdFrenet fd_frenet(const fhelix::CurveSpec& spec, double s) {
  const auto n = static_cast<std::size_t>(spec.dimension);
  std::vector<std::vector<quad>> d(n, std::vector<quad>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto dc = curve_derivatives(spec.components[c], s);
    for (std::size_t j = 0; j < n; ++j) d[j][c] = dc[j + 1];
  }
  auto ip = [](const std::vector<quad>& a, const std::vector<quad>& b) {
    quad acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  };
  FdFrenet out;
  std::vector<quad> norms;
  for (std::size_t j = 0; j < n; ++j) {
    auto u = d[j];
    for (const auto& e : out.frame) {
      const quad p = ip(d[j], e);
      for (std::size_t c = 0; c < n; ++c) u[c] -= p * e[c];
    }
    const quad r = sqrt(ip(u, u));
    norms.push_back(r);
    for (auto& x : u) x /= r;
    out.frame.push_back(u);
  }
  out.speed = norms[0];
  for (std::size_t i = 0; i + 1 < n; ++i) out.k.push_back(norms[i + 1] / (norms[i] * out.speed));
  return out;
}

/// H_1, H_2 and H*_1, H*_2 in R^4 from the brute-force frame, with the one
/// derivative of H_1 (resp. H*_1) taken by an outer Richardson difference.
struct FdHarmonic4 {
  quad H1, H2, Hs1, Hs2;
};

inline FdHarmonic4 fd_harmonic_r4(const fhelix::CurveSpec& spec, double s, double outer = 1e-3) {
  const auto fr = fd_frenet(spec, s);
  auto H1 = [&](quad t) {
    const auto f = fd_frenet(spec, static_cast<double>(t));
    return f.k[0] / f.k[1];
  };
  auto Hs1 = [&](quad t) {
    const auto f = fd_frenet(spec, static_cast<double>(t));
    return f.k[2] / f.k[1];
  };
  const quad dH1 = derivatives(H1, quad(s), quad(outer))[1];
  const quad dHs1 = derivatives(Hs1, quad(s), quad(outer))[1];
  FdHarmonic4 out;
  out.H1 = fr.k[0] / fr.k[1];
  out.H2 = dH1 / fr.speed / fr.k[2];
  out.Hs1 = fr.k[2] / fr.k[1];
  out.Hs2 = -dHs1 / fr.speed / fr.k[0];
  return out;
}

}  // namespace oracle
