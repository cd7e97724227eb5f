#pragma once

#include <span>
#include <vector>

#include "fhelix/curve_spec.hpp"
#include "fhelix/frenet.hpp"
#include "fhelix/harmonic.hpp"

namespace fhelix {

/// Field quantities along the curve at one sample.
struct SampleRow {
  double s = 0.0;
  std::vector<double> point;  // alpha(s)
  std::vector<double> grad;   // grad f at alpha(s)
  double grad_norm = 0.0;
  double ip_tangent = 0.0;    // <grad f, V_1>
  double ip_last = 0.0;       // <grad f, V_n>
  double hessian_norm = 0.0;  // Frobenius norm of the field Hessian at alpha(s)
};

struct Sample {
  SampleRow row;
  FrenetData frenet;
  HarmonicData harmonic;
};

/// `spec.samples` equally spaced parameters from s_min to s_max inclusive.
std::vector<double> sample_grid(const CurveSpec& spec);

/// Evaluates jets, Frenet apparatus and harmonic curvatures at every grid point.
/// CurveError carries the offending s; jet errors are rethrown with s in the message.
std::vector<Sample> sample_along_curve(const CurveSpec& spec);

/// One sample at an arbitrary parameter.
Sample sample_at(const CurveSpec& spec, double s);

struct Constancy {
  bool is_const = false;
  double spread = 0.0;  // max - min
  double mean = 0.0;
};

/// is_const <=> spread <= tol * (1 + |mean|). Throws empty_input on an empty list.
Constancy constancy(std::span<const double> values, double tol);

struct Spreads {
  double grad_norm = 0.0;
  double ip_tangent = 0.0;
  double ip_last = 0.0;

  bool operator==(const Spreads&) const = default;
};

struct Classification {
  bool eikonal = false;            // |grad f| constant along the curve
  bool helix = false;              // eikonal and <grad f, V_1> non-zero constant
  bool slant = false;              // eikonal and <grad f, V_n> non-zero constant
  bool parallel_gradient = false;  // max Hessian norm <= tol_const, i.e. grad f constant
  Spreads spreads;
  double theta = 0.0;  // arccos(mean ip_tangent / mean grad_norm); NaN if grad f vanishes
  double mean_grad_norm = 0.0;
  double mean_ip_tangent = 0.0;
  double mean_ip_last = 0.0;
  double max_hessian_norm = 0.0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(std::span<const Sample> samples, double tol_const);
Classification classify(const CurveSpec& spec);

}  // namespace fhelix
