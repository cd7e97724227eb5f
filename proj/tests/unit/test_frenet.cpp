#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fhelix/catalog.hpp"
#include "fhelix/classify.hpp"
#include "fhelix/jet_eval.hpp"
#include "support/curve_factory.hpp"
#include "support/fd_oracle.hpp"

using namespace fhelix;

TEST(Frenet, Helix345ClosedForm) {
  const auto samples = sample_along_curve(catalog_spec("helix345_fz"));
  ASSERT_EQ(samples.size(), 512u);
  for (const auto& smp : samples) {
    EXPECT_NEAR(smp.frenet.curvature(1), 3.0 / 25.0, 1e-12);
    EXPECT_NEAR(smp.frenet.curvature(2), 4.0 / 25.0, 1e-12);
    EXPECT_NEAR(smp.frenet.speed.value(), 1.0, 1e-14);
  }
}

TEST(Frenet, ExampleCurveClosedForm) {
  for (const auto& smp : sample_along_curve(catalog_spec("paper_3_1"))) {
    EXPECT_NEAR(smp.frenet.curvature(1), 0.5, 1e-12);
    EXPECT_NEAR(smp.frenet.curvature(2), 0.5, 1e-12);
  }
}

TEST(Frenet, PlanarCircleIsDegenerate) {
  try {
    sample_along_curve(catalog_spec("circle_in_r3"));
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_curve);
    EXPECT_EQ(e.index(), 3);
    EXPECT_EQ(e.s(), 0.0);
    EXPECT_NE(std::string(e.what()).find("DegenerateCurve(3)"), std::string::npos);
  }
}

TEST(Frenet, NotRegular) {
  const CurveSpec spec = make_curve_spec({"s^2", "s^3", "s^4"}, "x1", -1, 1);
  try {
    sample_at(spec, 0.0);
    FAIL();
  } catch (const CurveError& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_regular);
  }
}

TEST(Frenet, InsufficientOrder) {
  const CurveSpec spec = catalog_spec("helix345_fz");
  const auto jets = eval_curve_jet(spec, 1.0, 3);
  try {
    frenet_apparatus(jets, 1e-10, 1.0);
    FAIL();
  } catch (const JetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::insufficient_order);
  }
}

TEST(Frenet, DirectionalDerivative) {
  const Jet g = eval_jet(parse_expression("s^2", ExprKind::curve, 1), 1.0, 3);
  const Jet d = directional_derivative(g, Jet::constant(1.0, 3));
  EXPECT_EQ(d.order(), 2);
  EXPECT_DOUBLE_EQ(d.value(), 2.0);
  const Jet z = directional_derivative(Jet::constant(7.0, 3), Jet::constant(3.0, 3));
  for (double c : z.coeffs()) EXPECT_EQ(c, 0.0);
  const Jet sn = eval_jet(parse_expression("sin(s)", ExprKind::curve, 1), 0.0, 3);
  EXPECT_DOUBLE_EQ(directional_derivative(sn, Jet::constant(2.0, 3)).value(), 0.5);
}

TEST(Frenet, FrameInvariantsOnCatalog) {
  for (const auto& entry : catalog()) {
    if (entry.name == "circle_in_r3") continue;
    for (const auto& smp : sample_along_curve(parse_curve_spec(entry.document))) {
      ASSERT_LE(smp.frenet.orthonormality_defect(), 1e-10) << entry.name << " s=" << smp.row.s;
      ASSERT_LE(smp.frenet.frenet_residual(), 1e-8) << entry.name << " s=" << smp.row.s;
      for (const auto& k : smp.frenet.curvatures) ASSERT_GT(k.value(), 0.0);
    }
  }
}

TEST(Frenet, ReparametrizationInvariance) {
  const CurveSpec unit = catalog_spec("helix345_fz");
  const CurveSpec fast = make_curve_spec({"3*cos(2*s/5)", "3*sin(2*s/5)", "8*s/5"}, "x3", 0, 15.708);
  for (int i = 0; i <= 50; ++i) {
    const double t = 15.0 * i / 50.0;
    const Sample a = sample_at(unit, 2.0 * t);
    const Sample b = sample_at(fast, t);
    EXPECT_NEAR(b.frenet.speed.value(), 2.0, 1e-13);
    for (int k = 1; k <= 2; ++k) EXPECT_NEAR(a.frenet.curvature(k), b.frenet.curvature(k), 1e-9);
    EXPECT_NEAR(a.harmonic.h(1), b.harmonic.h(1), 1e-9);
  }
}

TEST(Frenet, ClassicalFormulasOnRandomCubics) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  while (checked < 200) {
    double a[3][4];
    std::vector<std::string> comps;
    for (auto& row : a) {
      for (double& c : row) c = u(rng);
      comps.push_back(testcurves::num(row[0]) + " + (" + testcurves::num(row[1]) + ")*s + (" + testcurves::num(row[2]) +
                      ")*s^2 + (" + testcurves::num(row[3]) + ")*s^3");
    }
    const double s = u(rng);
    double d1[3], d2[3], d3[3];
    for (int i = 0; i < 3; ++i) {
      d1[i] = a[i][1] + 2 * a[i][2] * s + 3 * a[i][3] * s * s;
      d2[i] = 2 * a[i][2] + 6 * a[i][3] * s;
      d3[i] = 6 * a[i][3];
    }
    const double c[3] = {d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2], d1[0] * d2[1] - d1[1] * d2[0]};
    const double cn2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    const double v = std::sqrt(d1[0] * d1[0] + d1[1] * d1[1] + d1[2] * d1[2]);
    const double det = c[0] * d3[0] + c[1] * d3[1] + c[2] * d3[2];
    const double kappa = std::sqrt(cn2) / (v * v * v);
    const double tau = det / cn2;
    if (v < 0.2 || std::sqrt(cn2) < 0.2 || std::abs(tau) < 1e-3) continue;  // near-degenerate draw
    const CurveSpec spec = make_curve_spec(comps, "x1", -2, 2);
    const Sample smp = sample_at(spec, s);
    EXPECT_NEAR(smp.frenet.curvature(1), kappa, 1e-9 * std::max(1.0, kappa));
    // all curvatures positive by convention: k2 = |tau|
    EXPECT_NEAR(smp.frenet.curvature(2), std::abs(tau), 1e-9 * std::max(1.0, std::abs(tau)));
    ++checked;
  }
}

TEST(Frenet, AgreesWithFiniteDifferenceOracle) {
  for (const char* name : {"paper_3_1", "helix345_fz", "wcurve_r4", "helix_r4", "slant_r4", "nonhelix_parabolic"}) {
    const CurveSpec spec = catalog_spec(name);
    for (int i = 0; i <= 8; ++i) {
      const double s = spec.s_min + (spec.s_max - spec.s_min) * (0.05 + 0.9 * i / 8.0);
      const Sample smp = sample_at(spec, s);
      const auto fd = oracle::fd_frenet(spec, s);
      for (int k = 1; k < spec.dimension; ++k) {
        EXPECT_NEAR(smp.frenet.curvature(k), static_cast<double>(fd.k[static_cast<std::size_t>(k - 1)]), 1e-6)
            << name << " s=" << s << " k" << k;
      }
      for (int v = 1; v <= spec.dimension; ++v) {
        const auto V = smp.frenet.vector(v);
        for (std::size_t c = 0; c < V.size(); ++c) {
          EXPECT_NEAR(V[c], static_cast<double>(fd.frame[static_cast<std::size_t>(v - 1)][c]), 1e-6) << name;
        }
      }
    }
  }
}
