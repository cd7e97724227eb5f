#include "fhelix/catalog.hpp"

#include <array>
#include <string>

namespace fhelix {

namespace {

constexpr std::array kEntries{
    CatalogEntry{"paper_3_1", "circular helix with the non-affine eikonal field x1^2 + x2 + x3^2",
                 "dimension = 3\n"
                 "curve = [\"cos(s/sqrt(2))\", \"s/sqrt(2)\", \"sin(s/sqrt(2))\"]\n"
                 "field = \"x1^2 + x2 + x3^2\"\n"
                 "s_range = [0, 12.566]\n"
                 "samples = 512\n"},
    CatalogEntry{"paper_3_1_linear", "same helix against the linear field x2 (axis along the helix axis)",
                 "dimension = 3\n"
                 "curve = [\"cos(s/sqrt(2))\", \"s/sqrt(2)\", \"sin(s/sqrt(2))\"]\n"
                 "field = \"x2\"\n"
                 "s_range = [0, 12.566]\n"
                 "samples = 512\n"},
    CatalogEntry{"helix345_fz", "unit-speed 3-4-5 circular helix with f = x3",
                 "dimension = 3\n"
                 "curve = [\"3*cos(s/5)\", \"3*sin(s/5)\", \"4*s/5\"]\n"
                 "field = \"x3\"\n"
                 "s_range = [0, 31.416]\n"
                 "samples = 512\n"},
    CatalogEntry{"wcurve_r4", "constant-curvature W-curve in R^4 with f = x4 (not a helix)",
                 "dimension = 4\n"
                 "curve = [\"cos(0.6*s)\", \"sin(0.6*s)\", \"cos(0.8*s)\", \"sin(0.8*s)\"]\n"
                 "field = \"x4\"\n"
                 "s_range = [0, 15.708]\n"
                 "samples = 512\n"},
    CatalogEntry{"helix_r4", "helix in R^4 over a spherical-curve cylinder, f = x4",
                 "dimension = 4\n"
                 "curve = [\"(cos(2*s) + 2)*sin(s)/5\", \"-2*cos(s)^3/5\", \"-3*cos(s)/5\", \"4*s/5\"]\n"
                 "field = \"x4\"\n"
                 "s_range = [0.1, 1.4]\n"
                 "samples = 512\n"},
    CatalogEntry{"slant_r4", "V4-slant helix in R^4 with f = x4",
                 "dimension = 4\n"
                 "curve = [\"-12*cos(s)^4/5\", \"-2*s/5 - 6*sin(2*s)/5 - 3*sin(4*s)/10\", "
                 "\"28*s/5 + 6*sin(2*s)/5\", "
                 "\"144*cos(s)^7/35 - 144*cos(s)^5/25 + 12*cos(s)^3/5 + 63*cos(s)/20 + cos(3*s)/4 - "
                 "9*cos(5*s)/100 - 9*cos(7*s)/140\"]\n"
                 "field = \"x4\"\n"
                 "s_range = [0.1, 1.4]\n"
                 "samples = 512\n"},
    CatalogEntry{"circle_in_r3", "planar circle in R^3 (degenerate: not of proper order 3)",
                 "dimension = 3\n"
                 "curve = [\"cos(s)\", \"sin(s)\", \"0\"]\n"
                 "field = \"x3\"\n"
                 "s_range = [0, 6.283]\n"
                 "samples = 512\n"},
    CatalogEntry{"nonhelix_parabolic", "curve (cos s, sin s, s^2) with f = x3 (not a helix)",
                 "dimension = 3\n"
                 "curve = [\"cos(s)\", \"sin(s)\", \"s^2\"]\n"
                 "field = \"x3\"\n"
                 "s_range = [0.5, 3]\n"
                 "samples = 512\n"},
};

}  // namespace

std::span<const CatalogEntry> catalog() { return kEntries; }

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : kEntries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

CurveSpec catalog_spec(std::string_view name) {
  const auto* e = find_catalog_entry(name);
  if (!e) throw Error(ErrorCode::invalid_value, "unknown catalog entry '" + std::string(name) + "'");
  return parse_curve_spec(e->document);
}

}  // namespace fhelix
