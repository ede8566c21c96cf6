#include "isotile/numcheck.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "isotile/errors.hpp"
#include "support/oracles.hpp"

namespace {

using namespace isotile;
using config::ConfigurationKind;
using geom::CurvedPolygon;
using geom::Vec2;
using oracle::kPi;
using oracle::kSqrt3;

CurvedPolygon reuleaux(double r) {
  const double d = r / kSqrt3;
  const std::vector<Vec2> v = {{d, 0}, {-0.5 * d, 0.5 * kSqrt3 * d}, {-0.5 * d, -0.5 * kSqrt3 * d}};
  return CurvedPolygon::from_vertices(v, std::vector<double>(3, kPi / 3));
}

CurvedPolygon curvilinear_square(double r) {
  const double a = r * std::sin(kPi / 12);
  const std::vector<Vec2> v = {{a, -a}, {a, a}, {-a, a}, {-a, -a}};
  return CurvedPolygon::from_vertices(v, std::vector<double>(4, kPi / 6));
}

/// Crossing-number test on a dense sampling of the boundary.
bool oracle_inside(const CurvedPolygon& p, Vec2 q) {
  std::vector<Vec2> ring;
  for (const auto& e : p.edges()) {
    for (int k = 0; k < 2000; ++k) ring.push_back(oracle::edge_point(e, k / 2000.0));
  }
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Vec2 a = ring[i], b = ring[j];
    if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

TEST(Polygonize, SingleChordPerArc) {
  const auto p = numcheck::polygonize(reuleaux(1.0), 1);
  ASSERT_EQ(p.size(), 3u);
  for (const auto& e : p.edges()) {
    EXPECT_TRUE(e.is_flat());
    EXPECT_NEAR(e.chord(), 1.0, 1e-15);
  }
  EXPECT_NEAR(geom::area(p), kSqrt3 / 4, 1e-15);
  EXPECT_THROW(numcheck::polygonize(reuleaux(1.0), 0), DomainError);
}

TEST(Polygonize, FlatPolygonUnchanged) {
  const auto hex = config::build_honeycomb().tiles[0].shape;
  for (const int n : {1, 7, 4096}) EXPECT_EQ(numcheck::polygonize(hex, n), hex);
}

TEST(Polygonize, VerticesLieOnArcs) {
  const auto p = curvilinear_square(1.3);
  const auto q = numcheck::polygonize(p, 16);
  ASSERT_EQ(q.size(), 64u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& arc = p[i];
    for (int k = 0; k < 16; ++k) {
      const Vec2 got = q[i * 16 + k].start;
      const Vec2 want = oracle::edge_point(arc, k / 16.0);
      EXPECT_NEAR(got.x, want.x, 1e-14);
      EXPECT_NEAR(got.y, want.y, 1e-14);
    }
  }
}

TEST(NumericAreaPerimeter, Examples) {
  const auto r = numcheck::numeric_area_perimeter(reuleaux(1.0), 4096);
  EXPECT_NEAR(r.area, (kPi - kSqrt3) / 2, 1e-6);
  EXPECT_NEAR(r.perimeter, kPi, 1e-5);
  EXPECT_NEAR(numcheck::numeric_area_perimeter(curvilinear_square(1.0), 4096).area, 0.3151468, 1e-6);
  const auto c39 = config::build_c39(0.3);
  EXPECT_NEAR(numcheck::numeric_area_perimeter(c39.tiles_of(2)[0]->shape, 4096).area, 0.7, 1e-6);
  EXPECT_THROW(numcheck::numeric_area_perimeter(reuleaux(1.0), 15), DomainError);
}

TEST(NumericAreaPerimeter, QuadraticConvergence) {
  for (const auto& p : {reuleaux(1.0), curvilinear_square(1.0),
                        config::build_c39(0.3).tiles_of(2)[0]->shape}) {
    const double exact_a = geom::area(p), exact_p = geom::perimeter(p);
    for (const int n : {16, 64, 256}) {
      const auto coarse = numcheck::numeric_area_perimeter(p, n);
      const auto fine = numcheck::numeric_area_perimeter(p, 2 * n);
      const double ra = (coarse.area - exact_a) / (fine.area - exact_a);
      const double rp = (coarse.perimeter - exact_p) / (fine.perimeter - exact_p);
      EXPECT_GE(ra, 3.5);
      EXPECT_LE(ra, 4.5);
      EXPECT_GE(rp, 3.5);
      EXPECT_LE(rp, 4.5);
    }
  }
}

TEST(Contains, AgreesWithDenseOracle) {
  oracle::Gen gen(77);
  for (const auto& p : {reuleaux(1.0), curvilinear_square(1.2),
                        config::build_c39(0.3).tiles_of(2)[0]->shape,
                        config::build_c48(0.3).tiles_of(2)[0]->shape}) {
    const auto box = geom::bounding_box(p).inflated(0.1);
    int checked = 0;
    while (checked < 400) {
      const Vec2 q{gen.uniform(box.lo.x, box.hi.x), gen.uniform(box.lo.y, box.hi.y)};
      // Dense sampling is accurate only away from the boundary.
      if (numcheck::boundary_distance(p, q) < 1e-3) continue;
      ++checked;
      EXPECT_EQ(numcheck::contains(p, q), oracle_inside(p, q)) << q.x << "," << q.y;
    }
  }
}

TEST(BoundaryDistance, KnownValues) {
  const auto p = reuleaux(1.0);
  // The centre of the Reuleaux triangle is 1 - 1/sqrt3 from each arc.
  EXPECT_NEAR(numcheck::boundary_distance(p, {0, 0}), 1 - 1 / kSqrt3, 1e-14);
  // Far along the axis through a corner, the corner itself is nearest.
  EXPECT_NEAR(numcheck::boundary_distance(p, {5, 0}), 5 - 1 / kSqrt3, 1e-14);
  const auto hex = config::build_honeycomb().tiles[0].shape;
  EXPECT_NEAR(numcheck::boundary_distance(hex, hex[0].start), 0.0, 1e-15);
}

TEST(Coverage, Examples) {
  for (const auto& t : {config::build_c66(0.5), config::build_c48(0.2), config::build_c39(0.7),
                        config::build_honeycomb()}) {
    const auto r = numcheck::coverage_test(t, 100000, 42);
    EXPECT_TRUE(r.pass) << config::to_string(t.kind) << ": " << r.detail;
    EXPECT_NEAR(r.expected, t.areas[0], 1e-12);
  }
  EXPECT_THROW(numcheck::coverage_test(config::build_c66(0.5), 9999, 1), DomainError);
}

TEST(Coverage, DeterministicGivenSeed) {
  const auto t = config::build_c48(0.2);
  const auto a = numcheck::coverage_test(t, 20000, 9);
  const auto b = numcheck::coverage_test(t, 20000, 9);
  const auto c = numcheck::coverage_test(t, 20000, 10);
  EXPECT_EQ(a.measured, b.measured);
  EXPECT_EQ(a.detail, b.detail);
  EXPECT_NE(a.measured, c.measured);
}

TEST(Coverage, DetectsGap) {
  auto t = config::build_c39(0.3);
  t.tiles.erase(t.tiles.begin());
  EXPECT_FALSE(numcheck::coverage_test(t, 20000, 42).pass);
}

TEST(Junction, ExamplesAndVertexTypes) {
  const auto h = numcheck::junction_audit(config::build_honeycomb());
  EXPECT_TRUE(h.pass) << h.detail;
  const auto c48 = numcheck::junction_audit(config::build_c48(0.2));
  EXPECT_TRUE(c48.pass) << c48.detail;
  EXPECT_NE(c48.detail.find("1-2-2"), std::string::npos);
  const auto c39 = numcheck::junction_audit(config::build_c39(0.3));
  EXPECT_TRUE(c39.pass) << c39.detail;
  EXPECT_NE(c39.detail.find("1-2-2"), std::string::npos);
  EXPECT_NE(c39.detail.find("2-2-2"), std::string::npos);
}

TEST(Junction, DetectsBentVertex) {
  auto t = config::build_c39(0.3);
  // Bending one interface breaks the 120 degree condition at its ends.
  auto& shape = t.tiles[0].shape;
  auto edges = shape.edges();
  edges[0].turn += 0.05;
  shape = CurvedPolygon(edges);
  EXPECT_FALSE(numcheck::junction_audit(t).pass);
}

TEST(PressureCurvature, Examples) {
  for (const auto& t : {config::build_c66(0.4), config::build_c39(0.3), config::build_c48(0.1),
                        config::build_c3312(0.04, 0.5)}) {
    const auto r = numcheck::pressure_curvature_audit(t);
    EXPECT_TRUE(r.pass) << config::to_string(t.kind) << ": " << r.detail;
  }
}

TEST(PressureCurvature, UnequalSplitIsNotStationary) {
  // Both triangles belong to one tile, so their arcs must share one curvature.
  EXPECT_TRUE(numcheck::pressure_curvature_audit(config::build_c3312(0.04, 0.5)).pass);
  EXPECT_FALSE(numcheck::pressure_curvature_audit(config::build_c3312(0.04, 0.3)).pass);
}

TEST(PressureCurvature, DetectsWrongPressure) {
  auto t = config::build_c39(0.3);
  t.pressures[0] *= 1.01;
  EXPECT_FALSE(numcheck::pressure_curvature_audit(t).pass);
}

TEST(Audits, PassForEveryBuilderAtAdmissibleX) {
  const std::vector<std::pair<ConfigurationKind, std::vector<double>>> cases = {
      {ConfigurationKind::C39, {0.01, 0.05, 0.3, 0.6, 0.8}},
      {ConfigurationKind::C48, {0.01, 0.1, 0.2, 0.3, 0.55}},
      {ConfigurationKind::C66, {0.17, 0.25, 0.4, 0.5, 0.8}},
      {ConfigurationKind::C3312, {0.01, 0.04, 0.06, 0.2, 0.3}}};
  for (const auto& [kind, xs] : cases) {
    for (const double x : xs) {
      const auto t = config::build(kind, x, 0.5);
      for (const auto& r : {numcheck::area_audit(t, 1 << 14), numcheck::perimeter_audit(t, 1 << 14),
                            numcheck::cost_audit(t), numcheck::turning_sum_audit(t),
                            numcheck::junction_audit(t), numcheck::pressure_curvature_audit(t),
                            numcheck::adjacency_audit(t)}) {
        EXPECT_TRUE(r.pass) << config::to_string(kind) << " x=" << x << " " << r.name << ": "
                            << r.detail;
        EXPECT_EQ(r.pass, std::abs(r.measured - r.expected) <= r.tolerance) << r.name;
      }
    }
  }
}

TEST(Audits, RunAllOrderAndHoneycomb) {
  const auto reports = numcheck::run_all(config::build_honeycomb(), 1 << 10, 10000, 42);
  std::vector<std::string> names;
  for (const auto& r : reports) {
    names.push_back(r.name);
    EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  }
  EXPECT_EQ(names, (std::vector<std::string>{"area", "perimeter", "cost", "turning_sum", "junction",
                                             "pressure_curvature", "adjacency", "coverage"}));
}

TEST(Audits, CostAuditCatchesWrongFamily) {
  auto t = config::build_c48(0.2);
  t.kind = ConfigurationKind::C39;
  EXPECT_FALSE(numcheck::cost_audit(t).pass);
}

}  // namespace
