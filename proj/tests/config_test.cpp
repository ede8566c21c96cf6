#include "isotile/config.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "isotile/errors.hpp"
#include "isotile/geom.hpp"
#include "isotile/lattice.hpp"
#include "isotile/profile.hpp"
#include "support/oracles.hpp"

namespace {

using namespace isotile;
using config::ConfigurationKind;
using config::TilingSpec;
using oracle::kPi;
using oracle::kSqrt3;

/// Total interface length per cell as half the summed tile perimeters,
/// measured by fine chord sums.
double oracle_interface(const TilingSpec& t) {
  double total = 0.0;
  for (const auto& tile : t.tiles) total += oracle::chord_length(tile.shape.edges(), 4000);
  return 0.5 * total;
}

double oracle_area(const TilingSpec& t, int generator) {
  double total = 0.0;
  for (const auto* tile : t.tiles_of(generator)) total += oracle::green_area(tile->shape.edges());
  return total;
}

struct EdgeCount {
  int flat = 0;
  int curved = 0;
};

EdgeCount count_edges(const geom::CurvedPolygon& p) {
  EdgeCount c;
  for (const auto& e : p.edges()) (e.is_flat() ? c.flat : c.curved)++;
  return c;
}

TEST(Kind, NamesRoundTrip) {
  for (const auto k : {ConfigurationKind::Honeycomb, ConfigurationKind::C66, ConfigurationKind::C48,
                       ConfigurationKind::C39, ConfigurationKind::C3312}) {
    EXPECT_EQ(config::parse_kind(config::to_string(k)), k);
  }
  EXPECT_EQ(config::parse_kind("c48"), ConfigurationKind::C48);
  EXPECT_FALSE(config::parse_kind("c47").has_value());
  EXPECT_TRUE(config::is_stationary_only(ConfigurationKind::C3312));
  EXPECT_FALSE(config::is_stationary_only(ConfigurationKind::C39));
}

TEST(Honeycomb, UnitAreaHexagon) {
  const auto t = config::build_honeycomb();
  ASSERT_EQ(t.tiles.size(), 1u);
  EXPECT_NEAR(t.params.at("l"), 0.6204032, 1e-7);
  EXPECT_NEAR(oracle::green_area(t.tiles[0].shape.edges()), 1.0, 1e-14);
  EXPECT_NEAR(config::interface_length(t), std::pow(12.0, 0.25), 1e-14);
  EXPECT_NEAR(config::interface_length(t), 1.8612097, 1e-7);
  EXPECT_NEAR(oracle_interface(t), config::interface_length(t), 1e-12);
}

TEST(C66, HalfIsTwoRegularHexagons) {
  const auto t = config::build_c66(0.5);
  EXPECT_NEAR(t.params.at("s"), t.params.at("a"), 1e-15);
  EXPECT_NEAR(t.params.at("t"), t.params.at("a"), 1e-15);
  EXPECT_NEAR(config::interface_length(t), 2.6321480, 1e-7);
  EXPECT_NEAR(config::interface_length(t), 2 * std::pow(3.0, 0.25), 1e-14);
}

TEST(C66, CostIndependentOfX) {
  oracle::Gen gen(1);
  for (int i = 0; i < 20; ++i) {
    const double x = gen.uniform(1.0 / 6 + 1e-6, 5.0 / 6 - 1e-6);
    EXPECT_NEAR(config::interface_length(config::build_c66(x)), 2 * std::pow(3.0, 0.25), 1e-12);
  }
}

TEST(C66, EdgeVanishesAtLowerBound) {
  const auto t = config::build_c66(1.0 / 6 + 1e-9);
  EXPECT_LT(t.params.at("s"), 1e-7);
  EXPECT_THROW(config::build_c66(1.0 / 6), InadmissibleAreaError);
  EXPECT_THROW(config::build_c66(0.9), InadmissibleAreaError);
}

TEST(C39, ExampleRadius) {
  const auto t = config::build_c39(0.3);
  EXPECT_NEAR(t.params.at("r"), 0.6524272, 1e-5);
  // r from inverting the Reuleaux area (pi - sqrt3)/2 r^2 = x.
  EXPECT_NEAR(t.params.at("r"), std::sqrt(0.6 / (kPi - kSqrt3)), 1e-15);
  EXPECT_NEAR(config::interface_length(t), 2.7808, 1e-4);
  EXPECT_NEAR(oracle_interface(t), config::interface_length(t), 1e-8);
}

TEST(C39, LimitsOfAdmissibleRange) {
  const double hi = kPi / kSqrt3 - 1;
  EXPECT_NEAR(config::admissible_range(ConfigurationKind::C39).hi, 0.8138, 1e-4);
  const auto t = config::build_c39(hi - 1e-9);
  EXPECT_NEAR(t.params.at("r") / kSqrt3, t.params.at("l"), 1e-8);
  EXPECT_THROW(config::build_c39(hi), InadmissibleAreaError);
  EXPECT_THROW(config::build_c39(0.0), InadmissibleAreaError);
  EXPECT_NEAR(config::interface_length(config::build_c39(1e-14)), std::pow(12.0, 0.25), 1e-6);
}

TEST(C48, ExampleCost) {
  const auto t = config::build_c48(0.2);
  EXPECT_NEAR(config::interface_length(t), 2.5021, 1e-4);
  EXPECT_NEAR(oracle_interface(t), config::interface_length(t), 1e-8);
  const auto& c = profile::constants();
  EXPECT_NEAR(config::interface_length(config::build_c48(c.x2)), c.q3, 1e-12);
}

TEST(C48, CurvilinearSquareAreaCarriesFactorFour) {
  // Build at the x whose square has unit radius and compare with the area
  // integral of the constructed tile.
  const double k = 1 - kSqrt3 + kPi / 3;
  const auto t = config::build_c48(k);
  EXPECT_NEAR(t.params.at("r"), 1.0, 1e-14);
  const double a = t.params.at("a");
  EXPECT_NEAR(a, std::sin(kPi / 12), 1e-15);
  const double green = oracle::green_area(t.tiles_of(1)[0]->shape.edges());
  EXPECT_NEAR(green, 0.3151468, 1e-7);
  EXPECT_NEAR(green, 4 * a * a * (2 + kSqrt3) * k, 1e-12);
  EXPECT_GT(std::abs(green - a * a * (2 + kSqrt3) * k), 0.2);
}

TEST(C48, AdmissibleBoundFromGeometry) {
  const double hi = config::c48_max_area();
  EXPECT_NEAR(hi, 0.5881, 1e-3);
  // The flat edges shrink to nothing as x approaches the bound.
  const auto t = config::build_c48(hi * (1 - 1e-9));
  double shortest = INFINITY;
  for (const auto& e : t.tiles_of(2)[0]->shape.edges()) {
    if (e.is_flat()) shortest = std::min(shortest, e.chord());
  }
  EXPECT_LT(shortest, 1e-4);
  EXPECT_THROW(config::build_c48(hi), InadmissibleAreaError);
}

TEST(C3312, SplitEndpointsReduceToC39) {
  for (const double x : {0.01, 0.04, 0.2}) {
    const auto c39 = config::build_c39(x);
    for (const double s : {0.0, 1.0}) {
      const auto t = config::build_c3312(x, s);
      EXPECT_EQ(t.tiles.size(), c39.tiles.size());
      EXPECT_NEAR(config::interface_length(t), config::interface_length(c39), 1e-12);
    }
  }
}

TEST(C3312, SymmetricSplitExcess) {
  const auto& c = profile::constants();
  for (const double x : {0.01, 0.04, 0.06, 0.2}) {
    const double excess =
        config::interface_length(config::build_c3312(x, 0.5)) -
        config::interface_length(config::build_c39(x));
    EXPECT_NEAR(excess, c.m1 * std::sqrt(x) * (std::sqrt(2.0) - 1), 1e-10);
    EXPECT_NEAR(config::interface_length(config::build_c3312(x, 0.5)), c.q1 + c.m1 * std::sqrt(2 * x), 1e-12);
  }
}

TEST(C3312, InteriorSplitsCostMore) {
  oracle::Gen gen(4);
  const double hi = config::admissible_range(ConfigurationKind::C3312).hi;
  for (int i = 0; i < 20; ++i) {
    const double x = gen.uniform(1e-4, hi * 0.99);
    const double s = gen.uniform(0.01, 0.99);
    EXPECT_GT(config::interface_length(config::build_c3312(x, s)),
              config::interface_length(config::build_c39(x)));
  }
}

TEST(C3312, TwoComponentFirstTile) {
  const auto t = config::build_c3312(0.04, 0.3);
  ASSERT_EQ(t.tiles_of(1).size(), 2u);
  ASSERT_EQ(t.tiles_of(2).size(), 1u);
  EXPECT_EQ(t.tiles_of(2)[0]->shape.size(), 12u);
  EXPECT_NEAR(oracle::green_area(t.tiles_of(1)[0]->shape.edges()), 0.3 * 0.04, 1e-12);
  EXPECT_NEAR(oracle::green_area(t.tiles_of(1)[1]->shape.edges()), 0.7 * 0.04, 1e-12);
  EXPECT_THROW(config::build_c3312(0.04, 1.5), DomainError);
}

TEST(EdgeStructure, CountsPerKind) {
  const auto c48 = config::build_c48(0.2);
  auto e1 = count_edges(c48.tiles_of(1)[0]->shape), e2 = count_edges(c48.tiles_of(2)[0]->shape);
  EXPECT_EQ(e1.flat, 0);
  EXPECT_EQ(e1.curved, 4);
  EXPECT_EQ(e2.flat, 4);
  EXPECT_EQ(e2.curved, 4);
  const auto& edges = c48.tiles_of(2)[0]->shape.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_NE(edges[i].is_flat(), edges[(i + 1) % edges.size()].is_flat());
  }

  const auto c39 = config::build_c39(0.3);
  e1 = count_edges(c39.tiles_of(1)[0]->shape);
  e2 = count_edges(c39.tiles_of(2)[0]->shape);
  EXPECT_EQ(e1.flat, 0);
  EXPECT_EQ(e1.curved, 3);
  EXPECT_EQ(e2.flat, 6);
  EXPECT_EQ(e2.curved, 3);
  EXPECT_NEAR(geom::turning_sum(c39.tiles_of(2)[0]->shape), -kPi, 1e-12);

  const auto c66 = config::build_c66(0.3);
  for (int g = 1; g <= 2; ++g) {
    const auto c = count_edges(c66.tiles_of(g)[0]->shape);
    EXPECT_EQ(c.flat, 6);
    EXPECT_EQ(c.curved, 0);
  }
}

struct KindRange {
  ConfigurationKind kind;
  double lo;
  double hi;
};

TilingSpec build_at(ConfigurationKind k, double x) { return config::build(k, x, 0.5); }

class BuilderProperties : public ::testing::TestWithParam<KindRange> {};

TEST_P(BuilderProperties, AreasSumToCovolumeAndCostMatches) {
  const auto kr = GetParam();
  oracle::Gen gen(static_cast<std::uint64_t>(kr.kind) + 100);
  for (int i = 0; i < 20; ++i) {
    const double x = gen.uniform(kr.lo, kr.hi);
    const auto t = build_at(kr.kind, x);
    EXPECT_NEAR(lattice::covolume(t.lattice), 1.0, 1e-12);
    const double a1 = oracle_area(t, 1), a2 = oracle_area(t, 2);
    EXPECT_NEAR(a1, x, 1e-11);
    EXPECT_NEAR(a1 + a2, 1.0, 1e-11);
    EXPECT_NEAR(t.areas[0] + t.areas[1], 1.0, 1e-12);
    EXPECT_NEAR(config::interface_length(t), config::closed_form_cost(kr.kind, x), 1e-10);
    if (i < 3) EXPECT_NEAR(oracle_interface(t), config::interface_length(t), 1e-8);
    for (const auto& tile : t.tiles) {
      const double n = static_cast<double>(tile.shape.size());
      EXPECT_NEAR(geom::turning_sum(tile.shape), (6 - n) * kPi / 3, 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, BuilderProperties,
    ::testing::Values(KindRange{ConfigurationKind::C39, 1e-4, 0.81},
                      KindRange{ConfigurationKind::C48, 1e-4, 0.58},
                      KindRange{ConfigurationKind::C66, 0.1667, 0.8333},
                      KindRange{ConfigurationKind::C3312, 1e-4, 0.4}),
    [](const auto& info) { return std::string(config::to_string(info.param.kind)); });

TEST(ClosedFormCost, Examples) {
  const auto& c = profile::constants();
  EXPECT_NEAR(config::closed_form_cost(ConfigurationKind::C39, 1e-16), 1.8612097, 1e-7);
  EXPECT_NEAR(config::closed_form_cost(ConfigurationKind::C48, c.x2), 2.6321480, 1e-7);
  EXPECT_NEAR(config::closed_form_cost(ConfigurationKind::C66, 0.3171), 2.6321480, 1e-7);
  EXPECT_THROW(config::closed_form_cost(ConfigurationKind::C66, 0.1), InadmissibleAreaError);
  try {
    config::closed_form_cost(ConfigurationKind::C39, 0.9);
    FAIL();
  } catch (const InadmissibleAreaError& e) {
    EXPECT_EQ(e.lo(), 0.0);
    EXPECT_NEAR(e.hi(), kPi / kSqrt3 - 1, 1e-15);
  }
}

TEST(Optimal, ChoosesProfileMinimizer) {
  const auto& c = profile::constants();
  EXPECT_EQ(config::build_optimal(0.062).front().kind, ConfigurationKind::C39);
  EXPECT_EQ(config::build_optimal(0.2).front().kind, ConfigurationKind::C48);
  EXPECT_EQ(config::build_optimal(0.4).front().kind, ConfigurationKind::C66);
  EXPECT_EQ(config::build_optimal(c.x1).size(), 2u);
  EXPECT_EQ(config::build_optimal(c.x2).size(), 2u);
  EXPECT_EQ(config::build_optimal(1.0).front().kind, ConfigurationKind::Honeycomb);
  EXPECT_THROW(config::build_optimal(-0.1), DomainError);
  EXPECT_THROW(config::build_optimal(1.1), DomainError);
}

TEST(Optimal, MirrorSwapsGenerators) {
  for (const double x : {0.03, 0.2, 0.4}) {
    const auto lo = config::build_optimal(x).front();
    const auto hi = config::build_optimal(1 - x).front();
    EXPECT_EQ(lo.kind, hi.kind);
    EXPECT_NEAR(oracle_area(hi, 1), 1 - x, 1e-11);
    EXPECT_NEAR(oracle_area(hi, 2), x, 1e-11);
    EXPECT_NEAR(config::interface_length(hi), config::interface_length(lo), 1e-14);
    EXPECT_NEAR(hi.pressures[0], lo.pressures[1], 1e-12);
  }
}

TEST(Pressures, DifferenceIsCurvature) {
  const auto t = config::build_c39(0.3);
  EXPECT_NEAR(t.pressures[0] - t.pressures[1], 1 / t.params.at("r"), 1e-14);
  EXPECT_NEAR(t.pressures[0], -t.pressures[1], 1e-15);
  const auto h = config::build_c66(0.3);
  EXPECT_EQ(h.pressures[0], 0.0);
  EXPECT_EQ(h.pressures[1], 0.0);
}

}  // namespace
