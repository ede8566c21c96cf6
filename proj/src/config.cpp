#include "isotile/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

#include "isotile/errors.hpp"
#include "isotile/profile.hpp"

namespace isotile::config {

using geom::CurvedPolygon;
using geom::kPi;
using geom::Vec2;

namespace {

const double kSqrt3 = std::sqrt(3.0);

/// Unit vectors at multiples of 60 degrees, exact to the last bit of sqrt3/2.
Vec2 sixth(int k) {
  static const std::array<Vec2, 6> table = {{{1.0, 0.0},
                                             {0.5, 0.5 * kSqrt3},
                                             {-0.5, 0.5 * kSqrt3},
                                             {-1.0, 0.0},
                                             {-0.5, -0.5 * kSqrt3},
                                             {0.5, -0.5 * kSqrt3}}};
  return table[((k % 6) + 6) % 6];
}

/// Side of the regular hexagon of unit area.
double unit_hexagon_side() { return std::sqrt(2.0 / (3.0 * kSqrt3)); }

/// Area factor of the Reuleaux triangle: |E| = (pi - sqrt3) / 2 * r^2.
double reuleaux_radius(double area) { return std::sqrt(2.0 * area / (kPi - kSqrt3)); }

/// Area factor of the curvilinear square: |E| = (1 - sqrt3 + pi/3) r^2.
double curvilinear_square_factor() { return 1.0 - kSqrt3 + kPi / 3.0; }

lattice::Lattice honeycomb_lattice(double side) {
  return {{1.5 * side, 0.5 * kSqrt3 * side}, {0.0, kSqrt3 * side}};
}

[[noreturn]] void inadmissible(std::string_view what, double x, Interval range) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << ": x = " << x << " outside admissible interval (" << range.lo << ", "
      << range.hi << ")";
  throw InadmissibleAreaError(msg.str(), range.lo, range.hi);
}

/// Reuleaux triangle of chord r centred at v: vertices at distance r/sqrt3
/// along the directions sixth(k), sixth(k+2), sixth(k+4).
CurvedPolygon reuleaux_at(Vec2 v, int k, double r) {
  const double d = r / kSqrt3;
  const std::array<Vec2, 3> pts = {v + d * sixth(k), v + d * sixth(k + 2), v + d * sixth(k + 4)};
  const std::array<double, 3> turns = {kPi / 3.0, kPi / 3.0, kPi / 3.0};
  return CurvedPolygon::from_vertices(pts, turns);
}

/// Regular hexagon of side `side` centred at the origin with a horizontal
/// top edge. Vertex k (at angle k*60deg) is chipped by a Reuleaux triangle of
/// chord chip[k]; zero leaves the corner intact.
CurvedPolygon chipped_hexagon(double side, const std::array<double, 6>& chip) {
  std::vector<Vec2> pts;
  std::vector<double> turns;
  for (int k = 0; k < 6; ++k) {
    const Vec2 v = side * sixth(k);
    if (chip[k] > 0.0) {
      const double d = chip[k] / kSqrt3;
      pts.push_back(v + d * sixth(k + 4));  // towards the previous vertex
      turns.push_back(-kPi / 3.0);
      pts.push_back(v + d * sixth(k + 2));  // towards the next vertex
      turns.push_back(0.0);
    } else {
      pts.push_back(v);
      turns.push_back(0.0);
    }
  }
  return CurvedPolygon::from_vertices(pts, turns);
}

}  // namespace

std::string_view to_string(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::Honeycomb: return "Honeycomb";
    case ConfigurationKind::C66: return "C66";
    case ConfigurationKind::C48: return "C48";
    case ConfigurationKind::C39: return "C39";
    case ConfigurationKind::C3312: return "C3312";
  }
  return "?";
}

std::optional<ConfigurationKind> parse_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "honeycomb") return ConfigurationKind::Honeycomb;
  if (lower == "c66") return ConfigurationKind::C66;
  if (lower == "c48") return ConfigurationKind::C48;
  if (lower == "c39") return ConfigurationKind::C39;
  if (lower == "c3312") return ConfigurationKind::C3312;
  return std::nullopt;
}

std::vector<const Tile*> TilingSpec::tiles_of(int generator) const {
  std::vector<const Tile*> out;
  for (const auto& t : tiles) {
    if (t.generator == generator) out.push_back(&t);
  }
  return out;
}

double interface_length(const TilingSpec& tiling) {
  double total = 0.0;
  for (const auto& t : tiling.tiles) total += geom::perimeter(t.shape);
  return 0.5 * total;
}

TilingSpec swap_generators(TilingSpec tiling) {
  for (auto& t : tiling.tiles) t.generator = 3 - t.generator;
  std::stable_sort(tiling.tiles.begin(), tiling.tiles.end(),
                   [](const Tile& a, const Tile& b) { return a.generator < b.generator; });
  std::swap(tiling.pressures[0], tiling.pressures[1]);
  std::swap(tiling.areas[0], tiling.areas[1]);
  return tiling;
}

double c48_max_area() { return 0.5 * (2.0 + kSqrt3) * curvilinear_square_factor(); }

Interval admissible_range(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::Honeycomb: return {0.0, 0.0};
    case ConfigurationKind::C66: return {1.0 / 6.0, 5.0 / 6.0};
    case ConfigurationKind::C48: return {0.0, c48_max_area()};
    case ConfigurationKind::C39: return {0.0, kPi / kSqrt3 - 1.0};
    case ConfigurationKind::C3312: return {0.0, 0.5 * (kPi / kSqrt3 - 1.0)};
  }
  return {};
}

double closed_form_cost(ConfigurationKind kind, double x) {
  const auto& c = profile::constants();
  if (kind == ConfigurationKind::Honeycomb) return c.q1;
  const Interval range = admissible_range(kind);
  if (!range.contains_open(x)) inadmissible(to_string(kind), x, range);
  switch (kind) {
    case ConfigurationKind::C39: return c.m1 * std::sqrt(x) + c.q1;
    case ConfigurationKind::C48: return c.m2 * std::sqrt(x) + c.q2;
    case ConfigurationKind::C66: return c.q3;
    case ConfigurationKind::C3312: return c.q1 + c.m1 * std::sqrt(2.0 * x);
    case ConfigurationKind::Honeycomb: break;
  }
  return c.q1;
}

TilingSpec build_honeycomb() {
  const double side = unit_hexagon_side();
  return TilingSpec{
      .kind = ConfigurationKind::Honeycomb,
      .lattice = honeycomb_lattice(side),
      .tiles = {Tile{1, chipped_hexagon(side, {})}},
      .pressures = {0.0, 0.0},
      .params = {{"l", side}},
      .areas = {1.0, 0.0},
  };
}

TilingSpec build_c66(double x) {
  const Interval range = admissible_range(ConfigurationKind::C66);
  if (!range.contains_open(x)) inadmissible("C66", x, range);

  // Side pattern (a, a, s) for E1 and (a, a, t) for E2 with s + t = 2a and
  // 3 sqrt3 a^2 = 1. Directions run 90, 150, ..., 30 degrees so that edge 0
  // of E1 is the vertical edge shared with E2 on its right.
  const double a = std::pow(3.0, -0.75);
  const double s = (2.0 * x / kSqrt3 - a * a) / (2.0 * a);
  const double t = 2.0 * a - s;
  // sixth(k) is at k*60deg; edge k of these hexagons points at 90 + 60k deg.
  const auto edge_dir = [](int k) { return geom::perp_left(sixth(k)); };

  const std::array<double, 6> len1 = {a, a, s, a, a, s};
  std::array<Vec2, 6> p{};
  p[0] = {0.0, -0.5 * a};
  for (int k = 0; k < 5; ++k) p[k + 1] = p[k] + len1[k] * edge_dir(k);

  // E2's edge 3 runs down E1's edge 0: q3 = p1, q4 = p0.
  std::array<Vec2, 6> q{};
  q[3] = p[1];
  q[4] = p[0];
  q[5] = q[4] + a * edge_dir(4);
  q[0] = q[3] - (a * edge_dir(0) + a * edge_dir(1) + t * edge_dir(2));
  q[1] = q[0] + a * edge_dir(0);
  q[2] = q[1] + a * edge_dir(1);

  const std::array<double, 6> flat{};
  return TilingSpec{
      .kind = ConfigurationKind::C66,
      .lattice = lattice::Lattice{a * Vec2{-0.5 * kSqrt3, 1.5}, {2.0 * kSqrt3 * a, 0.0}},
      .tiles = {Tile{1, CurvedPolygon::from_vertices(p, flat)},
                Tile{2, CurvedPolygon::from_vertices(q, flat)}},
      .pressures = {0.0, 0.0},
      .params = {{"a", a}, {"s", s}, {"t", t}},
      .areas = {x, 1.0 - x},
  };
}

TilingSpec build_c39(double x) {
  const Interval range = admissible_range(ConfigurationKind::C39);
  if (!range.contains_open(x)) inadmissible("C39", x, range);

  const double side = unit_hexagon_side();
  const double r = reuleaux_radius(x);
  // The triangle sits on vertex 1 (upper right); its translates chip the
  // alternate vertices 1, 3, 5 of the hexagon.
  std::array<double, 6> chip{};
  chip[1] = chip[3] = chip[5] = r;
  return TilingSpec{
      .kind = ConfigurationKind::C39,
      .lattice = honeycomb_lattice(side),
      .tiles = {Tile{1, reuleaux_at(side * sixth(1), 1, r)},
                Tile{2, chipped_hexagon(side, chip)}},
      .pressures = {0.5 / r, -0.5 / r},
      .params = {{"l", side}, {"r", r}},
      .areas = {x, 1.0 - x},
  };
}

TilingSpec build_c48(double x) {
  const Interval range = admissible_range(ConfigurationKind::C48);
  if (!range.contains_open(x)) inadmissible("C48", x, range);

  const double r = std::sqrt(x / curvilinear_square_factor());
  const double a = r * std::sin(kPi / 12.0);
  const double u = 0.25 * std::sqrt(2.0);
  const double q = 1.0 / 6.0 * kPi;  // each arc turns by pi/6

  const std::array<Vec2, 4> square = {{{a, -a}, {a, a}, {-a, a}, {-a, -a}}};
  const std::array<double, 4> square_turns = {q, q, q, q};

  // Chipped square around (2u, 0); its corners are the curvilinear squares at
  // the lattice points (0,0), (2u,-2u), (4u,0), (2u,2u).
  const std::array<Vec2, 8> chipped = {{{a, -a},
                                        {2 * u - a, -2 * u + a},
                                        {2 * u + a, -2 * u + a},
                                        {4 * u - a, -a},
                                        {4 * u - a, a},
                                        {2 * u + a, 2 * u - a},
                                        {2 * u - a, 2 * u - a},
                                        {a, a}}};
  const std::array<double, 8> chipped_turns = {0, -q, 0, -q, 0, -q, 0, -q};

  return TilingSpec{
      .kind = ConfigurationKind::C48,
      .lattice = lattice::Lattice{{2 * u, 2 * u}, {2 * u, -2 * u}},
      .tiles = {Tile{1, CurvedPolygon::from_vertices(square, square_turns)},
                Tile{2, CurvedPolygon::from_vertices(chipped, chipped_turns)}},
      .pressures = {0.5 / r, -0.5 / r},
      .params = {{"a", a}, {"r", r}, {"theta", kPi / 12.0}, {"u", u}},
      .areas = {x, 1.0 - x},
  };
}

TilingSpec build_c3312(double x, double split) {
  if (!(split >= 0.0 && split <= 1.0)) {
    throw DomainError("split must lie in [0, 1]");
  }
  if (split == 0.0 || split == 1.0) return build_c39(x);

  const double side = unit_hexagon_side();
  const double weight = std::sqrt(split) + std::sqrt(1.0 - split);
  const Interval range{0.0, (kPi - kSqrt3) / (kSqrt3 * weight * weight)};
  if (!range.contains_open(x)) inadmissible("C3312", x, range);

  const double r1 = reuleaux_radius(split * x);
  const double r2 = reuleaux_radius((1.0 - split) * x);
  std::array<double, 6> chip{};
  chip[1] = chip[3] = chip[5] = r1;
  chip[0] = chip[2] = chip[4] = r2;
  // A single pressure jump cannot match two radii; it matches both arcs only
  // at split = 1/2, the stationary member of the family.
  const double p = 1.0 / (r1 + r2);
  return TilingSpec{
      .kind = ConfigurationKind::C3312,
      .lattice = honeycomb_lattice(side),
      .tiles = {Tile{1, reuleaux_at(side * sixth(1), 1, r1)},
                Tile{1, reuleaux_at(side * sixth(4), 4, r2)},
                Tile{2, chipped_hexagon(side, chip)}},
      .pressures = {p, -p},
      .params = {{"l", side}, {"r1", r1}, {"r2", r2}, {"split", split}},
      .areas = {x, 1.0 - x},
  };
}

TilingSpec build(ConfigurationKind kind, double x, double split) {
  switch (kind) {
    case ConfigurationKind::Honeycomb: return build_honeycomb();
    case ConfigurationKind::C66: return build_c66(x);
    case ConfigurationKind::C48: return build_c48(x);
    case ConfigurationKind::C39: return build_c39(x);
    case ConfigurationKind::C3312: return build_c3312(x, split);
  }
  throw DomainError("unknown configuration kind");
}

std::vector<TilingSpec> build_optimal(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
  if (x == 0.0) return {swap_generators(build_honeycomb())};
  if (x == 1.0) return {build_honeycomb()};
  const bool mirrored = x > 0.5;
  const double y = mirrored ? 1.0 - x : x;
  std::vector<TilingSpec> out;
  for (const auto kind : profile::profile_I(x).argmin_kinds) {
    auto spec = build(kind, y);
    out.push_back(mirrored ? swap_generators(std::move(spec)) : std::move(spec));
  }
  return out;
}

}  // namespace isotile::config
