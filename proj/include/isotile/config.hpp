#pragma once

// Closed-form constructors for the periodic two-tile configurations.
//
// Every builder takes x = |E1| / (|E1| + |E2|) and returns a tiling of a
// unit-covolume lattice with |E1| = x and |E2| = 1 - x.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isotile/geom.hpp"
#include "isotile/lattice.hpp"

namespace isotile::config {

enum class ConfigurationKind {
  Honeycomb,  ///< single regular hexagon
  C66,        ///< two flat hexagons
  C48,        ///< curvilinear square + chipped square
  C39,        ///< Reuleaux triangle + chipped hexagon
  C3312,      ///< two Reuleaux triangles + 12-edge chipped hexagon; stationary only
};

std::string_view to_string(ConfigurationKind kind);
std::optional<ConfigurationKind> parse_kind(std::string_view name);

/// C3312 is a critical point of the perimeter, never a minimizer.
constexpr bool is_stationary_only(ConfigurationKind kind) {
  return kind == ConfigurationKind::C3312;
}

struct Tile {
  int generator = 1;  ///< 1 or 2
  geom::CurvedPolygon shape;
};

struct TilingSpec {
  ConfigurationKind kind;
  lattice::Lattice lattice;
  /// Connected components, each tagged with its generator. E1 has two
  /// components for C3312.
  std::vector<Tile> tiles;
  /// Per-generator pressures; they sum to zero.
  std::array<double, 2> pressures{};
  /// Raw construction parameters (r, l, a, s, t, theta, ... as applicable).
  std::map<std::string, double> params;
  /// Target areas (|E1|, |E2|).
  std::array<double, 2> areas{};

  std::vector<const Tile*> tiles_of(int generator) const;
};

/// Per(T) = half the summed tile perimeters (every edge bounds two tiles).
double interface_length(const TilingSpec& tiling);

/// Exchanges the roles of E1 and E2 (labels, pressures, areas).
TilingSpec swap_generators(TilingSpec tiling);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains_open(double x) const { return x > lo && x < hi; }
};

/// Open interval of admissible x. Honeycomb reports (0, 0): it only exists at
/// the degenerate endpoints. C3312 reports the range of the symmetric split.
Interval admissible_range(ConfigurationKind kind);

/// Upper admissible x of the (4;8) family: the flat edges vanish when the
/// curvilinear square's corners reach the lattice diagonals,
/// (2 + sqrt3)(1 - sqrt3 + pi/3) / 2.
double c48_max_area();

/// m1 sqrt(x) + q1 for C39, m2 sqrt(x) + q2 for C48, q3 for C66, q1 for the
/// honeycomb (x ignored) and q1 + m1 sqrt(2x) for the symmetric C3312.
/// Throws InadmissibleAreaError outside admissible_range.
double closed_form_cost(ConfigurationKind kind, double x);

TilingSpec build_honeycomb();
TilingSpec build_c66(double x);
TilingSpec build_c39(double x);
TilingSpec build_c48(double x);
/// Two Reuleaux triangles holding split*x and (1-split)*x. split 0 or 1
/// collapses to build_c39(x).
TilingSpec build_c3312(double x, double split);

/// Dispatch by kind; `split` is only used by C3312.
TilingSpec build(ConfigurationKind kind, double x, double split = 0.5);

/// Minimizing configuration(s) for x in [0, 1]: one spec, or two at the
/// transition points. x = 0 and x = 1 give the honeycomb; x > 1/2 is built as
/// 1 - x with the tiles exchanged.
std::vector<TilingSpec> build_optimal(double x);

}  // namespace isotile::config
