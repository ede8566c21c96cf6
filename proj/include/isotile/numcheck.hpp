#pragma once

// Numerical oracles that check the closed forms independently: chord
// discretization, Monte-Carlo coverage and structural audits of tilings.

#include <cstdint>
#include <vector>

#include "isotile/check_report.hpp"
#include "isotile/config.hpp"
#include "isotile/geom.hpp"

namespace isotile::numcheck {

/// Replaces every arc by segments_per_arc equal-turn chords with endpoints on
/// the arc. Flat edges are kept. Throws DomainError if segments_per_arc < 1.
geom::CurvedPolygon polygonize(const geom::CurvedPolygon& p, int segments_per_arc);

struct AreaPerimeter {
  double area = 0.0;
  double perimeter = 0.0;
};

/// Shoelace area and chord length of the polygonization.
/// Throws DomainError if segments_per_arc < 16.
AreaPerimeter numeric_area_perimeter(const geom::CurvedPolygon& p, int segments_per_arc);

/// Point membership without discretization: crossing-number test on the
/// chord polygon, toggled inside the circular segment of every arc.
bool contains(const geom::CurvedPolygon& p, geom::Vec2 q);

/// Euclidean distance from q to the boundary of p.
double boundary_distance(const geom::CurvedPolygon& p, geom::Vec2 q);

/// Samples uniform points in the 3x3 block of fundamental parallelograms
/// centred at the origin, rejects points within 1e-9 of an edge and checks
/// that each remaining point lies in exactly one tile translate. The E1
/// fraction must be within three binomial standard deviations of |E1|.
/// Throws DomainError if samples < 10^4.
CheckReport coverage_test(const config::TilingSpec& tiling, int samples, std::uint64_t seed);

/// Every vertex meets three edges (translates included), the outgoing
/// tangents are 120 degrees apart and the signed curvatures of the outgoing
/// edges sum to zero.
CheckReport junction_audit(const config::TilingSpec& tiling);

/// Every interface between different generators has signed curvature
/// p_this - p_other seen from this tile; interfaces with equal pressures and
/// between tiles of one generator are flat.
CheckReport pressure_curvature_audit(const config::TilingSpec& tiling);

/// Every tile with n edges has turning sum (6 - n) pi / 3.
CheckReport turning_sum_audit(const config::TilingSpec& tiling);

/// Per-generator numeric areas against the target areas.
CheckReport area_audit(const config::TilingSpec& tiling, int segments_per_arc);

/// Numeric interface length against the closed-form interface length.
CheckReport perimeter_audit(const config::TilingSpec& tiling, int segments_per_arc);

/// Closed-form interface length against the profile cost of the family.
CheckReport cost_audit(const config::TilingSpec& tiling);

/// Largest adjacency degree over all tile components; must not exceed 6.
CheckReport adjacency_audit(const config::TilingSpec& tiling);

/// All audits above, in a fixed order.
std::vector<CheckReport> run_all(const config::TilingSpec& tiling, int segments_per_arc,
                                 int samples, std::uint64_t seed);

}  // namespace isotile::numcheck
