#pragma once

#include <vector>

#include "isotile/check_report.hpp"
#include "isotile/config.hpp"

namespace isotile::profile {

/// Constants of the piecewise profile for unit total area.
struct ProfileConstants {
  double m1;  ///< sqrt(2 (pi - sqrt3))
  double q1;  ///< 12^(1/4)
  double m2;  ///< 2 sqrt(pi/3 + 1 - sqrt3)
  double q2;  ///< 2
  double q3;  ///< 2 * 3^(1/4)
  double x1;  ///< ((q2 - q1) / (m1 - m2))^2, the (3;9) -> (4;8) switch
  double x2;  ///< ((q3 - q2) / m2)^2, the (4;8) -> (6;6) switch
};

const ProfileConstants& constants();

struct ProfilePoint {
  double x = 0.0;
  double cost = 0.0;
  /// Minimizing configurations; two entries at x1, x2, 1 - x2, 1 - x1.
  std::vector<config::ConfigurationKind> argmin_kinds;
};

/// Isoperimetric profile I(x) on [0, 1]; symmetric about 1/2.
/// Throws DomainError outside [0, 1].
ProfilePoint profile_I(double x);

/// Cost 12^(1/4) (sqrt x + sqrt(1 - x)) of two separate equal-cell honeycombs.
double profile_J(double x);

/// The three interior roots of I = J in (0, 1/2).
struct KelvinCrossings {
  double first;
  double second;
  double third;
};

KelvinCrossings kelvin_crossings();

/// Audits concavity of g(x) = (I(x) - I(0))^2 by second central differences
/// on a uniform grid of grid_size points over [0, 1]. The measured value is
/// the largest positive second difference divided by h^2.
numcheck::CheckReport concavity_check(int grid_size);

}  // namespace isotile::profile
