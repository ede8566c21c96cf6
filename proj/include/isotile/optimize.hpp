#pragma once

// Derivative-free minimization over the raw parameter families of each
// configuration, used to confirm the closed-form optima.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "isotile/config.hpp"

namespace isotile::optimize {

struct HoneycombCost {
  double perimeter;
  double area;
};

/// Hexagon with opposite sides parallel and side lengths a, b, c:
/// perimeter a + b + c per cell, area (sqrt3/2)(ab + bc + ca).
HoneycombCost family_honeycomb_cost(double a, double b, double c);

struct Cost66 {
  double perimeter;
  double area1;
  double area2;
};

/// Two hexagons sharing the lattice: perimeter s + t + 2a + 2b,
/// |E1| = (sqrt3/2)(ab + sa + sb), |E2| = (sqrt3/2)(ab + ta + tb).
Cost66 family_66_cost(double a, double b, double s, double t);

/// Curvilinear quadrilateral with flat edges of the chipped square.
struct FamilyParams48 {
  double theta;  ///< in (0, pi/12]
  double r;      ///< arc radius
  double l;      ///< half-lengths of the flat edges leaving (a, b) and (a, -b)
  double lp;
};

struct Cost48 {
  double perimeter;
  double area1;
  double domain_area;
};

/// perimeter (2pi/3) r + 2(l + lp); area1 r^2 (1 - sqrt3 + pi/3 - 2 sin^2(theta - pi/12));
/// domain_area 8ab + 4(a sin(alpha) + b cos(alpha))(l + lp) + 8 l lp sin(alpha) cos(alpha)
/// with alpha = pi/6 + theta, a = r sin(pi/6 - theta), b = r sin(theta).
Cost48 family_48_cost(const FamilyParams48& p);

/// q1 + m1 sqrt(x) (sqrt(s) + sqrt(1 - s)): two Reuleaux triangles holding
/// s x and (1 - s) x.
double split_3312_cost(double x, double s);

/// Nelder-Mead simplex descent on a function of n variables.
struct SimplexOptions {
  double tolerance = 1e-10;  ///< stop once the simplex diameter drops below
  int max_iterations = 20000;
  double initial_step = 0.1;
  int max_restarts = 4;
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  double diameter = 0.0;
  bool converged = false;
};

/// Infinite or NaN values mark infeasible points. Restarts from the best
/// vertex with a fresh simplex until a restart stops improving.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, const SimplexOptions& options);

enum class Method {
  Elimination,  ///< solve the constraints in closed form
  Penalty,      ///< quadratic penalty with doubling weight (honeycomb and C66)
};

struct MinimizeOptions {
  std::uint64_t seed = 42;
  int starts = 8;
  Method method = Method::Elimination;
  int max_iterations = 20000;
};

struct OptResult {
  std::map<std::string, double> params;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
  double simplex_size = 0.0;
  /// Parameters sitting on the edge of their domain (theta = pi/12 for C48,
  /// split 0 or 1 for C3312).
  std::map<std::string, bool> boundary_active;
  /// Constraint residual after each penalty doubling; empty for elimination.
  std::vector<double> residual_history;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, OptResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const OptResult& best() const noexcept { return best_; }

 private:
  OptResult best_;
};

/// Minimizes the family perimeter with |E1| = x and unit cell area from at
/// least options.starts seeded starts spread log-uniformly over [opt/4, 4 opt].
/// Throws InadmissibleAreaError for x outside the admissible range,
/// DomainError for tolerance <= 0 and NonConvergenceError if no start
/// converges.
OptResult minimize_family(config::ConfigurationKind kind, double x, double tolerance,
                          const MinimizeOptions& options = {});

}  // namespace isotile::optimize
