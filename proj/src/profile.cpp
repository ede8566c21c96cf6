#include "isotile/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isotile/errors.hpp"
#include "isotile/geom.hpp"

namespace isotile::profile {

using config::ConfigurationKind;

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kBisectionTolerance = 1e-10;

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "x = " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

double piecewise(double y) {
  const auto& c = constants();
  if (y < c.x1) return c.m1 * std::sqrt(y) + c.q1;
  if (y < c.x2) return c.m2 * std::sqrt(y) + c.q2;
  return c.q3;
}

}  // namespace

const ProfileConstants& constants() {
  static const ProfileConstants c = [] {
    const double pi = geom::kPi;
    const double s3 = std::sqrt(3.0);
    ProfileConstants k{};
    k.m1 = std::sqrt(2.0 * (pi - s3));
    k.q1 = std::pow(12.0, 0.25);
    k.m2 = 2.0 * std::sqrt(pi / 3.0 + 1.0 - s3);
    k.q2 = 2.0;
    k.q3 = 2.0 * std::pow(3.0, 0.25);
    const double r1 = (k.q2 - k.q1) / (k.m1 - k.m2);
    const double r2 = (k.q3 - k.q2) / k.m2;
    k.x1 = r1 * r1;
    k.x2 = r2 * r2;
    return k;
  }();
  return c;
}

ProfilePoint profile_I(double x) {
  check_unit_interval(x);
  const auto& c = constants();
  const double y = x <= 0.5 ? x : 1.0 - x;
  ProfilePoint pt{x, 0.0, {}};
  if (y == 0.0) {
    pt.cost = c.q1;
    pt.argmin_kinds = {ConfigurationKind::Honeycomb};
    return pt;
  }
  pt.cost = piecewise(y);
  for (const auto kind : {ConfigurationKind::C39, ConfigurationKind::C48, ConfigurationKind::C66}) {
    if (!config::admissible_range(kind).contains_open(y)) continue;
    if (std::abs(config::closed_form_cost(kind, y) - pt.cost) <= kTieTolerance) {
      pt.argmin_kinds.push_back(kind);
    }
  }
  if (pt.argmin_kinds.empty()) {
    throw InternalInconsistencyError("no admissible configuration attains the profile");
  }
  return pt;
}

double profile_J(double x) {
  check_unit_interval(x);
  return constants().q1 * (std::sqrt(x) + std::sqrt(1.0 - x));
}

KelvinCrossings kelvin_crossings() {
  const auto gap = [](double x) { return profile_I(x).cost - profile_J(x); };
  constexpr int kGrid = 5000;
  std::vector<double> roots;
  double lo = 0.5 / kGrid;
  double f_lo = gap(lo);
  if (!(f_lo < 0.0)) throw InternalInconsistencyError("I < J expected just right of 0");
  for (int k = 2; k < kGrid; ++k) {
    const double hi = 0.5 * k / kGrid;
    const double f_hi = gap(hi);
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      double a = lo, b = hi;
      const bool rising = f_lo < 0.0;
      while (b - a > kBisectionTolerance) {
        const double m = 0.5 * (a + b);
        if ((gap(m) < 0.0) == rising) {
          a = m;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (roots.size() != 3) {
    throw InternalInconsistencyError("expected three crossings of I and J in (0, 1/2), found " +
                                     std::to_string(roots.size()));
  }
  return {roots[0], roots[1], roots[2]};
}

numcheck::CheckReport concavity_check(int grid_size) {
  if (grid_size < 3) throw DomainError("grid_size must be at least 3");
  const double q1 = constants().q1;
  const double n = grid_size - 1;
  const double h = 1.0 / n;
  std::vector<double> g(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    const double d = profile_I(k / n).cost - q1;
    g[k] = d * d;
  }
  double worst = 0.0;
  int worst_at = -1;
  for (int k = 1; k + 1 < grid_size; ++k) {
    const double d2 = (g[k - 1] - 2.0 * g[k] + g[k + 1]) / (h * h);
    if (d2 > worst) {
      worst = d2;
      worst_at = k;
    }
  }
  numcheck::CheckReport report;
  report.name = "concavity";
  report.measured = worst;
  report.expected = 0.0;
  report.tolerance = 1e-9;
  report.pass = worst <= report.tolerance;
  std::ostringstream detail;
  detail.precision(17);
  detail << "absolute; largest positive second difference / h^2 over " << grid_size
         << " points";
  if (worst_at >= 0) detail << " at x = " << worst_at / n;
  report.detail = detail.str();
  return report;
}

}  // namespace isotile::profile
