#include "isotile/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "isotile/errors.hpp"
#include "isotile/geom.hpp"
#include "isotile/profile.hpp"

namespace isotile::optimize {

using config::ConfigurationKind;
using geom::kPi;

namespace {

const double kSqrt3 = std::sqrt(3.0);
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryFlag = 1e-6;

using Point = std::vector<double>;
using Objective = std::function<double(const Point&)>;

void require_positive(std::initializer_list<double> values, const char* what) {
  for (const double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(what) + ": parameters must be positive and finite");
    }
  }
}

double safe(double v) { return std::isnan(v) ? kInf : v; }

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

/// y = c + k (x - c)
Point along(const Point& c, const Point& x, double k) {
  Point y(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) y[i] = c[i] + k * (x[i] - c[i]);
  return y;
}

SimplexResult simplex_run(const Objective& f, const Point& start, const SimplexOptions& opt) {
  const std::size_t n = start.size();
  std::vector<Point> x(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += opt.initial_step;
  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fx[i] = safe(f(x[i]));

  std::vector<std::size_t> order(n + 1);
  SimplexResult out;
  for (out.iterations = 0; out.iterations < opt.max_iterations; ++out.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<Point> xs(n + 1);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      xs[i] = x[order[i]];
      fs[i] = fx[order[i]];
    }
    x = std::move(xs);
    fx = std::move(fs);

    out.diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) out.diameter = std::max(out.diameter, distance(x[i], x[0]));
    if (out.diameter < opt.tolerance) {
      out.converged = true;
      break;
    }

    Point c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) c[k] += x[i][k] / static_cast<double>(n);
    }
    const Point xr = along(c, x[n], -1.0);
    const double fr = safe(f(xr));
    if (fr < fx[0]) {
      const Point xe = along(c, x[n], -2.0);
      const double fe = safe(f(xe));
      if (fe < fr) {
        x[n] = xe;
        fx[n] = fe;
      } else {
        x[n] = xr;
        fx[n] = fr;
      }
      continue;
    }
    if (fr < fx[n - 1]) {
      x[n] = xr;
      fx[n] = fr;
      continue;
    }
    const bool outside = fr < fx[n];
    const Point xc = outside ? along(c, xr, 0.5) : along(c, x[n], 0.5);
    const double fc = safe(f(xc));
    if (outside ? fc <= fr : fc < fx[n]) {
      x[n] = xc;
      fx[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      x[i] = along(x[0], x[i], 0.5);
      fx[i] = safe(f(x[i]));
    }
  }
  const auto best = std::min_element(fx.begin(), fx.end()) - fx.begin();
  out.point = x[best];
  out.value = fx[best];
  return out;
}

/// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// A family in scaled coordinates: z = 0 is the closed-form optimum.
struct Family {
  std::size_t dimension;
  Objective cost;
  std::function<std::map<std::string, double>(const Point&)> params;
  std::function<std::map<std::string, bool>(const Point&)> boundary =
      [](const Point&) { return std::map<std::string, bool>{}; };
};

Family honeycomb_family() {
  const double side = std::sqrt(2.0 / (3.0 * kSqrt3));
  const auto sides = [side](const Point& z) {
    const double a = side * std::exp(z[0]);
    const double b = side * std::exp(z[1]);
    return std::array<double, 3>{a, b, (2.0 / kSqrt3 - a * b) / (a + b)};
  };
  return {2,
          [sides](const Point& z) {
            const auto [a, b, c] = sides(z);
            return c > 0.0 ? a + b + c : kInf;
          },
          [sides](const Point& z) {
            const auto [a, b, c] = sides(z);
            return std::map<std::string, double>{{"a", a}, {"b", b}, {"c", c}};
          }};
}

Family family_66(double x) {
  const double a0 = std::pow(3.0, -0.75);
  const auto sides = [a0, x](const Point& z) {
    const double a = a0 * std::exp(z[0]);
    const double b = a0 * std::exp(z[1]);
    const double s = (2.0 * x / kSqrt3 - a * b) / (a + b);
    const double t = (2.0 * (1.0 - x) / kSqrt3 - a * b) / (a + b);
    return std::array<double, 4>{a, b, s, t};
  };
  return {2,
          [sides](const Point& z) {
            const auto [a, b, s, t] = sides(z);
            return s > 0.0 && t > 0.0 ? s + t + 2.0 * (a + b) : kInf;
          },
          [sides](const Point& z) {
            const auto [a, b, s, t] = sides(z);
            return std::map<std::string, double>{{"a", a}, {"b", b}, {"s", s}, {"t", t}};
          }};
}

Family family_48(double x) {
  const double theta0 = kPi / 12.0;
  const double k = 1.0 - kSqrt3 + kPi / 3.0;
  const double r0 = std::sqrt(x / k);
  const double l0 = 0.5 * (1.0 - 2.0 * std::sqrt(2.0) * r0 * std::sin(theta0));
  // The cost is symmetric under theta -> pi/6 - theta (the square rotated by
  // 90 degrees), so theta is folded into (0, pi/12].
  const auto unpack = [=](const Point& z) -> std::optional<FamilyParams48> {
    const double raw = theta0 * std::exp(z[0]);
    if (!(raw < 2.0 * theta0)) return std::nullopt;
    const double theta = std::min(raw, 2.0 * theta0 - raw);
    if (theta < 1e-6) return std::nullopt;
    const double d = std::sin(theta - theta0);
    const double r = std::sqrt(x / (k - 2.0 * d * d));
    const double l = l0 * std::exp(z[1]);
    const double alpha = kPi / 6.0 + theta;
    const double a = r * std::sin(kPi / 6.0 - theta);
    const double b = r * std::sin(theta);
    const double kab = a * std::sin(alpha) + b * std::cos(alpha);
    const double sc = std::sin(alpha) * std::cos(alpha);
    const double lp = (1.0 - 8.0 * a * b - 4.0 * kab * l) / (4.0 * kab + 8.0 * l * sc);
    if (!(lp > 0.0)) return std::nullopt;
    return FamilyParams48{theta, r, l, lp};
  };
  Family fam{2,
             [unpack](const Point& z) {
               const auto p = unpack(z);
               return p ? family_48_cost(*p).perimeter : kInf;
             },
             [unpack](const Point& z) {
               const auto p = unpack(z).value();
               return std::map<std::string, double>{
                   {"l", p.l}, {"lp", p.lp}, {"r", p.r}, {"theta", p.theta}};
             }};
  fam.boundary = [unpack, theta0](const Point& z) {
    const auto p = unpack(z).value();
    return std::map<std::string, bool>{{"theta", theta0 - p.theta < kBoundaryFlag}};
  };
  return fam;
}

Family family_3312(double x) {
  const auto split = [](const Point& z) {
    const double s = std::sin(z[0] + kPi / 4.0);
    return s * s;
  };
  Family fam{1, [x, split](const Point& z) { return split_3312_cost(x, split(z)); },
             [split](const Point& z) {
               return std::map<std::string, double>{{"split", split(z)}};
             }};
  fam.boundary = [split](const Point& z) {
    const double s = split(z);
    return std::map<std::string, bool>{{"split", s < kBoundaryFlag || s > 1.0 - kBoundaryFlag}};
  };
  return fam;
}

/// Quadratic-penalty version over all raw parameters in log coordinates.
struct PenaltyFamily {
  std::size_t dimension;
  std::function<double(const Point&)> perimeter;
  std::function<double(const Point&)> residual;
  std::function<std::map<std::string, double>(const Point&)> params;
};

PenaltyFamily penalty_honeycomb() {
  const double side = std::sqrt(2.0 / (3.0 * kSqrt3));
  const auto sides = [side](const Point& z) {
    return std::array<double, 3>{side * std::exp(z[0]), side * std::exp(z[1]),
                                 side * std::exp(z[2])};
  };
  return {3,
          [sides](const Point& z) {
            const auto [a, b, c] = sides(z);
            return family_honeycomb_cost(a, b, c).perimeter;
          },
          [sides](const Point& z) {
            const auto [a, b, c] = sides(z);
            return std::abs(family_honeycomb_cost(a, b, c).area - 1.0);
          },
          [sides](const Point& z) {
            const auto [a, b, c] = sides(z);
            return std::map<std::string, double>{{"a", a}, {"b", b}, {"c", c}};
          }};
}

PenaltyFamily penalty_66(double x) {
  const double a0 = std::pow(3.0, -0.75);
  const double s0 = (2.0 * x / kSqrt3 - a0 * a0) / (2.0 * a0);
  const double t0 = 2.0 * a0 - s0;
  const auto sides = [=](const Point& z) {
    return std::array<double, 4>{a0 * std::exp(z[0]), a0 * std::exp(z[1]), s0 * std::exp(z[2]),
                                 t0 * std::exp(z[3])};
  };
  return {4,
          [sides](const Point& z) {
            const auto [a, b, s, t] = sides(z);
            return family_66_cost(a, b, s, t).perimeter;
          },
          [sides, x](const Point& z) {
            const auto [a, b, s, t] = sides(z);
            const auto c = family_66_cost(a, b, s, t);
            return std::hypot(c.area1 - x, c.area2 - (1.0 - x));
          },
          [sides](const Point& z) {
            const auto [a, b, s, t] = sides(z);
            return std::map<std::string, double>{{"a", a}, {"b", b}, {"s", s}, {"t", t}};
          }};
}

/// Log-uniform start in [opt/4, 4 opt] per coordinate, rejection-sampled
/// until the objective is finite.
Point feasible_start(const Objective& f, std::size_t dimension, std::mt19937_64& rng) {
  const double span = std::log(4.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Point z(dimension);
    for (auto& v : z) v = span * (2.0 * unit(rng) - 1.0);
    if (std::isfinite(f(z))) return z;
  }
  throw InternalInconsistencyError("no feasible start found in the sampling box");
}

OptResult to_result(const Family& fam, const SimplexResult& run) {
  OptResult r;
  r.params = fam.params(run.point);
  r.cost = run.value;
  r.iterations = run.iterations;
  r.converged = run.converged;
  r.simplex_size = run.diameter;
  r.boundary_active = fam.boundary(run.point);
  return r;
}

OptResult minimize_eliminated(const Family& fam, double tolerance, const MinimizeOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  SimplexOptions so;
  so.tolerance = tolerance;
  so.max_iterations = opt.max_iterations;
  std::optional<SimplexResult> best;
  bool any_converged = false;
  for (int k = 0; k < std::max(opt.starts, 8); ++k) {
    const auto run = nelder_mead(fam.cost, feasible_start(fam.cost, fam.dimension, rng), so);
    any_converged = any_converged || run.converged;
    if (!best || (run.converged && !best->converged) ||
        (run.converged == best->converged && run.value < best->value)) {
      best = run;
    }
  }
  OptResult result = to_result(fam, *best);
  if (!any_converged) throw NonConvergenceError("no start converged", result);
  return result;
}

OptResult minimize_penalty(const PenaltyFamily& fam, double tolerance,
                           const MinimizeOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  SimplexOptions so;
  so.tolerance = tolerance;
  so.max_iterations = opt.max_iterations;

  std::optional<OptResult> best;
  for (int k = 0; k < std::max(opt.starts, 8); ++k) {
    Point z(fam.dimension);
    for (auto& v : z) v = std::log(4.0) * (2.0 * unit(rng) - 1.0);
    OptResult r;
    // Below the perimeter scale the empty configuration beats every feasible
    // one, so the weight starts at 10.
    double mu = 10.0;
    SimplexResult run;
    for (int stage = 0; stage < 200; ++stage) {
      const Objective penalized = [&fam, mu](const Point& p) {
        const double res = fam.residual(p);
        return fam.perimeter(p) + mu * res * res;
      };
      run = nelder_mead(penalized, z, so);
      z = run.point;
      r.iterations += run.iterations;
      r.residual_history.push_back(fam.residual(z));
      if (r.residual_history.back() < tolerance) break;
      mu *= 2.0;
    }
    r.params = fam.params(z);
    r.cost = fam.perimeter(z);
    r.simplex_size = run.diameter;
    r.converged = run.converged && r.residual_history.back() < tolerance;
    if (!best || (r.converged && !best->converged) ||
        (r.converged == best->converged && r.cost < best->cost)) {
      best = std::move(r);
    }
  }
  if (!best->converged) throw NonConvergenceError("no penalty run converged", *best);
  return *best;
}

}  // namespace

HoneycombCost family_honeycomb_cost(double a, double b, double c) {
  require_positive({a, b, c}, "family_honeycomb_cost");
  return {a + b + c, 0.5 * kSqrt3 * (a * b + b * c + c * a)};
}

Cost66 family_66_cost(double a, double b, double s, double t) {
  require_positive({a, b, s, t}, "family_66_cost");
  return {s + t + 2.0 * a + 2.0 * b, 0.5 * kSqrt3 * (a * b + s * a + s * b),
          0.5 * kSqrt3 * (a * b + t * a + t * b)};
}

Cost48 family_48_cost(const FamilyParams48& p) {
  require_positive({p.theta, p.r, p.l, p.lp}, "family_48_cost");
  if (p.theta > kPi / 12.0) throw DomainError("family_48_cost: theta must lie in (0, pi/12]");
  const double alpha = kPi / 6.0 + p.theta;
  const double a = p.r * std::sin(kPi / 6.0 - p.theta);
  const double b = p.r * std::sin(p.theta);
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);
  const double d = std::sin(p.theta - kPi / 12.0);
  return {2.0 * kPi / 3.0 * p.r + 2.0 * (p.l + p.lp),
          p.r * p.r * (1.0 - kSqrt3 + kPi / 3.0 - 2.0 * d * d),
          8.0 * a * b + 4.0 * (a * sa + b * ca) * (p.l + p.lp) + 8.0 * p.l * p.lp * sa * ca};
}

double split_3312_cost(double x, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("split_3312_cost: s must lie in [0, 1]");
  const auto range = config::admissible_range(ConfigurationKind::C3312);
  if (!range.contains_open(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "split_3312_cost: x = " << x << " outside (" << range.lo << ", " << range.hi << ")";
    throw InadmissibleAreaError(msg.str(), range.lo, range.hi);
  }
  const auto& c = profile::constants();
  return c.q1 + c.m1 * std::sqrt(x) * (std::sqrt(s) + std::sqrt(1.0 - s));
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, const SimplexOptions& options) {
  if (start.empty()) throw DomainError("nelder_mead: empty start point");
  if (!std::isfinite(safe(f(start)))) throw DomainError("nelder_mead: infeasible start point");
  SimplexResult best = simplex_run(f, start, options);
  int iterations = best.iterations;
  for (int k = 0; k < options.max_restarts && best.converged; ++k) {
    SimplexResult again = simplex_run(f, best.point, options);
    iterations += again.iterations;
    const bool improved = again.value < best.value;
    if (again.value <= best.value) best = again;
    if (!improved) break;
  }
  best.iterations = iterations;
  return best;
}

OptResult minimize_family(ConfigurationKind kind, double x, double tolerance,
                          const MinimizeOptions& options) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (kind != ConfigurationKind::Honeycomb) {
    const auto range = config::admissible_range(kind);
    if (!range.contains_open(x)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << to_string(kind) << ": x = " << x << " outside admissible interval (" << range.lo
          << ", " << range.hi << ")";
      throw InadmissibleAreaError(msg.str(), range.lo, range.hi);
    }
  }
  if (options.method == Method::Penalty) {
    switch (kind) {
      case ConfigurationKind::Honeycomb: return minimize_penalty(penalty_honeycomb(), tolerance, options);
      case ConfigurationKind::C66: return minimize_penalty(penalty_66(x), tolerance, options);
      default: throw DomainError("penalty method is available for Honeycomb and C66 only");
    }
  }
  switch (kind) {
    case ConfigurationKind::Honeycomb: return minimize_eliminated(honeycomb_family(), tolerance, options);
    case ConfigurationKind::C66: return minimize_eliminated(family_66(x), tolerance, options);
    case ConfigurationKind::C48: return minimize_eliminated(family_48(x), tolerance, options);
    case ConfigurationKind::C3312: return minimize_eliminated(family_3312(x), tolerance, options);
    case ConfigurationKind::C39: break;
  }
  throw DomainError("no parameter family is optimized for C39");
}

}  // namespace isotile::optimize
