#include "isotile/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "isotile/errors.hpp"
#include "isotile/lattice.hpp"
#include "isotile/profile.hpp"

namespace isotile::numcheck {

using geom::ArcEdge;
using geom::Box;
using geom::CurvedPolygon;
using geom::kPi;
using geom::Vec2;

namespace {

constexpr double kMatch = 1e-9;
constexpr double kBand = 1e-9;

bool same_point(Vec2 a, Vec2 b) { return geom::distance(a, b) <= kMatch; }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

std::string fmt(Vec2 v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ")"; }

CheckReport make_report(std::string name, double measured, double expected, double tolerance,
                        std::string detail, bool structural_ok = true) {
  CheckReport r;
  r.name = std::move(name);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = tolerance;
  r.pass = structural_ok && std::abs(measured - expected) <= tolerance;
  r.detail = std::move(detail);
  return r;
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

/// True when direction u from the arc's center lies in the swept wedge.
bool in_wedge(const ArcEdge& e, Vec2 c, Vec2 u) {
  const Vec2 ds = e.start - c;
  const Vec2 de = e.end - c;
  if (e.turn > 0) {
    if (e.turn <= kPi) return geom::cross(ds, u) >= 0 && geom::cross(u, de) >= 0;
  } else if (-e.turn <= kPi) {
    return geom::cross(ds, u) <= 0 && geom::cross(u, de) <= 0;
  }
  return false;
}

double segment_distance(Vec2 a, Vec2 b, Vec2 q) {
  const Vec2 d = b - a;
  const double len2 = geom::dot(d, d);
  double s = len2 > 0.0 ? geom::dot(q - a, d) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return geom::distance(a + s * d, q);
}

double edge_distance(const ArcEdge& e, Vec2 q) {
  if (e.is_flat()) return segment_distance(e.start, e.end, q);
  const auto g = geom::edge_geometry(e);
  const Vec2 c = *g.center;
  if (in_wedge(e, c, q - c)) return std::abs(geom::distance(q, c) - *g.radius);
  return std::min(geom::distance(q, e.start), geom::distance(q, e.end));
}

/// A tile translate: generator label plus the shape in world coordinates.
struct Instance {
  int generator;
  int component;
  lattice::Cell cell;
  CurvedPolygon shape;
};

/// Translates of every tile whose bounding box meets `window`.
std::vector<Instance> instances_near(const config::TilingSpec& tiling, const Box& window) {
  std::vector<Instance> out;
  std::map<int, int> component_count;
  for (const auto& tile : tiling.tiles) {
    const int component = component_count[tile.generator]++;
    const Box box = geom::bounding_box(tile.shape);
    for (const auto cell : lattice::translates_in_window(tiling.lattice, window, box)) {
      out.push_back({tile.generator, component, cell,
                     tile.shape.translated(tiling.lattice.at(cell))});
    }
  }
  return out;
}

Box point_box(Vec2 p, double margin) { return Box{p, p}.inflated(margin); }

std::string vertex_type(std::vector<int> generators) {
  std::sort(generators.begin(), generators.end());
  std::string s;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) s += '-';
    s += std::to_string(generators[i]);
  }
  return s;
}

/// Area of the small tile that parameterizes the configuration: the convex
/// (higher-pressure) generator for curved families.
double family_area(const config::TilingSpec& tiling) {
  return tiling.pressures[0] >= tiling.pressures[1] ? tiling.areas[0] : tiling.areas[1];
}

}  // namespace

CurvedPolygon polygonize(const CurvedPolygon& p, int segments_per_arc) {
  if (segments_per_arc < 1) throw DomainError("segments_per_arc must be at least 1");
  std::vector<Vec2> pts;
  for (const auto& e : p.edges()) {
    pts.push_back(e.start);
    if (e.is_flat()) continue;
    for (int k = 1; k < segments_per_arc; ++k) {
      pts.push_back(geom::point_at(e, static_cast<double>(k) / segments_per_arc));
    }
  }
  std::vector<double> turns(pts.size(), 0.0);
  return CurvedPolygon::from_vertices(pts, turns);
}

AreaPerimeter numeric_area_perimeter(const CurvedPolygon& p, int segments_per_arc) {
  if (segments_per_arc < 16) throw DomainError("segments_per_arc must be at least 16");
  const CurvedPolygon flat = polygonize(p, segments_per_arc);
  double twice_area = 0.0;
  double length = 0.0;
  for (const auto& e : flat.edges()) {
    twice_area += geom::cross(e.start, e.end);
    length += e.chord();
  }
  return {0.5 * twice_area, length};
}

bool contains(const CurvedPolygon& p, Vec2 q) {
  bool inside = false;
  for (const auto& e : p.edges()) {
    const Vec2 a = e.start;
    const Vec2 b = e.end;
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x_cross = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (q.x < x_cross) inside = !inside;
    }
    if (!e.is_flat()) {
      const auto g = geom::edge_geometry(e);
      const double side = geom::cross(b - a, q - a);
      const bool arc_side = e.turn > 0 ? side < 0.0 : side > 0.0;
      if (arc_side && geom::distance(q, *g.center) < *g.radius) inside = !inside;
    }
  }
  return inside;
}

double boundary_distance(const CurvedPolygon& p, Vec2 q) {
  double best = INFINITY;
  for (const auto& e : p.edges()) best = std::min(best, edge_distance(e, q));
  return best;
}

CheckReport coverage_test(const config::TilingSpec& tiling, int samples, std::uint64_t seed) {
  if (samples < 10000) throw DomainError("coverage_test needs at least 10^4 samples");
  const Vec2 g1 = tiling.lattice.g1();
  const Vec2 g2 = tiling.lattice.g2();
  const Vec2 origin = -1.5 * (g1 + g2);

  struct Prepared {
    int generator;
    CurvedPolygon shape;
    Box box;
  };
  std::vector<Prepared> tiles;
  for (const auto& t : tiling.tiles) {
    tiles.push_back({t.generator, t.shape, geom::bounding_box(t.shape)});
  }

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  int in_e1 = 0;
  int accepted = 0;
  long rejected = 0;
  std::string failure;
  while (accepted < samples) {
    const Vec2 q = origin + (3.0 * uniform()) * g1 + (3.0 * uniform()) * g2;
    int hits = 0;
    int hit_generator = 0;
    bool near_boundary = false;
    for (const auto& t : tiles) {
      for (const auto cell :
           lattice::translates_in_window(tiling.lattice, point_box(q, kBand), t.box)) {
        const Vec2 local = q - tiling.lattice.at(cell);
        if (boundary_distance(t.shape, local) < kBand) {
          near_boundary = true;
          break;
        }
        if (contains(t.shape, local)) {
          ++hits;
          hit_generator = t.generator;
        }
      }
      if (near_boundary) break;
    }
    if (near_boundary) {
      ++rejected;
      continue;
    }
    ++accepted;
    if (hits != 1) {
      if (failure.empty()) {
        failure = (hits == 0 ? "gap at " : "overlap at ") + fmt(q) + " (" +
                  std::to_string(hits) + " tiles)";
      }
      continue;
    }
    if (hit_generator == 1) ++in_e1;
  }

  const double x = tiling.areas[0];
  const double fraction = static_cast<double>(in_e1) / samples;
  const double sigma = std::sqrt(x * (1.0 - x) / samples);
  std::string detail = "absolute; 3 binomial sigma; " + std::to_string(samples) +
                       " samples, seed " + std::to_string(seed) + ", " +
                       std::to_string(rejected) + " boundary rejections";
  if (!failure.empty()) detail += "; " + failure;
  return make_report("coverage", fraction, x, 3.0 * sigma, detail, failure.empty());
}

CheckReport junction_audit(const config::TilingSpec& tiling) {
  std::vector<Vec2> vertices;
  for (const auto& t : tiling.tiles) {
    for (const Vec2 v : t.shape.vertices()) {
      const bool seen = std::any_of(vertices.begin(), vertices.end(),
                                    [&](Vec2 w) { return same_point(v, w); });
      if (!seen) vertices.push_back(v);
    }
  }

  double worst = 0.0;
  std::string failure;
  std::set<std::string> types;
  for (const Vec2 v : vertices) {
    std::vector<double> tangents;
    std::vector<int> generators;
    double curvature_sum = 0.0;
    int incoming = 0;
    for (const auto& inst : instances_near(tiling, point_box(v, kMatch))) {
      for (const auto& e : inst.shape.edges()) {
        if (same_point(e.start, v)) {
          tangents.push_back(wrap_angle(geom::start_tangent_angle(e)));
          curvature_sum += geom::signed_curvature(e);
          generators.push_back(inst.generator);
        }
        if (same_point(e.end, v)) ++incoming;
      }
    }
    if (tangents.size() != 3 || incoming != 3) {
      if (failure.empty()) {
        failure = "vertex " + fmt(v) + " has " + std::to_string(tangents.size()) +
                  " outgoing and " + std::to_string(incoming) + " incoming edges";
      }
      continue;
    }
    std::sort(tangents.begin(), tangents.end());
    const double gaps[] = {tangents[1] - tangents[0], tangents[2] - tangents[1],
                           tangents[0] + 2.0 * kPi - tangents[2]};
    double deviation = std::abs(curvature_sum);
    for (const double g : gaps) deviation = std::max(deviation, std::abs(g - 2.0 * kPi / 3.0));
    if (deviation > worst) {
      worst = deviation;
      if (deviation > kMatch && failure.empty()) {
        failure = "vertex " + fmt(v) + " deviates by " + fmt(deviation);
      }
    }
    types.insert(vertex_type(generators));
  }

  std::string detail = "absolute; " + std::to_string(vertices.size()) + " vertices; types";
  for (const auto& t : types) detail += " " + t;
  if (!failure.empty()) detail += "; " + failure;
  return make_report("junction", worst, 0.0, kMatch, detail, failure.empty());
}

CheckReport pressure_curvature_audit(const config::TilingSpec& tiling) {
  double worst = 0.0;
  std::string failure;
  int interfaces = 0;
  for (const auto& tile : tiling.tiles) {
    const double p_this = tiling.pressures[tile.generator - 1];
    const Box box = geom::bounding_box(tile.shape).inflated(kMatch);
    const auto nearby = instances_near(tiling, box);
    for (std::size_t k = 0; k < tile.shape.size(); ++k) {
      const ArcEdge& e = tile.shape[k];
      const Instance* other = nullptr;
      for (const auto& inst : nearby) {
        for (const auto& f : inst.shape.edges()) {
          if (same_point(f.start, e.end) && same_point(f.end, e.start) &&
              std::abs(f.turn + e.turn) <= kMatch) {
            other = &inst;
            break;
          }
        }
        if (other != nullptr) break;
      }
      const std::string where = "generator " + std::to_string(tile.generator) + " edge " +
                                std::to_string(k) + " from " + fmt(e.start);
      if (other == nullptr) {
        if (failure.empty()) failure = where + " has no matching neighbour edge";
        continue;
      }
      ++interfaces;
      const double jump =
          other->generator == tile.generator ? 0.0 : p_this - tiling.pressures[other->generator - 1];
      double deviation = 0.0;
      if (jump == 0.0) {
        deviation = std::abs(e.turn);
      } else if (e.is_flat()) {
        deviation = 1.0;
      } else {
        deviation = std::abs(geom::signed_curvature(e) - jump) / std::abs(jump);
      }
      if (deviation > worst) {
        worst = deviation;
        if (deviation > kMatch && failure.empty()) {
          failure = where + " curvature deviates by " + fmt(deviation);
        }
      }
    }
  }
  std::string detail = "relative to |p1 - p2|; flat edges absolute in turn; " +
                       std::to_string(interfaces) + " interfaces";
  if (!failure.empty()) detail += "; " + failure;
  return make_report("pressure_curvature", worst, 0.0, kMatch, detail, failure.empty());
}

CheckReport turning_sum_audit(const config::TilingSpec& tiling) {
  double worst = 0.0;
  for (const auto& t : tiling.tiles) {
    const double n = static_cast<double>(t.shape.size());
    worst = std::max(worst, std::abs(geom::turning_sum(t.shape) - (6.0 - n) * kPi / 3.0));
  }
  return make_report("turning_sum", worst, 0.0, 1e-12,
                     "absolute; max |sum of turns - (6 - n) pi/3| over " +
                         std::to_string(tiling.tiles.size()) + " tiles");
}

CheckReport area_audit(const config::TilingSpec& tiling, int segments_per_arc) {
  double worst = 0.0;
  for (int g = 1; g <= 2; ++g) {
    double total = 0.0;
    for (const auto* t : tiling.tiles_of(g)) {
      total += numeric_area_perimeter(t->shape, segments_per_arc).area;
    }
    worst = std::max(worst, std::abs(total - tiling.areas[g - 1]));
  }
  return make_report("area", worst, 0.0, 1e-6,
                     "absolute; max |numeric area - target| per generator, " +
                         std::to_string(segments_per_arc) + " segments per arc");
}

CheckReport perimeter_audit(const config::TilingSpec& tiling, int segments_per_arc) {
  double total = 0.0;
  for (const auto& t : tiling.tiles) {
    total += numeric_area_perimeter(t.shape, segments_per_arc).perimeter;
  }
  return make_report("perimeter", 0.5 * total, config::interface_length(tiling), 1e-6,
                     "absolute; numeric vs closed-form interface length, " +
                         std::to_string(segments_per_arc) + " segments per arc");
}

CheckReport cost_audit(const config::TilingSpec& tiling) {
  const double y = family_area(tiling);
  double expected = 0.0;
  if (tiling.kind == config::ConfigurationKind::C3312) {
    const auto& c = profile::constants();
    const double s = tiling.params.at("split");
    expected = c.q1 + c.m1 * std::sqrt(y) * (std::sqrt(s) + std::sqrt(1.0 - s));
  } else {
    expected = config::closed_form_cost(tiling.kind, y);
  }
  return make_report("cost", config::interface_length(tiling), expected, 1e-10,
                     "absolute; interface length vs family cost at x = " + fmt(y));
}

CheckReport adjacency_audit(const config::TilingSpec& tiling) {
  int worst = 0;
  std::map<int, int> component_count;
  for (const auto& t : tiling.tiles) {
    const int component = component_count[t.generator]++;
    worst = std::max(worst, lattice::adjacency_degree(tiling, t.generator, component));
  }
  return make_report("adjacency", std::max(0, worst - 6), 0.0, 0.0,
                     "absolute; excess of the largest adjacency degree (" +
                         std::to_string(worst) + ") over 6");
}

std::vector<CheckReport> run_all(const config::TilingSpec& tiling, int segments_per_arc,
                                 int samples, std::uint64_t seed) {
  return {area_audit(tiling, segments_per_arc),
          perimeter_audit(tiling, segments_per_arc),
          cost_audit(tiling),
          turning_sum_audit(tiling),
          junction_audit(tiling),
          pressure_curvature_audit(tiling),
          adjacency_audit(tiling),
          coverage_test(tiling, samples, seed)};
}

}  // namespace isotile::numcheck
