#include "isotile/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isotile/errors.hpp"

namespace isotile::geom {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

double distance(Vec2 a, Vec2 b) { return norm(b - a); }

Vec2 rotate(Vec2 a, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

Vec2 direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

Box Box::merged(const Box& o) const {
  return {{std::min(lo.x, o.lo.x), std::min(lo.y, o.lo.y)},
          {std::max(hi.x, o.hi.x), std::max(hi.y, o.hi.y)}};
}

void validate(const ArcEdge& e) {
  if (!is_finite(e.start) || !is_finite(e.end) || !std::isfinite(e.turn)) {
    throw InvalidEdgeError("edge has non-finite data");
  }
  if (!(e.chord() > 0.0)) {
    throw InvalidEdgeError("edge has zero chord");
  }
  if (std::abs(e.turn) > kPi) {
    throw InvalidEdgeError("edge turn exceeds pi");
  }
}

EdgeGeometry edge_geometry(const ArcEdge& e) {
  validate(e);
  const double c = e.chord();
  if (e.is_flat()) {
    return {std::nullopt, std::nullopt, c};
  }
  const double half = 0.5 * std::abs(e.turn);
  const double radius = c / (2.0 * std::sin(half));
  const Vec2 mid = 0.5 * (e.start + e.end);
  const Vec2 left = perp_left(e.end - e.start) / c;
  // Signed offset along the left normal: positive turn puts the center left.
  const double offset = 0.5 * c / std::tan(0.5 * e.turn);
  return {mid + offset * left, radius, radius * std::abs(e.turn)};
}

double arc_length(const ArcEdge& e) {
  const double c = e.chord();
  if (e.is_flat()) return c;
  const double half = 0.5 * std::abs(e.turn);
  return c * half / std::sin(half);
}

double signed_curvature(const ArcEdge& e) { return e.turn / arc_length(e); }

double start_tangent_angle(const ArcEdge& e) {
  const Vec2 d = e.end - e.start;
  return std::atan2(d.y, d.x) - 0.5 * e.turn;
}

double end_tangent_angle(const ArcEdge& e) {
  const Vec2 d = e.end - e.start;
  return std::atan2(d.y, d.x) + 0.5 * e.turn;
}

Vec2 point_at(const ArcEdge& e, double s) {
  if (e.is_flat()) return e.start + s * (e.end - e.start);
  const auto g = edge_geometry(e);
  return *g.center + rotate(e.start - *g.center, s * e.turn);
}

Box bounding_box(const ArcEdge& e) {
  Box b{{std::min(e.start.x, e.end.x), std::min(e.start.y, e.end.y)},
        {std::max(e.start.x, e.end.x), std::max(e.start.y, e.end.y)}};
  if (e.is_flat()) return b;
  const auto g = edge_geometry(e);
  const Vec2 c = *g.center;
  const double r = *g.radius;
  const Vec2 ds = e.start - c;
  const Vec2 de = e.end - c;
  // An axis extreme c + r*u lies on the arc when u is inside the swept wedge.
  const Vec2 axes[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (Vec2 u : axes) {
    const bool inside = e.turn > 0 ? (cross(ds, u) >= 0 && cross(u, de) >= 0)
                                   : (cross(ds, u) <= 0 && cross(u, de) <= 0);
    if (inside) {
      const Vec2 p = c + r * u;
      b = b.merged({p, p});
    }
  }
  return b;
}

bool operator==(const ArcEdge& a, const ArcEdge& b) {
  return a.start == b.start && a.end == b.end && a.turn == b.turn;
}

bool operator==(const CurvedPolygon& a, const CurvedPolygon& b) { return a.edges_ == b.edges_; }

namespace {

double signed_area(const std::vector<ArcEdge>& edges) {
  double shoelace = 0.0;
  double segments = 0.0;
  for (const auto& e : edges) {
    shoelace += cross(e.start, e.end);
    if (!e.is_flat()) {
      const double c = e.chord();
      const double r = c / (2.0 * std::sin(0.5 * std::abs(e.turn)));
      segments += 0.5 * r * r * (e.turn - std::sin(e.turn));
    }
  }
  return 0.5 * shoelace + segments;
}

}  // namespace

CurvedPolygon::CurvedPolygon(std::vector<ArcEdge> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 3) {
    throw GeometryError("curved polygon needs at least three edges");
  }
  for (const auto& e : edges_) validate(e);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& next = edges_[(i + 1) % edges_.size()];
    if (!(edges_[i].end == next.start)) {
      throw NotClosedError("edge " + std::to_string(i) + " does not end where edge " +
                           std::to_string((i + 1) % edges_.size()) + " starts");
    }
  }
  if (!(signed_area(edges_) > 0.0)) {
    throw GeometryError("curved polygon is not counter-clockwise");
  }
}

CurvedPolygon CurvedPolygon::from_vertices(std::span<const Vec2> vertices,
                                           std::span<const double> turns) {
  if (vertices.size() != turns.size()) {
    throw GeometryError("vertex and turn counts differ");
  }
  std::vector<ArcEdge> edges;
  edges.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    edges.push_back({vertices[i], vertices[(i + 1) % vertices.size()], turns[i]});
  }
  return CurvedPolygon(std::move(edges));
}

std::vector<Vec2> CurvedPolygon::vertices() const {
  std::vector<Vec2> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.start);
  return out;
}

CurvedPolygon CurvedPolygon::translated(Vec2 d) const { return transformed(0.0, 1.0, d); }

CurvedPolygon CurvedPolygon::transformed(double angle, double scale, Vec2 offset) const {
  // Transform each vertex once so shared endpoints stay bitwise equal.
  std::vector<Vec2> moved;
  moved.reserve(edges_.size());
  for (const auto& e : edges_) {
    const Vec2 p = angle == 0.0 ? e.start : rotate(e.start, angle);
    moved.push_back(scale * p + offset);
  }
  std::vector<ArcEdge> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out.push_back({moved[i], moved[(i + 1) % moved.size()], edges_[i].turn});
  }
  return CurvedPolygon(Unchecked{}, std::move(out));
}

double area(const CurvedPolygon& p) { return signed_area(p.edges()); }

double perimeter(const CurvedPolygon& p) {
  double total = 0.0;
  for (const auto& e : p.edges()) total += arc_length(e);
  return total;
}

double turning_sum(const CurvedPolygon& p) {
  double total = 0.0;
  for (const auto& e : p.edges()) total += e.turn;
  return total;
}

double chord_perimeter(const CurvedPolygon& p) {
  double total = 0.0;
  for (const auto& e : p.edges()) total += e.chord();
  return total;
}

Box bounding_box(const CurvedPolygon& p) {
  Box b = bounding_box(p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) b = b.merged(bounding_box(p[i]));
  return b;
}

double tripod_length(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 pts[] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    const Vec2 u = pts[(i + 1) % 3] - pts[i];
    const Vec2 v = pts[(i + 2) % 3] - pts[i];
    const double nu = norm(u);
    const double nv = norm(v);
    if (!(nu > 0.0) || !(nv > 0.0) || !std::isfinite(nu) || !std::isfinite(nv)) {
      throw NoInteriorSteinerPointError("degenerate triangle");
    }
    // angle >= 120 degrees  <=>  cos(angle) <= -1/2
    if (dot(u, v) / (nu * nv) <= -0.5) {
      throw NoInteriorSteinerPointError("triangle has an angle of at least 120 degrees");
    }
  }
  const Vec2 ab = b - a;
  const double side = cross(ab, c - a) > 0.0 ? -1.0 : 1.0;
  const Vec2 apex = a + rotate(ab, side * kPi / 3.0);
  return distance(c, apex);
}

}  // namespace isotile::geom
