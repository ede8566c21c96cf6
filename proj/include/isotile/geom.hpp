#pragma once

// Exact kernel for planar curvilinear polygons whose edges are circular arcs
// or straight segments.
//
// An edge is stored as its two endpoints plus the signed angle its tangent
// turns through while running from start to end. turn == 0 is a straight
// segment. Polygons are counter-clockwise, so turn > 0 means the edge bulges
// away from the interior (a convex edge) and turn < 0 means it bulges inward.

#include <optional>
#include <span>
#include <vector>

namespace isotile::geom {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr Vec2 perp_left(Vec2 a) { return {-a.y, a.x}; }
double norm(Vec2 a);
double distance(Vec2 a, Vec2 b);
Vec2 rotate(Vec2 a, double angle);
/// Unit vector at the given polar angle.
Vec2 direction(double angle);
bool is_finite(Vec2 a);

/// Axis-aligned rectangle; lo <= hi componentwise.
struct Box {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  bool contains(Vec2 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  bool intersects(const Box& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
  }
  Box translated(Vec2 d) const { return {lo + d, hi + d}; }
  Box inflated(double m) const { return {{lo.x - m, lo.y - m}, {hi.x + m, hi.y + m}}; }
  Box merged(const Box& o) const;
};

struct ArcEdge {
  Vec2 start;
  Vec2 end;
  double turn = 0.0;  ///< radians, in [-pi, pi]; 0 is a straight segment

  double chord() const { return distance(start, end); }
  bool is_flat() const { return turn == 0.0; }
  ArcEdge reversed() const { return {end, start, -turn}; }
  ArcEdge translated(Vec2 d) const { return {start + d, end + d, turn}; }
};

/// Throws InvalidEdgeError unless the edge has finite data, a positive chord
/// and |turn| <= pi.
void validate(const ArcEdge& e);

struct EdgeGeometry {
  std::optional<Vec2> center;
  std::optional<double> radius;
  double arc_length = 0.0;
};

/// Reconstructs the supporting circle. The center lies left of the chord when
/// turn > 0 and right of it when turn < 0.
EdgeGeometry edge_geometry(const ArcEdge& e);

double arc_length(const ArcEdge& e);
/// Signed curvature turn / arc_length; positive for convex edges.
double signed_curvature(const ArcEdge& e);
/// Polar angle of the tangent leaving e.start.
double start_tangent_angle(const ArcEdge& e);
/// Polar angle of the tangent arriving at e.end.
double end_tangent_angle(const ArcEdge& e);
/// Point of the edge at parameter s in [0, 1] (proportional to arc length).
Vec2 point_at(const ArcEdge& e, double s);
/// Tight bounding box of the edge, including circle extremes on the arc.
Box bounding_box(const ArcEdge& e);

/// Closed chain of edges, counter-clockwise, with bitwise-equal shared
/// endpoints between consecutive edges.
class CurvedPolygon {
 public:
  /// Validates every edge, closure (NotClosedError), at least three edges and
  /// positive orientation (GeometryError).
  explicit CurvedPolygon(std::vector<ArcEdge> edges);

  /// Builds edge i from vertices[i] to vertices[i + 1 mod n] with turns[i].
  static CurvedPolygon from_vertices(std::span<const Vec2> vertices,
                                     std::span<const double> turns);

  const std::vector<ArcEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  const ArcEdge& operator[](std::size_t i) const { return edges_[i]; }
  std::vector<Vec2> vertices() const;

  CurvedPolygon translated(Vec2 d) const;
  /// Rotation by angle about the origin, uniform scaling, then translation.
  CurvedPolygon transformed(double angle, double scale, Vec2 offset) const;

  friend bool operator==(const CurvedPolygon& a, const CurvedPolygon& b);

 private:
  struct Unchecked {};
  CurvedPolygon(Unchecked, std::vector<ArcEdge> edges) : edges_(std::move(edges)) {}

  std::vector<ArcEdge> edges_;
};

bool operator==(const ArcEdge& a, const ArcEdge& b);

/// Enclosed area: shoelace over chords plus the signed circular segment
/// r^2/2 (turn - sin turn) of every arc.
double area(const CurvedPolygon& p);
double perimeter(const CurvedPolygon& p);
/// Sum of edge turns. For 120-degree junction polygons with n edges this is
/// (6 - n) * pi / 3.
double turning_sum(const CurvedPolygon& p);
/// Perimeter of the straight-chord polygon through the same vertices.
double chord_perimeter(const CurvedPolygon& p);
Box bounding_box(const CurvedPolygon& p);

/// Length of the Steiner tripod joining a, b, c through an interior
/// 120-degree junction, via Melzak's construction: the tripod has the length
/// of the segment from c to the apex of the equilateral triangle erected on
/// ab away from c. Throws NoInteriorSteinerPointError if any angle of the
/// triangle is >= 120 degrees or the points are degenerate.
double tripod_length(Vec2 a, Vec2 b, Vec2 c);

}  // namespace isotile::geom
