#include "isotile/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "isotile/config.hpp"
#include "isotile/errors.hpp"

namespace isotile::lattice {

using geom::Box;
using geom::Vec2;

Lattice::Lattice(Vec2 g1, Vec2 g2) : g1_(g1), g2_(g2) {
  if (!geom::is_finite(g1) || !geom::is_finite(g2)) {
    throw SingularLatticeError("lattice generators must be finite");
  }
  if (determinant() == 0.0) {
    throw SingularLatticeError("lattice generators are linearly dependent");
  }
}

Vec2 Lattice::coordinates(Vec2 p) const {
  const double det = determinant();
  return {geom::cross(p, g2_) / det, geom::cross(g1_, p) / det};
}

Box Lattice::fundamental_box() const {
  const Vec2 h1 = 0.5 * g1_;
  const Vec2 h2 = 0.5 * g2_;
  const double ex = std::abs(h1.x) + std::abs(h2.x);
  const double ey = std::abs(h1.y) + std::abs(h2.y);
  return {{-ex, -ey}, {ex, ey}};
}

Lattice Lattice::normalized() const {
  const double s = 1.0 / std::sqrt(covolume(*this));
  return {s * g1_, s * g2_};
}

double covolume(const Lattice& lattice) { return std::abs(lattice.determinant()); }

std::vector<Cell> translates_in_window(const Lattice& lattice, const Box& window) {
  return translates_in_window(lattice, window, lattice.fundamental_box());
}

std::vector<Cell> translates_in_window(const Lattice& lattice, const Box& window,
                                       const Box& reference) {
  // reference + g meets window  <=>  g lies in window - reference (Minkowski),
  // a rectangle; its corners bound the candidate lattice coordinates.
  const Box shifted{window.lo - reference.hi, window.hi - reference.lo};
  const Vec2 corners[] = {shifted.lo, {shifted.hi.x, shifted.lo.y}, shifted.hi,
                          {shifted.lo.x, shifted.hi.y}};
  double smin = INFINITY, smax = -INFINITY, tmin = INFINITY, tmax = -INFINITY;
  for (Vec2 c : corners) {
    const Vec2 st = lattice.coordinates(c);
    smin = std::min(smin, st.x);
    smax = std::max(smax, st.x);
    tmin = std::min(tmin, st.y);
    tmax = std::max(tmax, st.y);
  }
  std::vector<Cell> out;
  for (int i = static_cast<int>(std::floor(smin)) - 1; i <= static_cast<int>(std::ceil(smax)) + 1;
       ++i) {
    for (int j = static_cast<int>(std::floor(tmin)) - 1;
         j <= static_cast<int>(std::ceil(tmax)) + 1; ++j) {
      const Cell cell{i, j};
      if (reference.translated(lattice.at(cell)).intersects(window)) out.push_back(cell);
    }
  }
  return out;
}

namespace {

constexpr double kMatchTolerance = 1e-9;

bool same_point(Vec2 a, Vec2 b) { return geom::distance(a, b) <= kMatchTolerance; }

}  // namespace

int adjacency_degree(const config::TilingSpec& tiling, int generator_index, int component) {
  const geom::CurvedPolygon* chosen = nullptr;
  int seen = 0;
  for (const auto& tile : tiling.tiles) {
    if (tile.generator != generator_index) continue;
    if (seen++ == component) {
      chosen = &tile.shape;
      break;
    }
  }
  if (chosen == nullptr || component < 0) {
    throw std::out_of_range("no component " + std::to_string(component) + " of generator " +
                            std::to_string(generator_index));
  }

  const Box box = geom::bounding_box(*chosen);
  const auto cells = translates_in_window(tiling.lattice, box.inflated(kMatchTolerance), box);
  std::set<Cell> neighbours;
  for (const Cell cell : cells) {
    if (cell == Cell{}) continue;
    const Vec2 offset = tiling.lattice.at(cell);
    bool shares = false;
    for (const auto& e : chosen->edges()) {
      for (const auto& f : chosen->edges()) {
        const auto moved = f.translated(offset);
        if (same_point(moved.start, e.end) && same_point(moved.end, e.start) &&
            std::abs(moved.turn + e.turn) <= kMatchTolerance) {
          shares = true;
          break;
        }
      }
      if (shares) break;
    }
    if (shares) neighbours.insert(cell);
  }
  return static_cast<int>(neighbours.size());
}

}  // namespace isotile::lattice
