#pragma once

#include <vector>

#include "isotile/geom.hpp"

namespace isotile::config {
struct TilingSpec;
}

namespace isotile::lattice {

/// Integer lattice coordinates (i, j) of the vector i*g1 + j*g2.
struct Cell {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

/// One translate E_k + g of a generator tile.
struct TileInstance {
  int generator_index = 1;  ///< 1 or 2
  Cell cell;
};

/// Translation lattice spanned by two independent generators.
class Lattice {
 public:
  /// Throws SingularLatticeError for non-finite or dependent generators.
  Lattice(geom::Vec2 g1, geom::Vec2 g2);

  geom::Vec2 g1() const { return g1_; }
  geom::Vec2 g2() const { return g2_; }
  /// det(g1, g2); sign gives the handedness of the generator pair.
  double determinant() const { return geom::cross(g1_, g2_); }
  geom::Vec2 at(Cell c) const { return c.i * g1_ + c.j * g2_; }
  /// Real lattice coordinates (s, t) with p = s*g1 + t*g2.
  geom::Vec2 coordinates(geom::Vec2 p) const;
  /// Bounding box of the origin-centred fundamental parallelogram
  /// { s*g1 + t*g2 : s, t in [-1/2, 1/2] }.
  geom::Box fundamental_box() const;
  /// Same lattice shape scaled to covolume 1.
  Lattice normalized() const;

 private:
  geom::Vec2 g1_;
  geom::Vec2 g2_;
};

/// |det(g1, g2)|.
double covolume(const Lattice& lattice);

/// All cells g whose translate of the fundamental box meets the window,
/// sorted by (i, j).
std::vector<Cell> translates_in_window(const Lattice& lattice, const geom::Box& window);

/// As above with an explicit reference box (for instance the bounding box of
/// a tile) in place of the fundamental box.
std::vector<Cell> translates_in_window(const Lattice& lattice, const geom::Box& window,
                                       const geom::Box& reference);

/// Number of distinct nonzero translates of the chosen connected component of
/// generator `generator_index` that share a positive-length edge with it.
/// `component` indexes the tiles of that generator in TilingSpec order.
/// Throws std::out_of_range for a missing generator or component.
int adjacency_degree(const config::TilingSpec& tiling, int generator_index, int component = 0);

}  // namespace isotile::lattice
