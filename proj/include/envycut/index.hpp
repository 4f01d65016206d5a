#pragma once

// Index of a region of the triangulated simplex, computed either from the
// cells inside it or from its boundary alone.
//
// Orientation (2D): "clockwise" is the orientation in which the big simplex's
// corners run D0 -> D1 -> D2. In cube coordinates (z1, z2) that is the
// counterclockwise sense of the standard axes. A Kuhn cell with the identity
// permutation lists its vertices clockwise in construction order; the other
// permutation lists them counterclockwise.

#include <array>
#include <functional>
#include <vector>

#include "envycut/coloring.hpp"
#include "envycut/simplex.hpp"

namespace envycut {

/// Axis-aligned box [lo, hi] in cube coordinates intersected with the big
/// simplex. Box faces sit on grid planes, so the region is a union of cells.
struct Region {
  std::vector<Coord> lo;
  std::vector<Coord> hi;
  Coord scale = 0;

  Region() = default;
  /// Throws DomainError unless 0 <= lo < hi <= scale on every axis.
  Region(std::vector<Coord> lo, std::vector<Coord> hi, Coord scale);
  static Region whole(int d, Coord n);

  int dim() const { return static_cast<int>(lo.size()); }
  Coord extent(int axis) const { return hi[axis] - lo[axis]; }
  /// Splits along `axis` at `cut`; returns (lower half, upper half).
  std::pair<Region, Region> split(int axis, Coord cut) const;
  bool contains_cell(const BaseCell& cell) const;
  std::string str() const;
};

/// +1 if the colors, listed clockwise, are 0,1,2 in clockwise order; -1 if
/// counterclockwise; 0 otherwise. Computed as the sum of the three edge signs.
int sign_of_cell_2d(const std::array<int, 3>& clockwise_colors);

/// Sign of a directed base edge: +1 for 0 -> 1, -1 for 1 -> 0, else 0.
inline int edge_sign(int from, int to) { return (from == 0 && to == 1) - (from == 1 && to == 0); }

/// The cell's vertices in clockwise order (cube coordinates).
std::array<CubePoint, 3> clockwise_vertices_2d(const BaseCell& cell);

/// Vertices of the polygon box ∩ simplex in clockwise order (possibly empty
/// when the intersection has no area).
std::vector<CubePoint> region_polygon_2d(const Region& region);

/// Signed index from the boundary: sum of edge signs of the boundary base
/// edges traversed clockwise. Queries only boundary points.
int index_2d(const Region& region, ColoringOracle& oracle);
/// Signed index as the sum of cell signs over every cell in the region.
int index_2d_by_cells(const Region& region, ColoringOracle& oracle);

/// A (d-1)-simplex on the region boundary, as its d vertices (cube coords).
using Face = std::vector<std::vector<Coord>>;

/// Enumerates the boundary (d-1)-faces of the region induced by Kuhn's
/// triangulation: faces on the box planes and, when requested, faces on the
/// simplex facets z_a = z_{a+1}.
void for_each_boundary_face(const Region& region, bool include_simplex_facets,
                            const std::function<void(const Face&)>& visit);

/// Parity of the boundary faces colored exactly {0, ..., d-1}.
///
/// With include_simplex_facets = false only box-plane faces are examined.
/// Faces on z_a = z_{a+1} lie where x_{a+1} = 0 and can never carry all of
/// {0..d-1} under a Sperner coloring, so for valid colorings both modes agree
/// and the cheaper one is used by the search.
int index_mod2_boundary(const Region& region, ColoringOracle& oracle, bool include_simplex_facets = true);

/// Number of fully colored cells in the region (exhaustive).
std::uint64_t count_fully_colored_cells(const Region& region, ColoringOracle& oracle);
inline int index_mod2_cells(const Region& region, ColoringOracle& oracle) {
  return static_cast<int>(count_fully_colored_cells(region, oracle) % 2);
}

bool is_fully_colored(std::vector<int> colors);

}  // namespace envycut
