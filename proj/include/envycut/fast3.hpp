#pragma once

// Three-player search in O(log^2 N) color queries.
//
// Points are written (i, j, k) = (x_0, x_1, x_2). A region V(i1, i2, k1, k2)
// is {i1 <= i <= i2, k1 <= k <= k2} inside the triangle; in cube coordinates
// it is the box z_1 in [N - i2, N - i1], z_2 in [k1, k2]. Its sides lie only
// on lines i = c, k = c and j = 0, along which each player's colors change
// monotonically, so every side's edge-sign sum follows from a handful of
// binary-searched change points.

#include <array>
#include <map>
#include <vector>

#include "envycut/coloring.hpp"
#include "envycut/index.hpp"
#include "envycut/search.hpp"

namespace envycut {

enum class LineKind { i_fixed, k_fixed, j_zero };

const char* to_string(LineKind kind);

/// A full grid line of the triangle, parameterized by t in [0, length()]:
///   i_fixed c: (c, N-c-t, t)   k_fixed c: (t, N-c-t, c)   j_zero: (t, 0, N-t)
struct BoundaryLine {
  LineKind kind = LineKind::i_fixed;
  Coord c = 0;
  Coord n = 0;

  BoundaryLine(LineKind kind, Coord c, Coord n);
  Coord length() const { return kind == LineKind::j_zero ? n : n - c; }
  BarycentricPoint point(Coord t) const;
  int label_at(Coord t) const;
  /// Colors of a single player along increasing t, in the only order they
  /// can appear (any of them may be missing).
  std::array<int, 3> color_order() const;
};

/// One player's colors along a line: colors[r] holds from starts[r] up to the
/// next start. Starts are on the player's sublattice (every third point).
struct ChangePoints {
  int player = 0;
  std::vector<int> colors;
  std::vector<Coord> starts;

  bool empty() const { return colors.empty(); }
  int color_at(Coord t) const;
  /// Positions where the color changes (starts after the first).
  std::vector<Coord> changes() const { return {starts.begin() + (starts.empty() ? 0 : 1), starts.end()}; }
};

/// Finds the player's change points on the line by two binary searches on
/// its sublattice. Every observed color is checked against the monotone
/// order; a violation raises InstanceInvalid.
ChangePoints change_points(ColoringOracle& oracle, const BoundaryLine& line, int player);

/// Change points for all three players, computed once per line (kind, c).
class LineCache {
 public:
  explicit LineCache(ColoringOracle& oracle) : oracle_(oracle) {}
  const std::array<ChangePoints, 3>& get(const BoundaryLine& line);
  /// Sum of edge signs over the base edges from t = from to t = to along the line.
  int edge_sign_sum(const BoundaryLine& line, Coord from, Coord to);
  std::size_t lines() const { return cache_.size(); }
  ColoringOracle& oracle() { return oracle_; }

 private:
  ColoringOracle& oracle_;
  std::map<std::pair<int, Coord>, std::array<ChangePoints, 3>> cache_;
};

struct Region3 {
  Coord i1 = 0, i2 = 0, k1 = 0, k2 = 0;
  Coord n = 0;

  Region3() = default;
  /// Throws DomainError unless 0 <= i1 < i2 <= N and 0 <= k1 < k2 <= N.
  Region3(Coord i1, Coord i2, Coord k1, Coord k2, Coord n);
  static Region3 whole(Coord n) { return Region3(0, n, 0, n, n); }
  Region box() const;
  std::string str() const;
};

/// Signed index of the region from the change points on its sides.
int boundary_index3(const Region3& region, LineCache& lines);

struct Fast3Step {
  Region3 region;
  bool cut_i = true;  // false: cut on k
  Coord cut = 0;
  int index_lower = 0;
  int index_upper = 0;
  bool took_lower = true;
  std::uint64_t queries = 0;  // distinct color queries so far
};

/// Fully colored cell for a three-player coloring. N >= 2.
SolutionCell solve3(ColoringOracle& oracle, std::vector<Fast3Step>* trace = nullptr);

}  // namespace envycut
