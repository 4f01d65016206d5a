#pragma once

// Barycentric grid geometry and Kuhn's triangulation of the d-simplex.
//
// Two coordinate systems are used throughout:
//   * barycentric X = (x_0, ..., x_d), x_i >= 0, sum x_i = N. Piece i of the
//     cake cut encoded by X has length x_i / N.
//   * cube z = (z_1, ..., z_d) in [0, N]^d. The canonical big simplex is
//     N >= z_1 >= z_2 >= ... >= z_d >= 0, and
//     X = (N - z_1, z_1 - z_2, ..., z_{d-1} - z_d, z_d).
// Cube axes are 0-based in code: axis a holds z_{a+1}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace envycut {

using Coord = std::int64_t;

class BarycentricPoint {
 public:
  BarycentricPoint() = default;
  /// Throws DomainError unless all coords >= 0 and they sum to `scale`.
  BarycentricPoint(std::vector<Coord> coords, Coord scale);

  const std::vector<Coord>& coords() const { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord scale() const { return scale_; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }

  std::string str() const;

  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;
  friend auto operator<=>(const BarycentricPoint&, const BarycentricPoint&) = default;

 private:
  std::vector<Coord> coords_;
  Coord scale_ = 0;
};

class CubePoint {
 public:
  CubePoint() = default;
  /// Throws DomainError unless every coordinate lies in [0, scale].
  CubePoint(std::vector<Coord> coords, Coord scale);

  const std::vector<Coord>& coords() const { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord scale() const { return scale_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  /// True iff z_1 >= z_2 >= ... >= z_d (inside the canonical big simplex).
  bool in_big_simplex() const;

  std::string str() const;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
  friend auto operator<=>(const CubePoint&, const CubePoint&) = default;

 private:
  std::vector<Coord> coords_;
  Coord scale_ = 0;
};

/// A simplex of Kuhn's triangulation: the unit cube with lower corner `base`
/// walked along axes perm[0], perm[1], ... one unit step at a time.
struct BaseCell {
  std::vector<Coord> base;
  std::vector<int> perm;
  Coord scale = 0;

  int dim() const { return static_cast<int>(base.size()); }
  friend bool operator==(const BaseCell&, const BaseCell&) = default;
  friend auto operator<=>(const BaseCell&, const BaseCell&) = default;
};

enum class Adjacency { affine_adjacent, adjacent, neither };

/// W(X) = sum i * x_i mod (d+1): the player who controls vertex X.
int label(const BarycentricPoint& x);

BarycentricPoint cube_to_barycentric(const CubePoint& z);
CubePoint barycentric_to_cube(const BarycentricPoint& x);

/// The d+1 Kuhn vertices of the unit cube at `corner` walked in `perm` order.
/// Pure cube geometry: no simplex or range checks beyond perm validity.
std::vector<std::vector<Coord>> kuhn_vertices(std::span<const Coord> corner, std::span<const int> perm);

/// True iff every vertex of the cell lies in the canonical big simplex and
/// within [0, scale].
bool cell_in_simplex(const BaseCell& cell);

/// Cube-coordinate vertices v^0..v^d in construction order.
/// Throws DomainError if the cell escapes the big simplex.
std::vector<CubePoint> cell_vertices(const BaseCell& cell);
std::vector<BarycentricPoint> cell_vertices_barycentric(const BaseCell& cell);

/// All d! cells of the unit cube [corner, corner + 1], one per permutation in
/// lexicographic order. Cells may fall outside the canonical big simplex.
std::vector<BaseCell> cells_in_cube(std::span<const Coord> corner, Coord scale);

/// Max over vertex pairs of max_i |x_i - y_i| == 1.
bool cell_diameter_check(std::span<const BarycentricPoint> vertices);
bool cell_diameter_check(const BaseCell& cell);

Adjacency adjacency(const BarycentricPoint& x, const BarycentricPoint& y);

/// Number of cells in the big simplex at scale N (= N^d).
std::uint64_t simplex_cell_count(int d, Coord n);

/// Visits every base cell of the big simplex at scale N. Cells are generated
/// from (corner, permutation) keys; nothing is materialized. The visitor may
/// return false to stop early.
void for_each_simplex_cell(int d, Coord n, const std::function<bool(const BaseCell&)>& visit);

/// Visits the cells of the big simplex whose unit cube lies inside the box
/// [lo, hi] (cube coordinates, per axis lo < hi).
void for_each_cell_in_box(std::span<const Coord> lo, std::span<const Coord> hi, Coord n,
                          const std::function<bool(const BaseCell&)>& visit);

bool next_permutation(std::vector<int>& perm);
bool is_power_of_two(Coord n);

}  // namespace envycut

template <>
struct std::hash<envycut::BarycentricPoint> {
  std::size_t operator()(const envycut::BarycentricPoint& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.scale()) * 0x9e3779b97f4a7c15ULL;
    for (auto c : p.coords()) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL + 0x9e3779b9;
    return h;
  }
};
