#pragma once

// Instance generators built from grid fixed-point problems.
//
// A BROUWER instance colors the grid {0..N}^2 with {0,1,2} so that
//   f(0, y) = 1, f(x, 0) = 2 for x > 0, and f(x, N) = f(N, y) = 0 for x, y > 0.
// Embedding it in the triangle at scale 2N makes every fully colored cell a
// unit square of the grid carrying all three colors.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "envycut/coloring.hpp"
#include "envycut/search.hpp"

namespace envycut {

struct GridPoint {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct Brouwer2DInstance {
  Coord n = 0;
  std::function<int(Coord, Coord)> f;
  std::optional<GridPoint> plant;      // lower-left corner of the planted square
  std::optional<std::uint64_t> seed;

  /// f(x, y); throws DomainError off the grid.
  int at(Coord x, Coord y) const;
};

/// Grid values in x-major order: values[x * (n + 1) + y].
Brouwer2DInstance brouwer_from_grid(Coord n, std::vector<int> values);
/// Single solution square with lower-left corner (px, py), 1 <= px, py <= N-2.
Brouwer2DInstance planted_brouwer_at(Coord n, Coord px, Coord py);
/// Planted instance with the corner drawn from `seed`. N >= 4.
Brouwer2DInstance planted_brouwer(Coord n, std::uint64_t seed);
/// Throws InstanceInvalid on a value outside {0,1,2} or a boundary violation.
void validate_brouwer(const Brouwer2DInstance& inst);
bool is_brouwer_solution(const Brouwer2DInstance& inst, Coord x, Coord y);

/// Coloring of the triangle at scale 2N. With (X, Y) = (x_1 + x_0, x_0) the
/// triangle is <(0,0), (2N,0), (2N,2N)> and
///   color(X, Y) = f(2N - X, Y)  when 2N - X <= N and Y <= N,
///               = 2              when Y = 0,
///               = 0              otherwise.
/// Validates the instance and every point of the triangle's boundary first.
ColoringOracle::Function embed_brouwer(const Brouwer2DInstance& inst);
ColoringOracle make_embedded_oracle(const Brouwer2DInstance& inst);

struct UnitSquare {
  GridPoint corner;             // lower-left
  std::array<int, 4> values{};  // f at (x,y), (x+1,y), (x,y+1), (x+1,y+1)
};

/// Maps a fully colored cell of the embedded triangle back to its grid
/// square. Throws DomainError if the cell lies outside the embedded square.
UnitSquare extract_brouwer(const SolutionCell& cell, const Brouwer2DInstance& inst);

/// Direction-preserving function on {0..N}^2 with values coded
/// 0, +1, -1, +2, -2 for 0, +e1, -e1, +e2, -e2.
struct DirectionPreservingInstance {
  Coord n = 0;
  std::function<int(Coord, Coord)> f;
  std::optional<GridPoint> zero;
  std::optional<std::uint64_t> seed;

  int at(Coord x, Coord y) const;
};

/// Codes of the outer layer: +e1 on x = 0; +e2 on y = 0 (x > 0); -e1 on
/// x = N (y > 0); -e2 on y = N (0 < x < N). Empty inside.
std::optional<int> dp_boundary_code(Coord n, Coord x, Coord y);

DirectionPreservingInstance dp_from_grid(Coord n, std::vector<int> values);
/// Seeded instance with a single zero inside [1, N-1]^2. Every other inner
/// point moves one unit toward the zero along a seeded choice of axis. N >= 4.
DirectionPreservingInstance random_dp_instance(Coord n, std::uint64_t seed);

/// Checks value codes, boundedness (x + f(x) stays on the grid) and
/// f(x).f(y) >= 0 for |x - y|_inf <= 1: exhaustively when the grid has at
/// most `exhaustive_limit` points, else on `samples` seeded random pairs.
/// Throws InstanceInvalid on failure.
void validate_dp(const DirectionPreservingInstance& inst, std::uint64_t samples = 10000,
                 std::uint64_t exhaustive_limit = 1u << 20);

/// h(x) = 0 if f(x) <= 0, i if f(x) = e_i. The result is a BROUWER instance.
Brouwer2DInstance dp_to_coloring(const DirectionPreservingInstance& inst);

/// Grid points of the square with lower-left corner `corner` where f = 0.
std::vector<GridPoint> zeros_in_square(const DirectionPreservingInstance& inst, GridPoint corner);

}  // namespace envycut
