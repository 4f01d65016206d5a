#include "envycut/reductions.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "envycut/errors.hpp"

namespace envycut {

namespace {

std::string pt(Coord x, Coord y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

void check_grid(Coord n, Coord x, Coord y) {
  if (x < 0 || y < 0 || x > n || y > n) throw DomainError("grid point " + pt(x, y) + " outside {0.." + std::to_string(n) + "}^2");
}

std::function<int(Coord, Coord)> grid_function(Coord n, std::vector<int> values) {
  const auto side = static_cast<std::size_t>(n + 1);
  if (n < 1 || values.size() != side * side) {
    throw SchemaError("grid needs (N+1)^2 = " + std::to_string(side * side) + " values, got " +
                      std::to_string(values.size()));
  }
  auto shared = std::make_shared<std::vector<int>>(std::move(values));
  return [shared, side](Coord x, Coord y) {
    return (*shared)[static_cast<std::size_t>(x) * side + static_cast<std::size_t>(y)];
  };
}

// Stateless 64-bit mix used to pick an axis per grid point from the seed.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int Brouwer2DInstance::at(Coord x, Coord y) const {
  check_grid(n, x, y);
  return f(x, y);
}

Brouwer2DInstance brouwer_from_grid(Coord n, std::vector<int> values) {
  Brouwer2DInstance inst;
  inst.n = n;
  inst.f = grid_function(n, std::move(values));
  return inst;
}

Brouwer2DInstance planted_brouwer_at(Coord n, Coord px, Coord py) {
  if (n < 3 || px < 1 || py < 1 || px > n - 2 || py > n - 2) {
    throw DomainError("plant " + pt(px, py) + " must lie in [1, N-2]^2 with N >= 3");
  }
  Brouwer2DInstance inst;
  inst.n = n;
  inst.plant = GridPoint{px, py};
  inst.f = [n, px, py](Coord x, Coord y) {
    if (x == 0) return 1;
    if (y == 0) return 2;
    if (x == n || y == n) return 0;
    if (x <= px) return 1;
    return y <= py ? 2 : 0;
  };
  return inst;
}

Brouwer2DInstance planted_brouwer(Coord n, std::uint64_t seed) {
  if (n < 4) throw DomainError("planted instances need N >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> pick(1, n - 2);
  const Coord px = pick(rng);
  const Coord py = pick(rng);
  auto inst = planted_brouwer_at(n, px, py);
  inst.seed = seed;
  return inst;
}

void validate_brouwer(const Brouwer2DInstance& inst) {
  const Coord n = inst.n;
  if (n < 1) throw InstanceInvalid("BROUWER grid needs N >= 1");
  auto expect = [&](Coord x, Coord y, int want) {
    int got = inst.at(x, y);
    if (got != want) {
      throw InstanceInvalid("BROUWER boundary violation: f" + pt(x, y) + " = " + std::to_string(got) + ", expected " +
                            std::to_string(want));
    }
  };
  for (Coord t = 0; t <= n; ++t) {
    expect(0, t, 1);
    if (t > 0) {
      expect(t, 0, 2);
      expect(t, n, 0);
      expect(n, t, 0);
    }
  }
  if (n <= 1024) {
    for (Coord x = 1; x < n; ++x) {
      for (Coord y = 1; y < n; ++y) {
        int v = inst.at(x, y);
        if (v < 0 || v > 2) throw InstanceInvalid("BROUWER value " + std::to_string(v) + " at " + pt(x, y));
      }
    }
  }
}

bool is_brouwer_solution(const Brouwer2DInstance& inst, Coord x, Coord y) {
  if (x < 0 || y < 0 || x + 1 > inst.n || y + 1 > inst.n) return false;
  std::set<int> seen{inst.at(x, y), inst.at(x + 1, y), inst.at(x, y + 1), inst.at(x + 1, y + 1)};
  return seen == std::set<int>{0, 1, 2};
}

ColoringOracle::Function embed_brouwer(const Brouwer2DInstance& inst) {
  validate_brouwer(inst);
  const Coord n = inst.n;
  const Coord big = 2 * n;
  auto color = [inst](const BarycentricPoint& p) {
    const Coord n = inst.n;
    const Coord gx = p[2];  // 2N - X
    const Coord gy = p[0];  // Y
    if (gx <= n && gy <= n) return inst.f(gx, gy);
    if (gy == 0) return 2;
    return 0;
  };
  // Sperner check on the whole triangle boundary: one of x_0, x_1, x_2 is 0.
  for (Coord t = 0; t <= big; ++t) {
    const BarycentricPoint pts[] = {BarycentricPoint({0, t, big - t}, big), BarycentricPoint({t, 0, big - t}, big),
                                    BarycentricPoint({t, big - t, 0}, big)};
    for (const auto& p : pts) {
      int c = color(p);
      if (c < 0 || c > 2 || p[c] == 0) {
        throw InstanceInvalid("embedded coloring violates the Sperner condition at " + p.str() + " (color " +
                              std::to_string(c) + ")");
      }
    }
  }
  return color;
}

ColoringOracle make_embedded_oracle(const Brouwer2DInstance& inst) {
  return ColoringOracle(2, 2 * inst.n, embed_brouwer(inst));
}

UnitSquare extract_brouwer(const SolutionCell& cell, const Brouwer2DInstance& inst) {
  if (cell.vertices.size() != 3) throw DomainError("BROUWER extraction needs a triangle");
  Coord gx = inst.n, gy = inst.n;
  for (const auto& v : cell.vertices) {
    if (v.scale() != 2 * inst.n) throw DomainError("cell is not on the embedded grid (scale 2N)");
    if (v[2] > inst.n || v[0] > inst.n) {
      throw DomainError("cell vertex " + v.str() + " lies outside the embedded square");
    }
    gx = std::min(gx, v[2]);
    gy = std::min(gy, v[0]);
  }
  if (gx + 1 > inst.n || gy + 1 > inst.n) throw DomainError("cell does not map to a unit square of the grid");
  UnitSquare sq;
  sq.corner = {gx, gy};
  sq.values = {inst.at(gx, gy), inst.at(gx + 1, gy), inst.at(gx, gy + 1), inst.at(gx + 1, gy + 1)};
  return sq;
}

int DirectionPreservingInstance::at(Coord x, Coord y) const {
  check_grid(n, x, y);
  return f(x, y);
}

std::optional<int> dp_boundary_code(Coord n, Coord x, Coord y) {
  if (x == 0) return 1;
  if (y == 0) return 2;
  if (x == n) return -1;
  if (y == n) return -2;
  return std::nullopt;
}

DirectionPreservingInstance dp_from_grid(Coord n, std::vector<int> values) {
  DirectionPreservingInstance inst;
  inst.n = n;
  inst.f = grid_function(n, std::move(values));
  return inst;
}

DirectionPreservingInstance random_dp_instance(Coord n, std::uint64_t seed) {
  if (n < 4) throw DomainError("direction-preserving instances need N >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> pick(1, n - 1);
  const Coord zx = pick(rng);
  const Coord zy = pick(rng);
  DirectionPreservingInstance inst;
  inst.n = n;
  inst.zero = GridPoint{zx, zy};
  inst.seed = seed;
  inst.f = [n, zx, zy, seed](Coord x, Coord y) {
    if (auto b = dp_boundary_code(n, x, y)) return *b;
    const bool dx = x != zx, dy = y != zy;
    if (!dx && !dy) return 0;
    bool use_x = dx;
    if (dx && dy) {
      use_x = (mix(seed ^ mix(static_cast<std::uint64_t>(x) * 0x100000001b3ULL + static_cast<std::uint64_t>(y))) & 1) == 0;
    }
    if (use_x) return x < zx ? 1 : -1;
    return y < zy ? 2 : -2;
  };
  return inst;
}

namespace {

std::array<int, 2> vec_of(int code) {
  switch (code) {
    case 0:
      return {0, 0};
    case 1:
      return {1, 0};
    case -1:
      return {-1, 0};
    case 2:
      return {0, 1};
    case -2:
      return {0, -1};
  }
  throw InstanceInvalid("direction code " + std::to_string(code) + " is not one of 0, +-1, +-2");
}

void check_point(const DirectionPreservingInstance& inst, Coord x, Coord y) {
  auto v = vec_of(inst.at(x, y));
  const Coord nx = x + v[0], ny = y + v[1];
  if (nx < 0 || ny < 0 || nx > inst.n || ny > inst.n) {
    throw InstanceInvalid("direction at " + pt(x, y) + " leaves the grid");
  }
}

void check_pair(const DirectionPreservingInstance& inst, Coord x, Coord y, Coord u, Coord w) {
  auto a = vec_of(inst.at(x, y));
  auto b = vec_of(inst.at(u, w));
  if (a[0] * b[0] + a[1] * b[1] < 0) {
    throw InstanceInvalid("not direction-preserving: opposite directions at " + pt(x, y) + " and " + pt(u, w));
  }
}

}  // namespace

void validate_dp(const DirectionPreservingInstance& inst, std::uint64_t samples, std::uint64_t exhaustive_limit) {
  const Coord n = inst.n;
  if (n < 1) throw InstanceInvalid("grid needs N >= 1");
  const auto points = static_cast<std::uint64_t>((n + 1) * (n + 1));
  if (points <= exhaustive_limit) {
    for (Coord x = 0; x <= n; ++x) {
      for (Coord y = 0; y <= n; ++y) {
        check_point(inst, x, y);
        for (Coord u = x; u <= std::min(n, x + 1); ++u) {
          for (Coord w = std::max<Coord>(0, y - 1); w <= std::min(n, y + 1); ++w) {
            if (u == x && w <= y) continue;
            check_pair(inst, x, y, u, w);
          }
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(inst.seed.value_or(0) ^ 0x5eedULL);
  std::uniform_int_distribution<Coord> coord(0, n);
  std::uniform_int_distribution<int> step(-1, 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Coord x = coord(rng), y = coord(rng);
    const Coord u = std::clamp<Coord>(x + step(rng), 0, n), w = std::clamp<Coord>(y + step(rng), 0, n);
    check_point(inst, x, y);
    check_pair(inst, x, y, u, w);
  }
}

Brouwer2DInstance dp_to_coloring(const DirectionPreservingInstance& inst) {
  Brouwer2DInstance h;
  h.n = inst.n;
  h.seed = inst.seed;
  h.f = [inst](Coord x, Coord y) {
    int code = inst.f(x, y);
    return code > 0 ? code : 0;
  };
  return h;
}

std::vector<GridPoint> zeros_in_square(const DirectionPreservingInstance& inst, GridPoint c) {
  std::vector<GridPoint> out;
  for (Coord dx = 0; dx <= 1; ++dx) {
    for (Coord dy = 0; dy <= 1; ++dy) {
      if (inst.at(c.x + dx, c.y + dy) == 0) out.push_back({c.x + dx, c.y + dy});
    }
  }
  return out;
}

}  // namespace envycut
