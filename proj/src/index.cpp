#include "envycut/index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "envycut/errors.hpp"

namespace envycut {

Region::Region(std::vector<Coord> lo_, std::vector<Coord> hi_, Coord scale_)
    : lo(std::move(lo_)), hi(std::move(hi_)), scale(scale_) {
  if (lo.size() != hi.size() || lo.empty()) throw DomainError("region bounds must have matching, nonzero dimension");
  for (std::size_t a = 0; a < lo.size(); ++a) {
    if (lo[a] < 0 || hi[a] > scale || lo[a] >= hi[a]) throw DomainError("region bounds invalid: " + str());
  }
}

Region Region::whole(int d, Coord n) { return Region(std::vector<Coord>(d, 0), std::vector<Coord>(d, n), n); }

std::pair<Region, Region> Region::split(int axis, Coord cut) const {
  if (cut <= lo[axis] || cut >= hi[axis]) throw DomainError("split point outside the open range of the axis");
  Region lower = *this, upper = *this;
  lower.hi[axis] = cut;
  upper.lo[axis] = cut;
  return {lower, upper};
}

bool Region::contains_cell(const BaseCell& cell) const {
  for (int a = 0; a < dim(); ++a) {
    if (cell.base[a] < lo[a] || cell.base[a] + 1 > hi[a]) return false;
  }
  return cell_in_simplex(cell);
}

std::string Region::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t a = 0; a < lo.size(); ++a) os << (a ? " x " : "") << lo[a] << ".." << hi[a];
  os << "] N=" << scale;
  return os.str();
}

int sign_of_cell_2d(const std::array<int, 3>& c) {
  return edge_sign(c[0], c[1]) + edge_sign(c[1], c[2]) + edge_sign(c[2], c[0]);
}

std::array<CubePoint, 3> clockwise_vertices_2d(const BaseCell& cell) {
  if (cell.dim() != 2) throw DomainError("clockwise_vertices_2d needs a 2D cell");
  auto v = cell_vertices(cell);
  if (cell.perm[0] == 0) return {v[0], v[1], v[2]};
  return {v[2], v[1], v[0]};
}

std::vector<CubePoint> region_polygon_2d(const Region& region) {
  if (region.dim() != 2) throw DomainError("region_polygon_2d needs a 2D region");
  using P = std::array<Coord, 2>;
  // Rectangle counterclockwise in (z1, z2), i.e. clockwise in the drawing frame.
  std::vector<P> poly{{region.lo[0], region.lo[1]},
                      {region.hi[0], region.lo[1]},
                      {region.hi[0], region.hi[1]},
                      {region.lo[0], region.hi[1]}};
  // Clip by the half-plane z1 >= z2.
  auto inside = [](const P& p) { return p[0] >= p[1]; };
  std::vector<P> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& cur = poly[i];
    const P& nxt = poly[(i + 1) % poly.size()];
    if (inside(cur)) out.push_back(cur);
    if (inside(cur) != inside(nxt)) {
      // Edges are axis-aligned, so the crossing with z1 = z2 is a grid point.
      P x = cur[0] == nxt[0] ? P{cur[0], cur[0]} : P{cur[1], cur[1]};
      out.push_back(x);
    }
  }
  std::vector<P> dedup;
  for (const auto& p : out) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  // Drop collinear vertices and reject zero-area results.
  Coord area2 = 0;
  for (std::size_t i = 0; i < dedup.size(); ++i) {
    const P& a = dedup[i];
    const P& b = dedup[(i + 1) % dedup.size()];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  if (dedup.size() < 3 || area2 == 0) return {};
  std::vector<CubePoint> result;
  for (const auto& p : dedup) result.emplace_back(std::vector<Coord>{p[0], p[1]}, region.scale);
  return result;
}

int index_2d(const Region& region, ColoringOracle& oracle) {
  auto poly = region_polygon_2d(region);
  int index = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    const Coord d1 = q[0] - p[0], d2 = q[1] - p[1];
    const Coord s1 = (d1 > 0) - (d1 < 0), s2 = (d2 > 0) - (d2 < 0);
    const Coord steps = std::max(std::abs(d1), std::abs(d2));
    std::vector<Coord> z{p[0], p[1]};
    int prev = oracle.color(CubePoint(z, region.scale));
    for (Coord t = 0; t < steps; ++t) {
      z[0] += s1;
      z[1] += s2;
      int cur = oracle.color(CubePoint(z, region.scale));
      index += edge_sign(prev, cur);
      prev = cur;
    }
  }
  return index;
}

int index_2d_by_cells(const Region& region, ColoringOracle& oracle) {
  if (region.dim() != 2) throw DomainError("index_2d_by_cells needs a 2D region");
  int index = 0;
  for_each_cell_in_box(region.lo, region.hi, region.scale, [&](const BaseCell& cell) {
    auto v = clockwise_vertices_2d(cell);
    index += sign_of_cell_2d({oracle.color(v[0]), oracle.color(v[1]), oracle.color(v[2])});
    return true;
  });
  return index;
}

namespace {

// Enumerates Kuhn (d-1)-simplices whose coordinates are driven by `groups`:
// every axis in a group shares one coordinate and steps together. Axes not in
// any group are pinned to `fixed_value`. Each group g ranges over
// [group_lo[g], group_hi[g] - 1] as a corner coordinate.
void enumerate_group_faces(int d, Coord n, const std::vector<std::vector<int>>& groups, int fixed_axis,
                           Coord fixed_value, const std::vector<Coord>& group_lo, const std::vector<Coord>& group_hi,
                           const std::function<void(const Face&)>& visit) {
  const int k = static_cast<int>(groups.size());
  for (int g = 0; g < k; ++g) {
    if (group_hi[g] <= group_lo[g]) return;
  }
  auto sorted = [n](const std::vector<Coord>& v) {
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] < 0 || v[a] > n) return false;
      if (a > 0 && v[a - 1] < v[a]) return false;
    }
    return true;
  };
  std::vector<Coord> corner(group_lo);
  std::vector<int> perm(k);
  Face face(k + 1, std::vector<Coord>(d));
  while (true) {
    std::vector<Coord> base(d, 0);
    if (fixed_axis >= 0) base[fixed_axis] = fixed_value;
    for (int g = 0; g < k; ++g) {
      for (int a : groups[g]) base[a] = corner[g];
    }
    if (sorted(base)) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        face[0] = base;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
          face[i + 1] = face[i];
          for (int a : groups[perm[i]]) face[i + 1][a] += 1;
          ok = sorted(face[i + 1]);
        }
        if (ok) visit(face);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    int g = k - 1;
    while (g >= 0) {
      if (++corner[g] < group_hi[g]) break;
      corner[g] = group_lo[g];
      --g;
    }
    if (g < 0) return;
  }
}

}  // namespace

void for_each_boundary_face(const Region& region, bool include_simplex_facets,
                            const std::function<void(const Face&)>& visit) {
  const int d = region.dim();
  // Box planes z_a = lo_a and z_a = hi_a.
  for (int a = 0; a < d; ++a) {
    std::vector<std::vector<int>> groups;
    std::vector<Coord> glo, ghi;
    for (int b = 0; b < d; ++b) {
      if (b == a) continue;
      groups.push_back({b});
      glo.push_back(region.lo[b]);
      ghi.push_back(region.hi[b]);
    }
    enumerate_group_faces(d, region.scale, groups, a, region.lo[a], glo, ghi, visit);
    enumerate_group_faces(d, region.scale, groups, a, region.hi[a], glo, ghi, visit);
  }
  if (!include_simplex_facets) return;
  // Simplex facets z_a = z_{a+1} (barycentric x_{a+1} = 0).
  for (int a = 0; a + 1 < d; ++a) {
    std::vector<std::vector<int>> groups;
    std::vector<Coord> glo, ghi;
    for (int b = 0; b < d; ++b) {
      if (b == a + 1) continue;
      if (b == a) {
        groups.push_back({a, a + 1});
        glo.push_back(std::max(region.lo[a], region.lo[a + 1]));
        ghi.push_back(std::min(region.hi[a], region.hi[a + 1]));
      } else {
        groups.push_back({b});
        glo.push_back(region.lo[b]);
        ghi.push_back(region.hi[b]);
      }
    }
    enumerate_group_faces(d, region.scale, groups, -1, 0, glo, ghi, visit);
  }
}

bool is_fully_colored(std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int index_mod2_boundary(const Region& region, ColoringOracle& oracle, bool include_simplex_facets) {
  int parity = 0;
  std::vector<int> colors;
  for_each_boundary_face(region, include_simplex_facets, [&](const Face& face) {
    colors.clear();
    for (const auto& v : face) colors.push_back(oracle.color(CubePoint(v, region.scale)));
    if (is_fully_colored(colors)) parity ^= 1;
  });
  return parity;
}

std::uint64_t count_fully_colored_cells(const Region& region, ColoringOracle& oracle) {
  std::uint64_t count = 0;
  std::vector<int> colors;
  for_each_cell_in_box(region.lo, region.hi, region.scale, [&](const BaseCell& cell) {
    colors.clear();
    for (const auto& v : cell_vertices(cell)) colors.push_back(oracle.color(v));
    if (is_fully_colored(colors)) ++count;
    return true;
  });
  return count;
}

}  // namespace envycut
