#include "envycut/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "envycut/errors.hpp"

namespace envycut {

namespace {

std::string join(const std::vector<Coord>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool valid_perm(std::span<const int> perm, int d) {
  if (static_cast<int>(perm.size()) != d) return false;
  std::vector<bool> seen(d, false);
  for (int a : perm) {
    if (a < 0 || a >= d || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

bool sorted_in_range(const std::vector<Coord>& z, Coord n) {
  for (std::size_t a = 0; a < z.size(); ++a) {
    if (z[a] < 0 || z[a] > n) return false;
    if (a > 0 && z[a - 1] < z[a]) return false;
  }
  return true;
}

}  // namespace

BarycentricPoint::BarycentricPoint(std::vector<Coord> coords, Coord scale)
    : coords_(std::move(coords)), scale_(scale) {
  if (coords_.size() < 2) throw DomainError("barycentric point needs at least 2 coordinates");
  Coord sum = 0;
  for (auto c : coords_) {
    if (c < 0) throw DomainError("barycentric coordinate is negative in " + join(coords_));
    sum += c;
  }
  if (sum != scale_) {
    throw DomainError("barycentric coordinates " + join(coords_) + " do not sum to N=" + std::to_string(scale_));
  }
}

std::string BarycentricPoint::str() const { return join(coords_); }

CubePoint::CubePoint(std::vector<Coord> coords, Coord scale) : coords_(std::move(coords)), scale_(scale) {
  if (coords_.empty()) throw DomainError("cube point needs at least 1 coordinate");
  for (auto c : coords_) {
    if (c < 0 || c > scale_) throw DomainError("cube coordinate out of [0,N] in " + join(coords_));
  }
}

bool CubePoint::in_big_simplex() const { return std::is_sorted(coords_.rbegin(), coords_.rend()); }

std::string CubePoint::str() const { return join(coords_); }

int label(const BarycentricPoint& x) {
  const auto& c = x.coords();
  const Coord mod = static_cast<Coord>(c.size());
  Coord w = 0;
  for (std::size_t i = 1; i < c.size(); ++i) w = (w + static_cast<Coord>(i) * (c[i] % mod)) % mod;
  return static_cast<int>(w);
}

BarycentricPoint cube_to_barycentric(const CubePoint& z) {
  if (!z.in_big_simplex()) throw DomainError("cube point " + z.str() + " is not sorted nonincreasing");
  const auto& c = z.coords();
  const std::size_t d = c.size();
  std::vector<Coord> x(d + 1);
  x[0] = z.scale() - c[0];
  for (std::size_t k = 1; k < d; ++k) x[k] = c[k - 1] - c[k];
  x[d] = c[d - 1];
  return BarycentricPoint(std::move(x), z.scale());
}

CubePoint barycentric_to_cube(const BarycentricPoint& x) {
  const auto& c = x.coords();
  const std::size_t d = c.size() - 1;
  std::vector<Coord> z(d);
  // z_k = N - (x_0 + ... + x_{k-1})
  Coord prefix = 0;
  for (std::size_t k = 0; k < d; ++k) {
    prefix += c[k];
    z[k] = x.scale() - prefix;
  }
  return CubePoint(std::move(z), x.scale());
}

std::vector<std::vector<Coord>> kuhn_vertices(std::span<const Coord> corner, std::span<const int> perm) {
  const int d = static_cast<int>(corner.size());
  if (!valid_perm(perm, d)) throw DomainError("invalid Kuhn permutation");
  std::vector<std::vector<Coord>> out;
  out.reserve(d + 1);
  std::vector<Coord> v(corner.begin(), corner.end());
  out.push_back(v);
  for (int i = 0; i < d; ++i) {
    v[perm[i]] += 1;
    out.push_back(v);
  }
  return out;
}

bool cell_in_simplex(const BaseCell& cell) {
  if (!valid_perm(cell.perm, cell.dim())) return false;
  // The chain v^0 <= ... <= v^d is coordinatewise monotone, so it suffices to
  // check v^0 >= 0, v^d <= N, and that every vertex is sorted.
  for (const auto& v : kuhn_vertices(cell.base, cell.perm)) {
    if (!sorted_in_range(v, cell.scale)) return false;
  }
  return true;
}

std::vector<CubePoint> cell_vertices(const BaseCell& cell) {
  if (!cell_in_simplex(cell)) {
    throw DomainError("cell at " + join(cell.base) + " escapes the big simplex");
  }
  std::vector<CubePoint> out;
  for (auto& v : kuhn_vertices(cell.base, cell.perm)) out.emplace_back(std::move(v), cell.scale);
  return out;
}

std::vector<BarycentricPoint> cell_vertices_barycentric(const BaseCell& cell) {
  std::vector<BarycentricPoint> out;
  for (const auto& z : cell_vertices(cell)) out.push_back(cube_to_barycentric(z));
  return out;
}

bool next_permutation(std::vector<int>& perm) { return std::next_permutation(perm.begin(), perm.end()); }

std::vector<BaseCell> cells_in_cube(std::span<const Coord> corner, Coord scale) {
  const int d = static_cast<int>(corner.size());
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BaseCell> out;
  do {
    out.push_back(BaseCell{std::vector<Coord>(corner.begin(), corner.end()), perm, scale});
  } while (next_permutation(perm));
  return out;
}

bool cell_diameter_check(std::span<const BarycentricPoint> vertices) {
  Coord diam = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const auto& x = vertices[a].coords();
      const auto& y = vertices[b].coords();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) diam = std::max(diam, x[i] > y[i] ? x[i] - y[i] : y[i] - x[i]);
    }
  }
  return diam == 1;
}

bool cell_diameter_check(const BaseCell& cell) {
  auto verts = cell_vertices_barycentric(cell);
  return cell_diameter_check(std::span<const BarycentricPoint>(verts));
}

Adjacency adjacency(const BarycentricPoint& x, const BarycentricPoint& y) {
  if (x.scale() != y.scale() || x.dim() != y.dim()) throw DomainError("adjacency needs points on the same grid");
  for (int i = 1; i <= x.dim(); ++i) {
    if (std::abs(x[i] - y[i]) > 1) return Adjacency::neither;
  }
  return std::abs(x[0] - y[0]) <= 1 ? Adjacency::affine_adjacent : Adjacency::adjacent;
}

std::uint64_t simplex_cell_count(int d, Coord n) {
  std::uint64_t c = 1;
  for (int i = 0; i < d; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

void for_each_cell_in_box(std::span<const Coord> lo, std::span<const Coord> hi, Coord n,
                          const std::function<bool(const BaseCell&)>& visit) {
  const int d = static_cast<int>(lo.size());
  for (int a = 0; a < d; ++a) {
    if (hi[a] <= lo[a]) return;
  }
  // Corners c with lo <= c <= hi - 1, c sorted nonincreasing, c_0 <= n - 1.
  std::vector<Coord> c(lo.begin(), lo.end());
  std::vector<int> perm(d);
  while (true) {
    bool sorted = true;
    for (int a = 1; a < d && sorted; ++a) sorted = c[a - 1] >= c[a];
    if (sorted && c[0] + 1 <= n) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        // When c_a == c_{a+1}, axis a must be stepped before axis a+1.
        bool ok = true;
        for (int a = 0; a + 1 < d && ok; ++a) {
          if (c[a] == c[a + 1]) {
            auto pa = std::find(perm.begin(), perm.end(), a);
            auto pb = std::find(perm.begin(), perm.end(), a + 1);
            ok = pa < pb;
          }
        }
        if (ok && !visit(BaseCell{c, perm, n})) return;
      } while (next_permutation(perm));
    }
    int a = d - 1;
    while (a >= 0) {
      if (++c[a] < hi[a]) break;
      c[a] = lo[a];
      --a;
    }
    if (a < 0) return;
  }
}

void for_each_simplex_cell(int d, Coord n, const std::function<bool(const BaseCell&)>& visit) {
  std::vector<Coord> lo(d, 0), hi(d, n);
  for_each_cell_in_box(lo, hi, n, visit);
}

bool is_power_of_two(Coord n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace envycut
