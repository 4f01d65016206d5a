#include "envycut/fast3.hpp"

#include <algorithm>
#include <sstream>

#include "envycut/errors.hpp"

namespace envycut {

const char* to_string(LineKind kind) {
  switch (kind) {
    case LineKind::i_fixed:
      return "i";
    case LineKind::k_fixed:
      return "k";
    case LineKind::j_zero:
      return "j0";
  }
  return "?";
}

BoundaryLine::BoundaryLine(LineKind kind_, Coord c_, Coord n_) : kind(kind_), c(c_), n(n_) {
  if (kind == LineKind::j_zero) c = 0;
  if (c < 0 || c > n) throw DomainError("line constant outside [0, N]");
}

BarycentricPoint BoundaryLine::point(Coord t) const {
  if (t < 0 || t > length()) throw DomainError("line parameter out of range");
  switch (kind) {
    case LineKind::i_fixed:
      return BarycentricPoint({c, n - c - t, t}, n);
    case LineKind::k_fixed:
      return BarycentricPoint({t, n - c - t, c}, n);
    case LineKind::j_zero:
      break;
  }
  return BarycentricPoint({t, 0, n - t}, n);
}

int BoundaryLine::label_at(Coord t) const {
  Coord w = 0;
  switch (kind) {
    case LineKind::i_fixed:
      w = n - c + t;
      break;
    case LineKind::k_fixed:
      w = n + c - t;
      break;
    case LineKind::j_zero:
      w = 2 * (n - t);
      break;
  }
  return static_cast<int>(((w % 3) + 3) % 3);
}

std::array<int, 3> BoundaryLine::color_order() const {
  switch (kind) {
    case LineKind::i_fixed:
      return {1, 0, 2};
    case LineKind::k_fixed:
      return {1, 2, 0};
    case LineKind::j_zero:
      break;
  }
  return {2, 1, 0};
}

int ChangePoints::color_at(Coord t) const {
  auto it = std::upper_bound(starts.begin(), starts.end(), t);
  if (it == starts.begin()) throw DomainError("position precedes the player's first point on the line");
  return colors[static_cast<std::size_t>(it - starts.begin()) - 1];
}

ChangePoints change_points(ColoringOracle& oracle, const BoundaryLine& line, int player) {
  ChangePoints cp;
  cp.player = player;
  const Coord len = line.length();
  Coord t0 = 0;
  while (t0 <= 2 && t0 <= len && line.label_at(t0) != player) ++t0;
  if (t0 > len || line.label_at(t0) != player) return cp;
  const Coord m_count = (len - t0) / 3 + 1;
  const auto order = line.color_order();
  auto rank = [&](int color) {
    for (int r = 0; r < 3; ++r) {
      if (order[r] == color) return r;
    }
    return -1;
  };
  std::vector<std::pair<Coord, int>> seen;
  auto col = [&](Coord m) {
    int c = oracle.color(line.point(t0 + 3 * m));
    seen.emplace_back(m, c);
    return c;
  };
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "non-monotone colors for player " << player << " on line " << to_string(line.kind) << "=" << line.c
       << " (N=" << line.n << "): " << why;
    throw InstanceInvalid(os.str());
  };

  const int first = col(0);
  const int last = m_count > 1 ? col(m_count - 1) : first;
  cp.colors.push_back(first);
  cp.starts.push_back(t0);
  if (first != last) {
    Coord lo = 0, hi = m_count - 1;  // col(lo) == first, col(hi) != first
    while (hi - lo > 1) {
      Coord mid = lo + (hi - lo) / 2;
      (col(mid) == first ? lo : hi) = mid;
    }
    const Coord m1 = hi;
    const int c1 = oracle.color(line.point(t0 + 3 * m1));
    cp.colors.push_back(c1);
    cp.starts.push_back(t0 + 3 * m1);
    if (c1 != last) {
      lo = m1;
      hi = m_count - 1;  // col(lo) != last, col(hi) == last
      while (hi - lo > 1) {
        Coord mid = lo + (hi - lo) / 2;
        (col(mid) == last ? hi : lo) = mid;
      }
      cp.colors.push_back(last);
      cp.starts.push_back(t0 + 3 * hi);
    }
  }
  for (int c : cp.colors) {
    if (rank(c) < 0) fail("color " + std::to_string(c) + " cannot occur on this line");
  }
  for (std::size_t r = 1; r < cp.colors.size(); ++r) {
    if (rank(cp.colors[r - 1]) >= rank(cp.colors[r])) fail("colors out of order");
  }
  for (const auto& [m, c] : seen) {
    if (cp.color_at(t0 + 3 * m) != c) fail("observed color " + std::to_string(c) + " at t=" + std::to_string(t0 + 3 * m));
  }
  return cp;
}

const std::array<ChangePoints, 3>& LineCache::get(const BoundaryLine& line) {
  auto key = std::make_pair(static_cast<int>(line.kind), line.c);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::array<ChangePoints, 3> cps;
  for (int p = 0; p < 3; ++p) cps[p] = change_points(oracle_, line, p);
  return cache_.emplace(key, std::move(cps)).first->second;
}

int LineCache::edge_sign_sum(const BoundaryLine& line, Coord from, Coord to) {
  if (from == to) return 0;
  if (from > to) return -edge_sign_sum(line, to, from);
  const auto& cps = get(line);
  auto color = [&](Coord t) { return cps[line.label_at(t)].color_at(t); };
  auto e = [&](Coord t) { return edge_sign(color(t), color(t + 1)); };
  // Split [from, to] into stretches where every player's color is fixed.
  std::vector<Coord> cuts;
  for (const auto& cp : cps) {
    for (Coord t : cp.changes()) {
      if (t > from && t <= to) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(to + 1);
  int sum = 0;
  Coord s = from;
  for (std::size_t r = 0; r < cuts.size(); ++r) {
    const Coord end = cuts[r];
    // Edges t in [s, end - 2] stay inside the stretch and repeat with period 3.
    const Coord inner = end - 1 - s;
    if (inner <= 6) {
      for (Coord t = s; t < end - 1; ++t) sum += e(t);
    } else {
      const int period = e(s) + e(s + 1) + e(s + 2);
      sum += static_cast<int>((inner / 3) * period);
      for (Coord t = s; t < s + inner % 3; ++t) sum += e(t);
    }
    if (r + 1 < cuts.size()) sum += e(end - 1);
    s = end;
  }
  return sum;
}

Region3::Region3(Coord i1_, Coord i2_, Coord k1_, Coord k2_, Coord n_) : i1(i1_), i2(i2_), k1(k1_), k2(k2_), n(n_) {
  if (!(0 <= i1 && i1 < i2 && i2 <= n && 0 <= k1 && k1 < k2 && k2 <= n)) {
    throw DomainError("region bounds invalid: " + str());
  }
}

Region Region3::box() const { return Region({n - i2, k1}, {n - i1, k2}, n); }

std::string Region3::str() const {
  std::ostringstream os;
  os << "V(" << i1 << "," << i2 << "," << k1 << "," << k2 << ") N=" << n;
  return os.str();
}

int boundary_index3(const Region3& region, LineCache& lines) {
  const Coord n = region.n;
  auto poly = region_polygon_2d(region.box());
  int index = 0;
  for (std::size_t v = 0; v < poly.size(); ++v) {
    const auto& p = poly[v];
    const auto& q = poly[(v + 1) % poly.size()];
    if (p[0] == q[0]) {
      index += lines.edge_sign_sum(BoundaryLine(LineKind::i_fixed, n - p[0], n), p[1], q[1]);
    } else if (p[1] == q[1]) {
      index += lines.edge_sign_sum(BoundaryLine(LineKind::k_fixed, p[1], n), n - p[0], n - q[0]);
    } else if (p[0] == p[1] && q[0] == q[1]) {
      index += lines.edge_sign_sum(BoundaryLine(LineKind::j_zero, 0, n), n - p[0], n - q[0]);
    } else {
      throw InvariantViolation("region " + region.str() + " has a side off the i, k and j=0 lines");
    }
  }
  return index;
}

SolutionCell solve3(ColoringOracle& oracle, std::vector<Fast3Step>* trace) {
  if (oracle.d() != 2) throw DomainError("solve3 needs exactly three players");
  const Coord n = oracle.scale();
  if (n < 2) throw DomainError("solve3 needs N >= 2");
  LineCache lines(oracle);
  Region3 region = Region3::whole(n);
  int index = boundary_index3(region, lines);
  if (index == 0) throw InvariantViolation("whole triangle has index 0");
  while (region.i2 - region.i1 > 1 || region.k2 - region.k1 > 1) {
    const Coord ei = region.i2 - region.i1, ek = region.k2 - region.k1;
    const bool cut_i = ei >= ek;
    Region3 lower = region, upper = region;
    Coord cut;
    if (cut_i) {
      cut = region.i1 + ei / 2;
      lower.i2 = cut;
      upper.i1 = cut;
    } else {
      cut = region.k1 + ek / 2;
      lower.k2 = cut;
      upper.k1 = cut;
    }
    const int il = boundary_index3(lower, lines);
    const int iu = boundary_index3(upper, lines);
    if (il + iu != index) {
      throw InvariantViolation("index not additive across cut in " + region.str() + ": " + std::to_string(il) +
                               " + " + std::to_string(iu) + " != " + std::to_string(index));
    }
    if (il == 0 && iu == 0) throw InvariantViolation("both halves of " + region.str() + " have index 0");
    const bool take_lower = std::abs(il) >= std::abs(iu);
    if (trace) trace->push_back({region, cut_i, cut, il, iu, take_lower, oracle.distinct_queries()});
    region = take_lower ? lower : upper;
    index = take_lower ? il : iu;
  }
  const Region box = region.box();
  std::vector<int> colors;
  for (const auto& cell : cells_in_cube(box.lo, n)) {
    if (!cell_in_simplex(cell)) continue;
    colors.clear();
    for (const auto& v : cell_vertices(cell)) colors.push_back(oracle.color(v));
    if (is_fully_colored(colors)) return make_solution(cell, oracle);
  }
  throw InvariantViolation("no fully colored triangle in terminal region " + region.str());
}

}  // namespace envycut
