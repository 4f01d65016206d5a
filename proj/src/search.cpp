#include "envycut/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "envycut/errors.hpp"

namespace envycut {

SolutionCell make_solution(const BaseCell& cell, ColoringOracle& oracle) {
  SolutionCell sol;
  sol.cell = cell;
  sol.vertices = cell_vertices_barycentric(cell);
  for (const auto& v : sol.vertices) {
    sol.colors.push_back(oracle.color(v));
    sol.labels.push_back(label(v));
  }
  if (!is_fully_colored(sol.colors)) throw InvariantViolation("cell is not fully colored");
  sol.assignment.assign(sol.vertices.size(), -1);
  for (std::size_t v = 0; v < sol.vertices.size(); ++v) sol.assignment[sol.labels[v]] = sol.colors[v];
  return sol;
}

namespace {

int region_index(const Region& r, ColoringOracle& oracle) {
  if (r.dim() == 2) return index_2d(r, oracle);
  return index_mod2_boundary(r, oracle, false);
}

bool nonzero(int index, int d) { return d == 2 ? index != 0 : (index & 1) != 0; }

std::optional<BaseCell> scan_unit_cube(const Region& r, ColoringOracle& oracle) {
  std::vector<int> colors;
  for (const auto& cell : cells_in_cube(r.lo, r.scale)) {
    if (!cell_in_simplex(cell)) continue;
    colors.clear();
    for (const auto& v : cell_vertices(cell)) colors.push_back(oracle.color(v));
    if (is_fully_colored(colors)) return cell;
  }
  return std::nullopt;
}

}  // namespace

SolutionCell search_dnc(ColoringOracle& oracle, std::vector<DncStep>* trace) {
  const int d = oracle.d();
  const Coord n = oracle.scale();
  if (!is_power_of_two(n)) throw DomainError("divide-and-conquer search needs N a power of 2, got " + std::to_string(n));
  Region region = Region::whole(d, n);
  if (d == 1) {
    // One cut: scan the unit intervals directly.
    for (Coord z = 0; z < n; ++z) {
      BaseCell cell{{z}, {0}, n};
      std::vector<int> colors;
      for (const auto& v : cell_vertices(cell)) colors.push_back(oracle.color(v));
      if (is_fully_colored(colors)) return make_solution(cell, oracle);
    }
    throw InvariantViolation("no fully colored interval on a Sperner-colored segment");
  }
  int index = region_index(region, oracle);
  if (!nonzero(index, d)) {
    throw InvariantViolation("whole simplex has zero boundary index (" + std::to_string(index) + ")");
  }
  int axis = 0;
  while (true) {
    int chosen = -1;
    for (int step = 0; step < d; ++step) {
      int a = (axis + step) % d;
      if (region.extent(a) > 1) {
        chosen = a;
        break;
      }
    }
    if (chosen < 0) break;
    const Coord cut = region.lo[chosen] + region.extent(chosen) / 2;
    auto [lower, upper] = region.split(chosen, cut);
    const int il = region_index(lower, oracle);
    const int iu = region_index(upper, oracle);
    const bool additive = d == 2 ? il + iu == index : ((il ^ iu) & 1) == (index & 1);
    if (!additive) {
      throw InvariantViolation("index not additive across cut axis " + std::to_string(chosen) + " at " +
                               std::to_string(cut) + " in region " + region.str());
    }
    const bool take_lower = nonzero(il, d);
    if (!take_lower && !nonzero(iu, d)) {
      throw InvariantViolation("both halves have zero index in region " + region.str());
    }
    if (trace) trace->push_back({region, chosen, cut, il, iu, take_lower});
    region = take_lower ? lower : upper;
    index = take_lower ? il : iu;
    axis = (chosen + 1) % d;
  }
  auto cell = scan_unit_cube(region, oracle);
  if (!cell) throw InvariantViolation("no fully colored cell in terminal cube " + region.str());
  return make_solution(*cell, oracle);
}

std::uint64_t brute_force_budget() {
  if (const char* env = std::getenv("ENVYCUT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw SchemaError(std::string("ENVYCUT_BUDGET is not a nonnegative integer: ") + env);
  }
  return 50'000'000ULL;
}

std::vector<SolutionCell> brute_force_search(ColoringOracle& oracle, std::optional<std::uint64_t> budget) {
  const int d = oracle.d();
  const Coord n = oracle.scale();
  const std::uint64_t limit = budget ? *budget : brute_force_budget();
  // Saturating N^d * d!.
  long double required = 1;
  for (int i = 0; i < d; ++i) required *= static_cast<long double>(n) * (i + 1);
  if (required > static_cast<long double>(limit)) {
    const std::uint64_t req =
        required > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(required);
    throw BudgetExceeded("brute-force enumeration needs " + std::to_string(req) + " cell checks, budget is " +
                             std::to_string(limit) + " (set ENVYCUT_BUDGET)",
                         req, limit);
  }
  // Colors memoized by flat cube index; each grid point reaches the oracle once.
  std::vector<std::size_t> stride(d);
  std::size_t points = 1;
  for (int a = d - 1; a >= 0; --a) {
    stride[a] = points;
    points *= static_cast<std::size_t>(n + 1);
  }
  std::vector<std::int8_t> table(points, -1);
  std::vector<Coord> z(d);
  auto color_at = [&](std::size_t idx) {
    if (table[idx] < 0) table[idx] = static_cast<std::int8_t>(oracle.color(CubePoint(z, n)));
    return table[idx];
  };
  std::vector<SolutionCell> out;
  std::vector<bool> seen(d + 1);
  for_each_simplex_cell(d, n, [&](const BaseCell& cell) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t idx = 0;
    for (int a = 0; a < d; ++a) {
      z[a] = cell.base[a];
      idx += static_cast<std::size_t>(z[a]) * stride[a];
    }
    seen[color_at(idx)] = true;
    for (int a : cell.perm) {
      ++z[a];
      idx += stride[a];
      seen[color_at(idx)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) == seen.end()) out.push_back(make_solution(cell, oracle));
    return true;
  });
  return out;
}

EnvyReport verify_envy_free(const std::vector<BarycentricPoint>& vertices, const UtilityProfile& profile,
                            const std::vector<int>& preferred_assignment) {
  const int d = profile.d();
  const int players = d + 1;
  if (vertices.empty()) throw DomainError("verify needs at least one cut");
  for (const auto& v : vertices) {
    if (v.dim() != d) throw DomainError("cut " + v.str() + " does not have d+1 pieces for this profile");
  }
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacency(vertices[a], vertices[b]) != Adjacency::affine_adjacent) {
        throw DomainError("cuts " + vertices[a].str() + " and " + vertices[b].str() + " are not affine-adjacent");
      }
    }
  }
  const Coord n = vertices.front().scale();
  // values[v][i][q], and which pieces are maximal for player i at cut v.
  std::vector<std::vector<std::vector<Rational>>> values(vertices.size());
  std::vector<std::vector<std::vector<bool>>> best(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (int i = 0; i < players; ++i) {
      values[v].push_back(piece_values(profile[i], vertices[v]));
      const auto& vals = values[v].back();
      const Rational mx = *std::max_element(vals.begin(), vals.end());
      std::vector<bool> row(players);
      for (int q = 0; q < players; ++q) row[q] = vals[q] == mx;
      best[v].push_back(std::move(row));
    }
  }
  auto works = [&](const std::vector<int>& pi) {
    for (int i = 0; i < players; ++i) {
      bool ok = false;
      for (std::size_t v = 0; v < vertices.size() && !ok; ++v) ok = best[v][i][pi[i]];
      if (!ok) return false;
    }
    return true;
  };
  EnvyReport report;
  report.bound = lipschitz_constant(profile) * Rational(players) / Rational(static_cast<long>(n));
  std::vector<int> pi;
  if (static_cast<int>(preferred_assignment.size()) == players) {
    auto sorted = preferred_assignment;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = true;
    for (int q = 0; q < players; ++q) is_perm = is_perm && sorted[q] == q;
    if (is_perm && works(preferred_assignment)) pi = preferred_assignment;
  }
  if (pi.empty()) {
    std::vector<int> cand(players);
    std::iota(cand.begin(), cand.end(), 0);
    do {
      if (works(cand)) {
        pi = cand;
        break;
      }
    } while (std::next_permutation(cand.begin(), cand.end()));
  }
  if (pi.empty()) {
    report.valid = false;
    report.reason = "no assignment of pieces to players matches their preferences at these cuts";
    return report;
  }
  report.valid = true;
  report.assignment = pi;
  Rational envy = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (int i = 0; i < players; ++i) {
      const auto& vals = values[v][i];
      const Rational mx = *std::max_element(vals.begin(), vals.end());
      envy = max(envy, mx - vals[pi[i]]);
    }
  }
  report.max_envy = envy;
  return report;
}

}  // namespace envycut
