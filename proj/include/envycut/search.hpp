#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "envycut/coloring.hpp"
#include "envycut/density.hpp"
#include "envycut/index.hpp"
#include "envycut/rational.hpp"
#include "envycut/simplex.hpp"

namespace envycut {

/// A fully colored base cell with its player -> piece assignment.
struct SolutionCell {
  BaseCell cell;
  std::vector<BarycentricPoint> vertices;  // construction order
  std::vector<int> colors;                 // colors[v] for vertex v
  std::vector<int> labels;                 // player controlling vertex v
  std::vector<int> assignment;             // assignment[player] = piece
};

/// Builds the solution for a fully colored cell, assigning to the player of
/// each vertex that vertex's color. Throws InvariantViolation if the colors
/// are not exactly {0..d}.
SolutionCell make_solution(const BaseCell& cell, ColoringOracle& oracle);

struct DncStep {
  Region region;
  int axis = 0;
  Coord cut = 0;
  int index_lower = 0;  // signed in 2D, parity otherwise
  int index_upper = 0;
  bool took_lower = true;
};

/// Divide-and-conquer search for a fully colored cell. Requires N a power of
/// two. Cuts round-robin over the axes at the midpoint and keeps a half with
/// odd boundary parity (nonzero signed index in 2D), lower half first.
SolutionCell search_dnc(ColoringOracle& oracle, std::vector<DncStep>* trace = nullptr);

/// Default cell budget for exhaustive enumeration; ENVYCUT_BUDGET overrides.
std::uint64_t brute_force_budget();

/// Every fully colored cell of the big simplex, in enumeration order. Throws
/// BudgetExceeded when N^d * d! exceeds `budget`.
std::vector<SolutionCell> brute_force_search(ColoringOracle& oracle, std::optional<std::uint64_t> budget = {});

struct EnvyReport {
  bool valid = false;
  Rational max_envy;
  Rational bound;                // K (d+1) / N
  std::vector<int> assignment;   // player -> piece, empty when invalid
  std::string reason;
};

/// Checks a set of pairwise affine-adjacent cuts for an envy-free assignment.
///
/// Preferences are recomputed from the profile. The assignment is valid when
/// each player i has a maximal-value piece equal to assignment[i] at one of
/// the cuts; the labeled assignment is tried first, then every permutation.
/// max_envy is the largest envy any player feels when a single one of the
/// cuts is used for everyone: max over cuts X, players i and pieces q of
/// u_i(q, X) - u_i(assignment[i], X).
EnvyReport verify_envy_free(const std::vector<BarycentricPoint>& vertices, const UtilityProfile& profile,
                            const std::vector<int>& preferred_assignment = {});
inline EnvyReport verify_envy_free(const SolutionCell& sol, const UtilityProfile& profile) {
  return verify_envy_free(sol.vertices, profile, sol.assignment);
}

}  // namespace envycut
