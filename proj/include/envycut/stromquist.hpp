#pragma once

// Exact simulation of the three-player moving-knife procedure.
//
// A sword sweeps s from 0 to 1. Each player holds a knife at the point m that
// halves the part of the cake right of the sword by their own measure. Let M
// be the median knife. A player shouts as soon as u([0, s]) is at least both
// u([s, M]) and u([M, 1]); the shouter takes [0, s], the other player whose
// knife is further left takes [s, M], the remaining player [M, 1].
//
// Between consecutive events every knife, the median and every player's three
// piece values are affine in s, so the first shout is found by solving linear
// inequalities exactly on each interval.

#include <cstdint>
#include <utility>
#include <vector>

#include "envycut/density.hpp"
#include "envycut/rational.hpp"

namespace envycut {

/// Leftmost m in [s, 1] with u([s, m]) = u([m, 1]).
Rational knife_position(const PiecewiseDensity& density, const Rational& s);

struct ShoutEvent {
  int shouter = -1;
  Rational sword;                  // s*
  bool right_limit = false;        // the condition holds just after s*, not at s*
  std::vector<int> also_shouting;  // simultaneous shouters that lost the tie
  std::vector<Rational> knives;    // per player, at s* (right limits when right_limit)
  Rational middle_knife;
  int middle_owner = -1;           // lowest player index whose knife is the median
  std::vector<int> allocation;     // allocation[player] = piece 0 (left), 1 (middle), 2 (right)
  std::vector<std::vector<Rational>> values;  // values[player][piece]
  std::size_t intervals_examined = 0;
};

/// Runs the procedure on three players. Densities may be zero on some
/// segments but every player needs positive total value.
/// Throws InstanceInvalid if nobody shouts before the sword reaches 1.
ShoutEvent simulate(const UtilityProfile& profile);

struct QueryComparison {
  Rational a;
  Rational b;
  Rational base;
  Rational perturbed;
  bool differs = false;
  bool endpoint_in_window = false;  // a or b in (x - delta, x + delta)
};

struct IndistinguishabilityReport {
  Rational x;
  Rational delta;
  std::vector<QueryComparison> queries;
  std::uint64_t distinguishing = 0;
  std::uint64_t endpoints_in_window = 0;
  /// Queries that differ with both endpoints outside the window.
  std::uint64_t violations = 0;
  std::uint64_t distinct_queries_base = 0;
  std::uint64_t distinct_queries_perturbed = 0;
  double fraction() const { return queries.empty() ? 0.0 : static_cast<double>(distinguishing) / queries.size(); }
};

/// Asks both C and C_x for the value of every interval and compares.
IndistinguishabilityReport indistinguishability_experiment(const Rational& x, const Rational& delta,
                                                           const std::vector<std::pair<Rational, Rational>>& queries);

/// `count` intervals with endpoints uniform on the dyadic grid of step 2^-bits.
std::vector<std::pair<Rational, Rational>> random_queries(std::size_t count, std::uint64_t seed, int bits = 40);
/// As random_queries, redrawing endpoints that fall in (x - delta, x + delta).
std::vector<std::pair<Rational, Rational>> random_queries_outside(std::size_t count, std::uint64_t seed,
                                                                  const Rational& x, const Rational& delta,
                                                                  int bits = 40);

}  // namespace envycut
