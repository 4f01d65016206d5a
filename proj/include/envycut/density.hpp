#pragma once

#include <cstdint>
#include <vector>

#include "envycut/oracle.hpp"
#include "envycut/rational.hpp"
#include "envycut/simplex.hpp"

namespace envycut {

/// Piecewise-constant density on [0,1]: the additive utility measure of one
/// player. Densities are per unit length and must be >= 0; solver paths
/// additionally require them to be strictly positive (see
/// validate_solver_profile).
class PiecewiseDensity {
 public:
  PiecewiseDensity(std::vector<Rational> breakpoints, std::vector<Rational> densities);

  /// Builds a density from per-segment masses (the value of each whole segment).
  static PiecewiseDensity from_masses(std::vector<Rational> breakpoints, const std::vector<Rational>& masses);
  static PiecewiseDensity uniform(const Rational& density = Rational(1));

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& densities() const { return densities_; }
  std::size_t segments() const { return densities_.size(); }

  /// u([0, x]). Throws DomainError outside [0,1].
  Rational cdf(const Rational& x) const;
  /// u([a, b]) for 0 <= a <= b <= 1. Throws DomainError otherwise.
  Rational eval(const Rational& a, const Rational& b) const;
  const Rational& total() const { return cumulative_.back(); }
  Rational max_density() const;
  bool strictly_positive() const;

  /// Smallest x in [0,1] with cdf(x) >= target (target clamped to [0, total]).
  Rational inverse_cdf_left(const Rational& target) const;
  /// Largest x in [0,1] with cdf(x) <= target.
  Rational inverse_cdf_right(const Rational& target) const;

  /// Index of the segment containing x; breakpoints belong to the segment on
  /// their right, and x == 1 to the last segment.
  std::size_t segment_of(const Rational& x) const;

  friend bool operator==(const PiecewiseDensity& a, const PiecewiseDensity& b) {
    return a.breakpoints_ == b.breakpoints_ && a.densities_ == b.densities_;
  }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> densities_;
  std::vector<Rational> cumulative_;  // cdf at each breakpoint
};

/// d+1 players' densities; the cake is cut into d+1 pieces.
class UtilityProfile {
 public:
  explicit UtilityProfile(std::vector<PiecewiseDensity> players);

  int d() const { return static_cast<int>(players_.size()) - 1; }
  std::size_t size() const { return players_.size(); }
  const PiecewiseDensity& operator[](std::size_t i) const { return players_[i]; }
  const std::vector<PiecewiseDensity>& players() const { return players_; }

 private:
  std::vector<PiecewiseDensity> players_;
};

/// Throws InstanceInvalid, citing the nonnegativity condition, if any density
/// value is not strictly positive.
void validate_solver_profile(const UtilityProfile& profile);

/// Piece q of cut X is [(x_0+...+x_{q-1})/N, (x_0+...+x_q)/N].
std::vector<Rational> piece_values(const PiecewiseDensity& density, const BarycentricPoint& cut);

/// Argmax piece for `player` at `cut`; ties go to the smallest piece index.
int preference(const UtilityProfile& profile, int player, const BarycentricPoint& cut);
int argmax_piece(const std::vector<Rational>& values);

/// K = max density over all players and segments.
Rational lipschitz_constant(const UtilityProfile& profile);

/// Seeded random profile with strictly positive densities. Breakpoints are
/// multiples of 1/64 and densities integers in [1, 9].
UtilityProfile random_profile(int d, std::uint64_t seed);
UtilityProfile uniform_profile(int d);

/// Value query key: player's value for the interval [a, b].
struct IntervalQuery {
  int player = 0;
  Rational a;
  Rational b;
  friend bool operator==(const IntervalQuery&, const IntervalQuery&) = default;
};

struct IntervalQueryHash {
  std::size_t operator()(const IntervalQuery& q) const noexcept {
    std::hash<Rational> h;
    return (h(q.a) * 31 + h(q.b)) * 31 + static_cast<std::size_t>(q.player);
  }
};

using ValueOracle = CountingOracle<IntervalQuery, Rational, IntervalQueryHash>;

/// Counting value oracle over a profile. The profile is copied in.
ValueOracle::Function value_query_function(UtilityProfile profile);

// Moving-knife adversary family. Players A and B share one density; player C
// is parameterized by a small delta. Values are used unnormalized.
namespace adversary {

PiecewiseDensity player_ab();
PiecewiseDensity player_c(const Rational& delta);
/// C with mass delta/2 moved from (x, x+delta) to (x-delta, x). Requires
/// 1/10 <= x - delta and x + delta <= 3/10, delta > 0.
PiecewiseDensity player_c_perturbed(const Rational& x, const Rational& delta);
/// (A, B, C).
UtilityProfile profile(const Rational& delta);
UtilityProfile perturbed_profile(const Rational& x, const Rational& delta);

}  // namespace adversary

}  // namespace envycut
