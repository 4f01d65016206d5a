#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>

#include "envycut/density.hpp"
#include "envycut/oracle.hpp"
#include "envycut/simplex.hpp"

namespace envycut {

/// Colors grid points of the d-simplex at scale N, counting distinct queries.
///
/// Every answered color is checked for Sperner validity (color j requires
/// x_j > 0); a violation raises InstanceInvalid.
class ColoringOracle {
 public:
  using Function = std::function<int(const BarycentricPoint&)>;

  ColoringOracle(int d, Coord n, Function fn);

  int d() const { return d_; }
  Coord scale() const { return n_; }

  int color(const BarycentricPoint& x);
  int color(const CubePoint& z) { return color(cube_to_barycentric(z)); }
  /// Uncounted evaluation of the underlying function (no Sperner check).
  int peek(const BarycentricPoint& x) const { return oracle_->peek(x); }

  std::uint64_t distinct_queries() const { return oracle_->distinct_queries(); }
  std::uint64_t total_calls() const { return oracle_->total_calls(); }
  void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) { oracle_->set_deadline(deadline); }

 private:
  int d_;
  Coord n_;
  std::unique_ptr<CountingOracle<BarycentricPoint, int>> oracle_;
};

/// color(X) = preference of player label(X) at cut X. Piece values are built
/// from a memo of each player's cdf at grid cuts k/N.
ColoringOracle::Function profile_coloring(const UtilityProfile& profile, Coord n);

inline ColoringOracle make_profile_oracle(const UtilityProfile& profile, Coord n) {
  return ColoringOracle(profile.d(), n, profile_coloring(profile, n));
}

}  // namespace envycut
