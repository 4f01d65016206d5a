#include "envycut/density.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "envycut/errors.hpp"

namespace envycut {

PiecewiseDensity::PiecewiseDensity(std::vector<Rational> breakpoints, std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
  if (breakpoints_.size() < 2) throw DomainError("density needs at least two breakpoints");
  if (densities_.size() + 1 != breakpoints_.size()) {
    throw DomainError("density needs exactly one value per segment (" + std::to_string(breakpoints_.size() - 1) +
                      " segments, " + std::to_string(densities_.size()) + " values)");
  }
  if (breakpoints_.front() != Rational(0) || breakpoints_.back() != Rational(1)) {
    throw DomainError("density breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("density breakpoints must be strictly increasing");
  }
  for (const auto& v : densities_) {
    if (v.sign() < 0) throw DomainError("density value " + v.str() + " is negative");
  }
  cumulative_.reserve(breakpoints_.size());
  cumulative_.emplace_back(0);
  for (std::size_t i = 0; i < densities_.size(); ++i) {
    cumulative_.push_back(cumulative_.back() + densities_[i] * (breakpoints_[i + 1] - breakpoints_[i]));
  }
}

PiecewiseDensity PiecewiseDensity::from_masses(std::vector<Rational> breakpoints, const std::vector<Rational>& masses) {
  if (masses.size() + 1 != breakpoints.size()) throw DomainError("density needs exactly one mass per segment");
  std::vector<Rational> dens;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    auto len = breakpoints[i + 1] - breakpoints[i];
    if (len.sign() <= 0) throw DomainError("density breakpoints must be strictly increasing");
    dens.push_back(masses[i] / len);
  }
  return PiecewiseDensity(std::move(breakpoints), std::move(dens));
}

PiecewiseDensity PiecewiseDensity::uniform(const Rational& density) {
  return PiecewiseDensity({Rational(0), Rational(1)}, {density});
}

std::size_t PiecewiseDensity::segment_of(const Rational& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t seg = static_cast<std::size_t>(it - breakpoints_.begin());
  seg = seg == 0 ? 0 : seg - 1;
  return std::min(seg, densities_.size() - 1);
}

Rational PiecewiseDensity::cdf(const Rational& x) const {
  if (x.sign() < 0 || x > Rational(1)) throw DomainError("point " + x.str() + " outside [0,1]");
  std::size_t s = segment_of(x);
  return cumulative_[s] + densities_[s] * (x - breakpoints_[s]);
}

Rational PiecewiseDensity::eval(const Rational& a, const Rational& b) const {
  if (a.sign() < 0 || b > Rational(1) || b < a) {
    throw DomainError("interval [" + a.str() + ", " + b.str() + "] is not inside [0,1] with a <= b");
  }
  return cdf(b) - cdf(a);
}

Rational PiecewiseDensity::max_density() const { return *std::max_element(densities_.begin(), densities_.end()); }

bool PiecewiseDensity::strictly_positive() const {
  return std::all_of(densities_.begin(), densities_.end(), [](const Rational& v) { return v.sign() > 0; });
}

Rational PiecewiseDensity::inverse_cdf_left(const Rational& target) const {
  if (target.sign() <= 0) return Rational(0);
  if (target >= total()) {
    // Leftmost point where the full mass is reached.
    std::size_t s = densities_.size();
    while (s > 0 && densities_[s - 1].is_zero()) --s;
    return breakpoints_[s];
  }
  // First segment whose right-end cumulative reaches the target.
  auto it = std::lower_bound(cumulative_.begin() + 1, cumulative_.end(), target);
  std::size_t s = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  // cumulative_[s] < target <= cumulative_[s+1], so densities_[s] > 0.
  return breakpoints_[s] + (target - cumulative_[s]) / densities_[s];
}

Rational PiecewiseDensity::inverse_cdf_right(const Rational& target) const {
  if (target >= total()) return Rational(1);
  if (target.sign() < 0) return Rational(0);
  // Last segment whose left-end cumulative is <= target.
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end() - 1, target);
  std::size_t s = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  // cumulative_[s] <= target < cumulative_[s+1].
  return breakpoints_[s] + (target - cumulative_[s]) / densities_[s];
}

UtilityProfile::UtilityProfile(std::vector<PiecewiseDensity> players) : players_(std::move(players)) {
  if (players_.size() < 2) throw DomainError("a profile needs at least two players (d >= 1)");
}

void validate_solver_profile(const UtilityProfile& profile) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& dens = profile[i].densities();
    for (std::size_t s = 0; s < dens.size(); ++s) {
      if (dens[s].sign() <= 0) {
        throw InstanceInvalid("player " + std::to_string(i) + " segment " + std::to_string(s) + " has density " +
                              dens[s].str() +
                              "; the nonnegativity condition u_i(empty) = 0 and u_i(non-empty) > 0 requires every "
                              "density to be strictly positive");
      }
    }
  }
}

std::vector<Rational> piece_values(const PiecewiseDensity& density, const BarycentricPoint& cut) {
  const auto& x = cut.coords();
  const Rational n(static_cast<long>(cut.scale()));
  std::vector<Rational> out;
  out.reserve(x.size());
  Rational left = 0;
  Rational left_cdf = 0;
  Coord prefix = 0;
  for (std::size_t q = 0; q < x.size(); ++q) {
    prefix += x[q];
    Rational right = q + 1 == x.size() ? Rational(1) : Rational(static_cast<long>(prefix)) / n;
    Rational right_cdf = q + 1 == x.size() ? density.total() : density.cdf(right);
    out.push_back(right_cdf - left_cdf);
    left = std::move(right);
    left_cdf = std::move(right_cdf);
  }
  return out;
}

int argmax_piece(const std::vector<Rational>& values) {
  int best = 0;
  for (int q = 1; q < static_cast<int>(values.size()); ++q) {
    if (values[q] > values[best]) best = q;
  }
  return best;
}

int preference(const UtilityProfile& profile, int player, const BarycentricPoint& cut) {
  if (player < 0 || player > profile.d()) throw DomainError("player index out of range");
  if (cut.dim() != profile.d()) throw DomainError("cut dimension does not match the profile");
  return argmax_piece(piece_values(profile[player], cut));
}

Rational lipschitz_constant(const UtilityProfile& profile) {
  Rational k = 0;
  for (const auto& p : profile.players()) k = max(k, p.max_density());
  return k;
}

UtilityProfile random_profile(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("random_profile needs d >= 1");
  std::mt19937_64 rng(seed);
  std::vector<PiecewiseDensity> players;
  for (int i = 0; i <= d; ++i) {
    const int segments = 1 + static_cast<int>(rng() % 5);
    std::set<long> cuts;
    while (static_cast<int>(cuts.size()) < segments - 1) cuts.insert(1 + static_cast<long>(rng() % 63));
    std::vector<Rational> bps{Rational(0)};
    for (long c : cuts) bps.emplace_back(c, 64);
    bps.emplace_back(1);
    std::vector<Rational> dens;
    for (int s = 0; s < segments; ++s) dens.emplace_back(1 + static_cast<long>(rng() % 9));
    players.emplace_back(std::move(bps), std::move(dens));
  }
  return UtilityProfile(std::move(players));
}

UtilityProfile uniform_profile(int d) {
  return UtilityProfile(std::vector<PiecewiseDensity>(d + 1, PiecewiseDensity::uniform()));
}

ValueOracle::Function value_query_function(UtilityProfile profile) {
  return [profile = std::move(profile)](const IntervalQuery& q) {
    if (q.player < 0 || q.player > profile.d()) throw DomainError("player index out of range");
    return profile[q.player].eval(q.a, q.b);
  };
}

namespace adversary {

namespace {
std::vector<Rational> tenths(std::initializer_list<long> ks) {
  std::vector<Rational> out;
  for (long k : ks) out.emplace_back(k, 10);
  return out;
}
}  // namespace

PiecewiseDensity player_ab() {
  return PiecewiseDensity::from_masses(tenths({0, 1, 3, 4, 8, 9, 10}),
                                       {Rational(0), Rational(2), Rational(100), Rational(2), Rational(100), Rational(0)});
}

PiecewiseDensity player_c(const Rational& delta) {
  return PiecewiseDensity::from_masses(tenths({0, 1, 3, 4, 5, 10}),
                                       {Rational(100) - delta, Rational(2), Rational(98), Rational(2), Rational(0)});
}

PiecewiseDensity player_c_perturbed(const Rational& x, const Rational& delta) {
  const Rational lo(1, 10), hi(3, 10);
  if (delta.sign() <= 0) throw DomainError("perturbation delta must be positive");
  if (x < lo || x > hi) throw DomainError("perturbation point " + x.str() + " outside [1/10, 3/10]");
  if (x - delta < lo || x + delta > hi) {
    throw DomainError("perturbation interval (x - delta, x + delta) escapes (1/10, 3/10)");
  }
  const auto base = player_c(delta);
  // Split the [1/10, 3/10] segment (density 10) around x.
  const Rational half(1, 2);
  std::vector<Rational> bps, dens;
  const auto& bb = base.breakpoints();
  const auto& bd = base.densities();
  for (std::size_t s = 0; s < bd.size(); ++s) {
    if (bb[s] == lo) {
      const Rational pts[] = {lo, x - delta, x, x + delta};
      const Rational vals[] = {bd[s], bd[s] + half, bd[s] - half, bd[s]};
      for (int k = 0; k < 4; ++k) {
        const Rational& end = k == 3 ? hi : pts[k + 1];
        if (pts[k] < end) {
          bps.push_back(pts[k]);
          dens.push_back(vals[k]);
        }
      }
    } else {
      bps.push_back(bb[s]);
      dens.push_back(bd[s]);
    }
  }
  bps.emplace_back(1);
  return PiecewiseDensity(std::move(bps), std::move(dens));
}

UtilityProfile profile(const Rational& delta) {
  return UtilityProfile({player_ab(), player_ab(), player_c(delta)});
}

UtilityProfile perturbed_profile(const Rational& x, const Rational& delta) {
  return UtilityProfile({player_ab(), player_ab(), player_c_perturbed(x, delta)});
}

}  // namespace adversary

}  // namespace envycut
