#include "envycut/coloring.hpp"

#include <mutex>
#include <unordered_map>

#include "envycut/errors.hpp"

namespace envycut {

ColoringOracle::ColoringOracle(int d, Coord n, Function fn) : d_(d), n_(n) {
  if (d < 1) throw DomainError("coloring needs d >= 1");
  if (n < 1) throw DomainError("grid scale N must be positive");
  auto checked = [d, n, fn = std::move(fn)](const BarycentricPoint& x) {
    if (x.dim() != d || x.scale() != n) throw DomainError("query point " + x.str() + " is not on this grid");
    int c = fn(x);
    if (c < 0 || c > d) throw InstanceInvalid("color " + std::to_string(c) + " out of range at " + x.str());
    if (x[c] == 0) {
      throw InstanceInvalid("Sperner violation: point " + x.str() + " colored " + std::to_string(c) +
                            " but its coordinate " + std::to_string(c) + " is zero");
    }
    return c;
  };
  oracle_ = std::make_unique<CountingOracle<BarycentricPoint, int>>(std::move(checked));
}

int ColoringOracle::color(const BarycentricPoint& x) { return oracle_->query(x); }

namespace {

struct GridCdfMemo {
  UtilityProfile profile;
  Coord n;
  std::vector<std::unordered_map<Coord, Rational>> memo;
  std::mutex mutex;

  GridCdfMemo(UtilityProfile p, Coord scale) : profile(std::move(p)), n(scale), memo(profile.size()) {}

  Rational cdf_at(int player, Coord k) {
    if (k == 0) return Rational(0);
    if (k == n) return profile[player].total();
    std::lock_guard lock(mutex);
    auto& m = memo[player];
    if (auto it = m.find(k); it != m.end()) return it->second;
    Rational v = profile[player].cdf(Rational(static_cast<long>(k)) / Rational(static_cast<long>(n)));
    m.emplace(k, v);
    return v;
  }
};

}  // namespace

ColoringOracle::Function profile_coloring(const UtilityProfile& profile, Coord n) {
  auto memo = std::make_shared<GridCdfMemo>(profile, n);
  return [memo](const BarycentricPoint& x) {
    const int player = label(x);
    const auto& c = x.coords();
    std::vector<Rational> values;
    values.reserve(c.size());
    Coord prefix = 0;
    Rational left = 0;
    for (std::size_t q = 0; q < c.size(); ++q) {
      prefix += c[q];
      Rational right = memo->cdf_at(player, prefix);
      values.push_back(right - left);
      left = std::move(right);
    }
    return argmax_piece(values);
  };
}

}  // namespace envycut
