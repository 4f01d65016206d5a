#include "envycut/stromquist.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>

#include "envycut/errors.hpp"

namespace envycut {

Rational knife_position(const PiecewiseDensity& density, const Rational& s) {
  if (s.sign() < 0 || s > Rational(1)) throw DomainError("sword position " + s.str() + " outside [0,1]");
  const Rational target = (density.cdf(s) + density.total()) / Rational(2);
  return max(s, density.inverse_cdf_left(target));
}

namespace {

struct Affine {
  Rational p, q;  // p + q s
  Rational at(const Rational& s) const { return p + q * s; }
};

Affine fit(const Rational& s1, const Rational& v1, const Rational& s2, const Rational& v2) {
  Affine f;
  f.q = (v2 - v1) / (s2 - s1);
  f.p = v1 - f.q * s1;
  return f;
}

struct Snapshot {
  std::vector<Rational> knives;
  Rational median;
  int owner = -1;
  std::vector<std::vector<Rational>> values;
};

Snapshot snapshot_from_knives(const UtilityProfile& profile, const Rational& s, std::vector<Rational> knives) {
  Snapshot snap;
  snap.knives = std::move(knives);
  auto sorted = snap.knives;
  std::sort(sorted.begin(), sorted.end());
  snap.median = sorted[1];
  for (int i = 0; i < 3; ++i) {
    if (snap.knives[i] == snap.median) {
      snap.owner = i;
      break;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const auto& u = profile[i];
    const Rational fs = u.cdf(s), fm = u.cdf(snap.median);
    snap.values.push_back({fs, fm - fs, u.total() - fm});
  }
  return snap;
}

Snapshot snapshot(const UtilityProfile& profile, const Rational& s) {
  std::vector<Rational> knives;
  for (int i = 0; i < 3; ++i) knives.push_back(knife_position(profile[i], s));
  return snapshot_from_knives(profile, s, std::move(knives));
}

bool shouts(const std::vector<Rational>& v) { return v[0] >= v[1] && v[0] >= v[2]; }

std::pair<Rational, Rational> interior(const Rational& a, const Rational& b) {
  const Rational third = (b - a) / Rational(3);
  return {a + third, a + third + third};
}

ShoutEvent make_event(const Rational& s, const Snapshot& snap,
                      const std::vector<int>& shouters, bool right_limit) {
  ShoutEvent ev;
  ev.shouter = shouters.front();
  ev.also_shouting.assign(shouters.begin() + 1, shouters.end());
  ev.sword = s;
  ev.right_limit = right_limit;
  ev.knives = snap.knives;
  ev.middle_knife = snap.median;
  ev.middle_owner = snap.owner;
  ev.values = snap.values;
  ev.allocation.assign(3, -1);
  ev.allocation[ev.shouter] = 0;
  std::vector<int> rest;
  for (int i = 0; i < 3; ++i) {
    if (i != ev.shouter) rest.push_back(i);
  }
  const bool first_left = snap.knives[rest[0]] <= snap.knives[rest[1]];
  ev.allocation[rest[first_left ? 0 : 1]] = 1;
  ev.allocation[rest[first_left ? 1 : 0]] = 2;
  return ev;
}

// Infimum of {s in (a, b): g(s) >= 0 for every g}, and whether it is attained.
std::optional<std::pair<Rational, bool>> first_feasible(const Rational& a, const Rational& b,
                                                        const std::array<Affine, 2>& gs) {
  std::optional<Rational> lo, hi;  // closed bounds strictly inside (a, b)
  for (const auto& g : gs) {
    if (g.q.is_zero()) {
      if (g.p.sign() < 0) return std::nullopt;
      continue;
    }
    const Rational r = -g.p / g.q;
    if (g.q.sign() > 0) {
      if (r >= b) return std::nullopt;
      if (r > a && (!lo || r > *lo)) lo = r;
    } else {
      if (r <= a) return std::nullopt;
      if (r < b && (!hi || r < *hi)) hi = r;
    }
  }
  if (lo && hi && *lo > *hi) return std::nullopt;
  if (lo) return std::make_pair(*lo, true);
  return std::make_pair(a, false);
}

}  // namespace

ShoutEvent simulate(const UtilityProfile& profile) {
  if (profile.size() != 3) throw DomainError("the moving-knife procedure needs exactly three players");
  for (int i = 0; i < 3; ++i) {
    if (profile[i].total().sign() <= 0) {
      throw InstanceInvalid("player " + std::to_string(i) + " values the whole cake at 0");
    }
  }
  std::set<Rational> events{Rational(0), Rational(1)};
  for (int i = 0; i < 3; ++i) {
    const auto& u = profile[i];
    for (const auto& bp : u.breakpoints()) {
      events.insert(bp);
      const Rational target = u.cdf(bp) * Rational(2) - u.total();
      if (target.sign() >= 0 && target <= u.total()) {
        events.insert(u.inverse_cdf_left(target));
        events.insert(u.inverse_cdf_right(target));
      }
    }
    events.insert(u.inverse_cdf_left(u.total()));
  }
  auto refine = [&](auto&& add_points) {
    std::vector<Rational> pts(events.begin(), events.end());
    for (std::size_t r = 0; r + 1 < pts.size(); ++r) add_points(pts[r], pts[r + 1]);
  };
  auto knife_affines = [&](const Rational& a, const Rational& b) {
    auto [s1, s2] = interior(a, b);
    std::array<Affine, 3> ks;
    for (int i = 0; i < 3; ++i) ks[i] = fit(s1, knife_position(profile[i], s1), s2, knife_position(profile[i], s2));
    return ks;
  };
  // Knife crossings.
  refine([&](const Rational& a, const Rational& b) {
    auto ks = knife_affines(a, b);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Rational dq = ks[i].q - ks[j].q;
        if (dq.is_zero()) continue;
        const Rational r = (ks[j].p - ks[i].p) / dq;
        if (a < r && r < b) events.insert(r);
      }
    }
  });
  // Median knife crossing any breakpoint.
  std::set<Rational> all_bps;
  for (int i = 0; i < 3; ++i) all_bps.insert(profile[i].breakpoints().begin(), profile[i].breakpoints().end());
  refine([&](const Rational& a, const Rational& b) {
    auto [s1, s2] = interior(a, b);
    const Affine m = fit(s1, snapshot(profile, s1).median, s2, snapshot(profile, s2).median);
    if (m.q.is_zero()) return;
    for (const auto& bp : all_bps) {
      const Rational r = (bp - m.p) / m.q;
      if (a < r && r < b) events.insert(r);
    }
  });

  std::vector<Rational> pts(events.begin(), events.end());
  std::size_t examined = 0;
  auto shouters_at = [](const Snapshot& snap) {
    std::vector<int> who;
    for (int i = 0; i < 3; ++i) {
      if (shouts(snap.values[i])) who.push_back(i);
    }
    return who;
  };
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const Rational& a = pts[r];
    ++examined;
    const Snapshot at_a = snapshot(profile, a);
    if (auto who = shouters_at(at_a); !who.empty()) {
      auto ev = make_event(a, at_a, who, false);
      ev.intervals_examined = examined;
      return ev;
    }
    if (r + 1 == pts.size()) break;
    const Rational& b = pts[r + 1];
    auto [s1, s2] = interior(a, b);
    const Snapshot p1 = snapshot(profile, s1), p2 = snapshot(profile, s2);
    std::optional<std::pair<Rational, bool>> best;
    std::vector<int> best_players;
    for (int i = 0; i < 3; ++i) {
      std::array<Affine, 2> gs{fit(s1, p1.values[i][0] - p1.values[i][1], s2, p2.values[i][0] - p2.values[i][1]),
                               fit(s1, p1.values[i][0] - p1.values[i][2], s2, p2.values[i][0] - p2.values[i][2])};
      auto cand = first_feasible(a, b, gs);
      if (!cand) continue;
      // Earlier position wins; at equal positions an attained infimum is earlier.
      auto earlier = [](const std::pair<Rational, bool>& x, const std::pair<Rational, bool>& y) {
        return x.first < y.first || (x.first == y.first && x.second && !y.second);
      };
      if (!best || earlier(*cand, *best)) {
        best = cand;
        best_players = {i};
      } else if (!earlier(*best, *cand)) {
        best_players.push_back(i);
      }
    }
    if (best) {
      const auto& [s_star, attained] = *best;
      Snapshot snap;
      if (attained) {
        snap = snapshot(profile, s_star);
        best_players = shouters_at(snap);
        if (best_players.empty()) throw InvariantViolation("shout condition lost at " + s_star.str());
      } else {
        std::vector<Rational> knives;
        for (int i = 0; i < 3; ++i) knives.push_back(fit(s1, p1.knives[i], s2, p2.knives[i]).at(s_star));
        snap = snapshot_from_knives(profile, s_star, std::move(knives));
      }
      auto ev = make_event(s_star, snap, best_players, !attained);
      ev.intervals_examined = examined;
      return ev;
    }
  }
  throw InstanceInvalid("no player shouts before the sword reaches 1");
}

IndistinguishabilityReport indistinguishability_experiment(const Rational& x, const Rational& delta,
                                                           const std::vector<std::pair<Rational, Rational>>& queries) {
  IndistinguishabilityReport rep;
  rep.x = x;
  rep.delta = delta;
  auto oracle_for = [](PiecewiseDensity u) {
    return [u = std::move(u)](const IntervalQuery& q) { return u.eval(q.a, q.b); };
  };
  ValueOracle c_oracle(oracle_for(adversary::player_c(delta)));
  ValueOracle cx_oracle(oracle_for(adversary::player_c_perturbed(x, delta)));
  const Rational lo = x - delta, hi = x + delta;
  auto in_window = [&](const Rational& p) { return lo < p && p < hi; };
  for (const auto& [a, b] : queries) {
    QueryComparison qc;
    qc.a = a;
    qc.b = b;
    qc.base = c_oracle.query({0, a, b});
    qc.perturbed = cx_oracle.query({0, a, b});
    qc.differs = qc.base != qc.perturbed;
    qc.endpoint_in_window = in_window(a) || in_window(b);
    rep.distinguishing += qc.differs;
    rep.endpoints_in_window += qc.endpoint_in_window;
    rep.violations += qc.differs && !qc.endpoint_in_window;
    rep.queries.push_back(std::move(qc));
  }
  rep.distinct_queries_base = c_oracle.distinct_queries();
  rep.distinct_queries_perturbed = cx_oracle.distinct_queries();
  return rep;
}

namespace {

template <typename Accept>
std::vector<std::pair<Rational, Rational>> draw_queries(std::size_t count, std::uint64_t seed, int bits,
                                                        Accept&& accept) {
  if (bits < 1 || bits > 62) throw DomainError("query resolution must be between 1 and 62 bits");
  std::mt19937_64 rng(seed);
  const std::uint64_t scale = std::uint64_t{1} << bits;
  std::uniform_int_distribution<std::uint64_t> pick(0, scale);
  const Rational denom(static_cast<long>(scale));
  auto draw = [&] {
    while (true) {
      Rational p = Rational(static_cast<long>(pick(rng))) / denom;
      if (accept(p)) return p;
    }
  };
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational a = draw(), b = draw();
    if (b < a) std::swap(a, b);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, Rational>> random_queries(std::size_t count, std::uint64_t seed, int bits) {
  return draw_queries(count, seed, bits, [](const Rational&) { return true; });
}

std::vector<std::pair<Rational, Rational>> random_queries_outside(std::size_t count, std::uint64_t seed,
                                                                  const Rational& x, const Rational& delta, int bits) {
  const Rational lo = x - delta, hi = x + delta;
  return draw_queries(count, seed, bits, [&](const Rational& p) { return !(lo < p && p < hi); });
}

}  // namespace envycut
