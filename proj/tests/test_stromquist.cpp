#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "envycut/errors.hpp"
#include "envycut/stromquist.hpp"
#include "oracles.hpp"

using namespace envycut;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Floating-point moving knife, written from the procedure's description:
// knives by bisection on the cdf, shout when the left piece is at least both
// pieces cut by the median knife.
struct FloatKnives {
  std::vector<std::vector<double>> bp, dens;

  explicit FloatKnives(const UtilityProfile& p) {
    for (const auto& f : p.players()) {
      std::vector<double> b, d;
      for (const auto& r : f.breakpoints()) b.push_back(r.to_double());
      for (const auto& r : f.densities()) d.push_back(r.to_double());
      bp.push_back(b);
      dens.push_back(d);
    }
  }
  double cdf(int i, double x) const {
    double s = 0;
    for (std::size_t k = 0; k + 1 < bp[i].size(); ++k) {
      const double lo = bp[i][k], hi = std::min(bp[i][k + 1], x);
      if (hi > lo) s += (hi - lo) * dens[i][k];
    }
    return s;
  }
  double knife(int i, double s) const {
    const double target = (cdf(i, s) + cdf(i, 1.0)) / 2;
    double lo = s, hi = 1;
    for (int it = 0; it < 80; ++it) {
      const double mid = (lo + hi) / 2;
      (cdf(i, mid) < target ? lo : hi) = mid;
    }
    return hi;
  }
  // Largest margin by which any player's left piece beats the other two.
  double margin(double s) const {
    std::array<double, 3> k{knife(0, s), knife(1, s), knife(2, s)};
    std::sort(k.begin(), k.end());
    double best = -1e300;
    for (int i = 0; i < 3; ++i) {
      const double l = cdf(i, s), m = cdf(i, k[1]) - l, r = cdf(i, 1.0) - cdf(i, k[1]);
      best = std::max(best, l - std::max(m, r));
    }
    return best;
  }
  // First s (to ~1e-12) at which someone shouts, scanning in steps of h.
  double first_shout(double h, double tol) const {
    double prev = 0;
    if (margin(0) >= -tol) return 0;
    for (double s = h; s <= 1 + 1e-12; s += h) {
      if (margin(s) >= -tol) {
        double lo = prev, hi = s;
        for (int it = 0; it < 60; ++it) {
          const double mid = (lo + hi) / 2;
          (margin(mid) >= -tol ? hi : lo) = mid;
        }
        return hi;
      }
      prev = s;
    }
    return 2;
  }
};

// C with the [4/10, 6/10] segment worth 4, which keeps the middle piece
// delta ahead of the left piece until the sword passes 3/10.
PiecewiseDensity narrative_c(const Rational& delta) {
  return PiecewiseDensity::from_masses({R(0), R(1, 10), R(3, 10), R(4, 10), R(6, 10), R(1)},
                                       {R(100) - delta, R(2), R(98), R(4), R(0)});
}

PiecewiseDensity narrative_c_at(const Rational& x, const Rational& delta) {
  const Rational h(1, 2);
  return PiecewiseDensity({R(0), R(1, 10), x - delta, x, x + delta, R(3, 10), R(4, 10), R(6, 10), R(1)},
                          {R(1000) - delta * R(10), R(10), R(10) + h, R(10) - h, R(10), R(980), R(20), R(0)});
}

UtilityProfile with_c(const PiecewiseDensity& c) {
  return UtilityProfile({adversary::player_ab(), adversary::player_ab(), c});
}

std::array<Rational, 3> pieces(const PiecewiseDensity& f, const ShoutEvent& ev) {
  return {oracle::integrate(f, R(0), ev.sword), oracle::integrate(f, ev.sword, ev.middle_knife),
          oracle::integrate(f, ev.middle_knife, R(1))};
}

void check_allocation(const UtilityProfile& p, const ShoutEvent& ev) {
  std::vector<int> seen(3, 0);
  for (int i = 0; i < 3; ++i) ++seen[ev.allocation[i]];
  CHECK(seen == std::vector<int>{1, 1, 1});
  CHECK(ev.allocation[ev.shouter] == 0);
  for (int i = 0; i < 3; ++i) {
    const auto v = pieces(p[i], ev);
    CHECK(v[0] + v[1] + v[2] == p[i].total());
    CHECK(ev.values[i] == std::vector<Rational>(v.begin(), v.end()));
    if (i == ev.shouter) {
      CHECK(v[0] >= v[1]);
      CHECK(v[0] >= v[2]);
    } else {
      // Non-shouters split the rest at their knives; the left knife holds
      // the middle piece.
      const int other = 3 - ev.shouter - i;
      const bool left_of_other = ev.knives[i] < ev.knives[other] || (ev.knives[i] == ev.knives[other] && i < other);
      CHECK(ev.allocation[i] == (left_of_other ? 1 : 2));
      CHECK(v[ev.allocation[i]] >= v[3 - ev.allocation[i]]);
    }
  }
}

}  // namespace

TEST_CASE("knife positions") {
  CHECK(knife_position(PiecewiseDensity::uniform(), R(0)) == R(1, 2));
  CHECK(knife_position(adversary::player_ab(), R(1, 10)) == R(4, 10));
  for (long k = 11; k < 30; ++k) CHECK(knife_position(adversary::player_ab(), R(k, 100)) == R(k, 100) + R(3, 10));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_profile(2, seed)[0];
    for (long k = 0; k <= 20; ++k) {
      const Rational s(k, 20), m = knife_position(f, s);
      CHECK(s <= m);
      CHECK(m <= R(1));
      CHECK(f.eval(s, m) == f.eval(m, R(1)));
    }
  }
  CHECK_THROWS_AS(knife_position(PiecewiseDensity::uniform(), R(3, 2)), DomainError);
}

TEST_CASE("knives are nondecreasing in the sword position") {
  const auto p = adversary::profile(R(1, 1000));
  for (int i = 0; i < 3; ++i) {
    Rational prev(0);
    for (long k = 0; k <= 100; ++k) {
      const Rational m = knife_position(p[i], R(k, 100));
      CHECK(prev <= m);
      prev = m;
    }
  }
}

TEST_CASE("first shout agrees with a floating-point scan") {
  std::vector<UtilityProfile> profiles{adversary::profile(R(1, 1000)), with_c(narrative_c(R(1, 1000))),
                                       UtilityProfile({PiecewiseDensity::uniform(), PiecewiseDensity::uniform(),
                                                       PiecewiseDensity::uniform()})};
  for (std::uint64_t seed = 0; seed < 15; ++seed) profiles.push_back(random_profile(2, seed));
  for (const auto& p : profiles) {
    const auto ev = simulate(p);
    const double scan = FloatKnives(p).first_shout(1.0 / 512, 1e-9);
    CHECK(ev.sword.to_double() == doctest::Approx(scan).epsilon(1e-6));
    check_allocation(p, ev);
  }
}

TEST_CASE("literal moving-knife table: C shouts where its middle piece stops leading") {
  // Past 2/10 the middle piece's right end leaves C's [4/10, 5/10] segment,
  // so the delta lead closes at 2/10 + delta/20.
  const Rational delta(1, 1000);
  const auto ev = simulate(adversary::profile(delta));
  CHECK(ev.shouter == 2);
  CHECK(ev.sword == R(2, 10) + delta / R(20));
  CHECK(ev.middle_knife == ev.sword + R(3, 10));
  CHECK(ev.allocation == std::vector<int>{1, 2, 0});
}

TEST_CASE("narrative variant: C shouts just beyond 3/10") {
  const Rational delta(1, 1000);
  const auto p = with_c(narrative_c(delta));
  const auto ev = simulate(p);
  CHECK(ev.shouter == 2);
  CHECK(ev.sword > R(3, 10));
  CHECK(ev.sword <= R(3, 10) + R(1, 1000));
  check_allocation(p, ev);
  // A and B split the rest equally.
  CHECK(ev.values[0][1] == ev.values[0][2]);
}

TEST_CASE("narrative variant: perturbed C shouts at x") {
  const Rational delta(1, 1000000);
  for (const Rational& x : {R(3, 20), R(1, 5), R(1, 4), R(17, 100)}) {
    const auto ev = simulate(with_c(narrative_c_at(x, delta)));
    CHECK(ev.shouter == 2);
    CHECK(ev.sword == x);
  }
}

TEST_CASE("literal table: perturbed C") {
  const Rational delta(1, 1000000);
  CHECK(simulate(adversary::perturbed_profile(R(3, 20), delta)).sword == R(3, 20));
  CHECK(simulate(adversary::perturbed_profile(R(1, 5), delta)).sword == R(1, 5));
  CHECK(simulate(adversary::perturbed_profile(R(1, 4), delta)).sword == R(1, 5) + delta / R(20));
}

TEST_CASE("shout position is the identity on the narrative family") {
  const Rational delta(1, 1024);
  for (long k = 1; k < 16; ++k) {
    const Rational x = R(1, 10) + delta + (R(2, 10) - delta * R(2)) * R(k, 16);
    CHECK(simulate(with_c(narrative_c_at(x, delta))).sword == x);
  }
}

TEST_CASE("simulation is invariant under per-player scaling") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = random_profile(2, seed);
    std::vector<PiecewiseDensity> scaled;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> d;
      for (const auto& v : p[i].densities()) d.push_back(v * R(3 + 2 * i, 7));
      scaled.emplace_back(p[i].breakpoints(), d);
    }
    const auto a = simulate(p), b = simulate(UtilityProfile(scaled));
    CHECK(a.shouter == b.shouter);
    CHECK(a.sword == b.sword);
    CHECK(a.knives == b.knives);
    CHECK(a.middle_knife == b.middle_knife);
    CHECK(a.allocation == b.allocation);
  }
}

TEST_CASE("identical players tie to the lowest index") {
  const auto u = PiecewiseDensity::uniform();
  const auto ev = simulate(UtilityProfile({u, u, u}));
  CHECK(ev.shouter == 0);
  CHECK(ev.also_shouting == std::vector<int>{1, 2});
  CHECK(ev.sword == R(1, 3));
  CHECK(ev.middle_knife == R(2, 3));
  CHECK(ev.middle_owner == 0);
  CHECK(ev.allocation == std::vector<int>{0, 1, 2});
}

TEST_CASE("invalid moving-knife inputs") {
  const auto u = PiecewiseDensity::uniform();
  const PiecewiseDensity zero({R(0), R(1)}, {R(0)});
  CHECK_THROWS_AS(simulate(UtilityProfile({u, u, zero})), InstanceInvalid);
  CHECK_THROWS_AS(simulate(UtilityProfile({u, u})), DomainError);
}

TEST_CASE("indistinguishability examples") {
  const Rational x(2, 10), delta(1, 1000);
  const auto rep = indistinguishability_experiment(x, delta, {{R(0), R(1, 10)}, {x - delta / R(2), R(1, 2)}, {R(1, 4), R(1, 2)}});
  REQUIRE(rep.queries.size() == 3);
  CHECK_FALSE(rep.queries[0].differs);
  CHECK(rep.queries[1].differs);
  CHECK(abs(rep.queries[1].perturbed - rep.queries[1].base) == delta / R(4));
  CHECK(rep.queries[1].endpoint_in_window);
  CHECK_FALSE(rep.queries[2].differs);
  CHECK(rep.distinguishing == 1);
  CHECK(rep.violations == 0);
}

TEST_CASE("queries avoiding the window never distinguish") {
  const Rational x(1, 5), delta(1, 1 << 20);
  const auto qs = random_queries_outside(20000, 9, x, delta);
  for (const auto& [a, b] : qs) {
    CHECK(a <= b);
    CHECK_FALSE((a > x - delta && a < x + delta));
    CHECK_FALSE((b > x - delta && b < x + delta));
  }
  const auto rep = indistinguishability_experiment(x, delta, qs);
  CHECK(rep.distinguishing == 0);
  CHECK(rep.violations == 0);
}

TEST_CASE("random queries distinguish at the rate of endpoint hits") {
  // Each endpoint lands in the window with probability 2 delta; the two are
  // independent, so the rate is about 4 delta.
  const Rational x(1, 5), delta(1, 1 << 12);
  const std::size_t m = 200000;
  const auto rep = indistinguishability_experiment(x, delta, random_queries(m, 21));
  const double p = 4 * delta.to_double();
  const double mean = p * m, sigma = std::sqrt(m * p * (1 - p));
  CHECK(std::abs(static_cast<double>(rep.endpoints_in_window) - mean) <= 3 * sigma);
  CHECK(rep.distinguishing <= rep.endpoints_in_window);
  CHECK(rep.violations == 0);
  CHECK(rep.distinct_queries_base == rep.distinct_queries_perturbed);
}

TEST_CASE("random queries are seed-stable") {
  CHECK(random_queries(50, 3) == random_queries(50, 3));
  CHECK_FALSE(random_queries(50, 3) == random_queries(50, 4));
}
