#include <doctest.h>

#include "envycut/commands.hpp"
#include "envycut/errors.hpp"
#include "envycut/io.hpp"

using namespace envycut;

namespace {

int exit_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.exit_code());
  }
  return 0;
}

}  // namespace

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/6"), "x") == Rational(1, 2));
  CHECK(rational_from_json(Json(4), "x") == Rational(4));
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "x"), SchemaError);
  CHECK(rational_to_json(Rational(-2, 4)) == Json("-1/2"));
}

TEST_CASE("profiles round-trip") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_profile(3, seed);
    const auto q = profile_from_json(profile_to_json(p));
    CHECK(p.players() == q.players());
  }
  const auto a = adversary::profile(Rational(1, 1000));
  CHECK(profile_from_json(Json::parse(profile_to_json(a).dump())).players() == a.players());
}

TEST_CASE("profiles may be given by segment masses") {
  const auto j = Json::parse(R"({"d": 1, "players": [
      {"breakpoints": ["0", "1/4", "1"], "masses": ["1", "3"]},
      {"breakpoints": [0, 1], "values": [2]}]})");
  const auto p = profile_from_json(j);
  CHECK(p[0].densities() == std::vector<Rational>{Rational(4), Rational(4)});
  CHECK(p[1].total() == Rational(2));
}

TEST_CASE("malformed profiles are schema errors") {
  const char* bad[] = {
      R"({"players": []})",
      R"({"d": 2, "players": [{"breakpoints": [0, 1], "values": [1]}]})",
      R"({"d": 1, "players": [{"breakpoints": [0, 1]}, {"breakpoints": [0, 1], "values": [1]}]})",
      R"({"d": 1, "players": [{"breakpoints": [0, 1], "values": ["x"]}, {"breakpoints": [0, 1], "values": [1]}]})",
      R"({"d": 1, "players": [{"breakpoints": [0, "1/2"], "values": [1]}, {"breakpoints": [0, 1], "values": [1]}]})",
      R"({"d": 1, "players": [{"breakpoints": [0, 1], "values": [-1]}, {"breakpoints": [0, 1], "values": [1]}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(profile_from_json(Json::parse(text)), SchemaError);
  }
}

TEST_CASE("grid instances round-trip") {
  const auto b = planted_brouwer(16, 2);
  const auto bj = brouwer_to_json(b);
  CHECK(is_grid_instance(bj));
  const auto b2 = std::get<Brouwer2DInstance>(grid_instance_from_json(bj));
  for (Coord x = 0; x <= 16; ++x) {
    for (Coord y = 0; y <= 16; ++y) CHECK(b.at(x, y) == b2.at(x, y));
  }
  CHECK(*b2.plant == *b.plant);

  const auto d = random_dp_instance(20, 6);
  const auto d2 = std::get<DirectionPreservingInstance>(grid_instance_from_json(dp_to_json(d)));
  for (Coord x = 0; x <= 20; ++x) {
    for (Coord y = 0; y <= 20; ++y) CHECK(d.at(x, y) == d2.at(x, y));
  }

  // Large grids are stored procedurally.
  const auto big = dp_to_json(random_dp_instance(2048, 1));
  CHECK_FALSE(big.contains("grid"));
  const auto big2 = std::get<DirectionPreservingInstance>(grid_instance_from_json(big));
  CHECK(big2.at(5, 7) == random_dp_instance(2048, 1).at(5, 7));

  CHECK_THROWS_AS(grid_instance_from_json(Json::parse(R"({"kind": "maze", "n": 4})")), SchemaError);
  CHECK_THROWS_AS(grid_instance_from_json(Json::parse(R"({"kind": "dp", "n": 4})")), SchemaError);
  CHECK_THROWS_AS(grid_instance_from_json(Json::parse(R"({"kind": "dp", "n": 2, "grid": [[1, 1]]})")), SchemaError);
}

TEST_CASE("solutions round-trip through cuts") {
  const auto p = random_profile(2, 5);
  auto o = make_profile_oracle(p, 32);
  const auto sol = search_dnc(o);
  const auto j = solution_to_json(sol);
  CHECK(cuts_from_json(j) == sol.vertices);
  CHECK(assignment_from_json(j) == sol.assignment);
  Json report;
  report["solution"] = j;
  CHECK(cuts_from_json(report) == sol.vertices);
  CHECK_THROWS_AS(cuts_from_json(Json::parse(R"({"n": 4, "vertices": [[1, 1, 1]]})")), SchemaError);
}

TEST_CASE("epsilon maps to a power-of-two grid") {
  CHECK(grid_for_epsilon(Rational(1), Rational(1, 1000)) == 1024);
  CHECK(grid_for_epsilon(Rational(1), Rational(1, 1024)) == 1024);
  CHECK(grid_for_epsilon(Rational(9), Rational(1, 10)) == 128);
  CHECK_THROWS_AS(grid_for_epsilon(Rational(1), Rational(0)), SchemaError);
}

TEST_CASE("solve command reports and verifies") {
  SolveRequest req;
  req.instance = profile_to_json(random_profile(2, 4));
  req.n = 64;
  for (const char* algo : {"dnc", "brute", "fast3"}) {
    req.algo = algo;
    const auto res = run_solve(req);
    CHECK(res.exit_code == 0);
    CHECK(res.report["verification"]["valid"] == true);
    CHECK(res.report["query_count"].get<std::uint64_t>() > 0);
    const auto ver = run_verify(req.instance, res.report);
    CHECK(ver.exit_code == 0);
    CHECK(ver.report["envy_free"] == true);
  }
}

TEST_CASE("solve from epsilon records K and N") {
  SolveRequest req;
  req.instance = profile_to_json(uniform_profile(2));
  req.epsilon = "1/100";
  const auto res = run_solve(req);
  CHECK(res.report["n"] == 128);
  CHECK(res.report["k"] == "1");
  req.n = 16;
  CHECK(exit_code_of([&] { run_solve(req); }) == 2);
}

TEST_CASE("solve on grid instances extracts the square") {
  SolveRequest req;
  req.instance = brouwer_to_json(planted_brouwer(32, 3));
  const auto res = run_solve(req);
  CHECK(res.report["square"]["all_colors"] == true);
  CHECK(res.report["square"]["corner"] == req.instance["plant"]);
  req.instance = dp_to_json(random_dp_instance(32, 7));
  const auto dp = run_solve(req);
  CHECK_FALSE(dp.report["square"]["zeros"].empty());
}

TEST_CASE("tampered solutions fail verification") {
  const auto inst = profile_to_json(uniform_profile(2));
  SolveRequest req;
  req.instance = inst;
  req.n = 16;
  auto rep = run_solve(req).report;
  rep["solution"]["vertices"] = Json::parse("[[16, 0, 0], [15, 1, 0], [15, 0, 1]]");
  const auto res = run_verify(inst, rep);
  CHECK(res.exit_code == 5);
  CHECK(res.report["envy_free"] == false);
}

TEST_CASE("errors carry distinct exit codes") {
  SolveRequest req;
  req.n = 8;
  req.instance = profile_to_json(adversary::profile(Rational(1, 1000)));
  CHECK(exit_code_of([&] { run_solve(req); }) == 6);
  req.instance = Json::parse(R"({"d": 2})");
  CHECK(exit_code_of([&] { run_solve(req); }) == 2);
  req.instance = profile_to_json(random_profile(3, 1));
  req.algo = "brute";
  req.n = 1024;
  CHECK(exit_code_of([&] { run_solve(req); }) == 3);
  req.algo = "fast3";
  CHECK(exit_code_of([&] { run_solve(req); }) == 2);
}

TEST_CASE("generated instances are deterministic") {
  GenRequest g;
  g.kind = "dp";
  g.n = 16;
  g.seed = 7;
  CHECK(run_gen(g).dump() == run_gen(g).dump());
  g.kind = "random";
  g.d = 3;
  CHECK(profile_from_json(run_gen(g)).players() == random_profile(3, 7).players());
}

TEST_CASE("stromquist command") {
  StromquistRequest req;
  req.adversary = "x=1/5,delta=1/1000000";
  req.queries = 1000;
  req.seed = 2;
  req.outside = true;
  const auto res = run_stromquist(req);
  CHECK(res.report["shout"]["shouter"] == 2);
  CHECK(res.report["shout"]["sword"] == "1/5");
  CHECK(res.report["indistinguishability"]["violations"] == 0);
  CHECK(res.report["indistinguishability"]["distinguishing"] == 0);
  req.adversary = "delta=1/1000000";
  req.queries = 0;
  CHECK(run_stromquist(req).report["instance"] == "adversary C");
  req.adversary = "y=3";
  CHECK_THROWS_AS(run_stromquist(req), SchemaError);
}

TEST_CASE("shout pieces serialize as interval pairs") {
  const auto j = shout_to_json(simulate(adversary::profile(Rational(1, 1000))));
  REQUIRE(j["pieces"].is_array());
  REQUIRE(j["pieces"].size() == 3);
  CHECK(j["pieces"][0] == Json::array({"0", j["sword"]}));
  CHECK(j["pieces"][2][1] == "1");
}
