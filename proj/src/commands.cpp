#include "envycut/commands.hpp"

#include <chrono>
#include <sstream>

#include "envycut/errors.hpp"

namespace envycut {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_from(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

Json query_counts(const ColoringOracle& oracle) {
  return {{"distinct", oracle.distinct_queries()}, {"total_calls", oracle.total_calls()}};
}

Coord resolve_n(const SolveRequest& req, const Rational& profile_k, Json& report) {
  if (req.n > 0 && !req.epsilon.empty()) throw SchemaError("give either --n or --epsilon, not both");
  if (req.n > 0) return req.n;
  if (req.epsilon.empty()) throw SchemaError("one of --n or --epsilon is required");
  const Rational eps = Rational::parse(req.epsilon);
  const Rational k = req.k.empty() ? profile_k : Rational::parse(req.k);
  const Coord n = grid_for_epsilon(k, eps);
  report["epsilon"] = eps.str();
  report["k"] = k.str();
  return n;
}

SolutionCell run_search(const std::string& algo, ColoringOracle& oracle, bool trace, Json& report) {
  if (algo == "dnc") {
    std::vector<DncStep> steps;
    auto sol = search_dnc(oracle, trace ? &steps : nullptr);
    if (trace) report["trace"] = dnc_trace_to_json(steps);
    return sol;
  }
  if (algo == "fast3") {
    std::vector<Fast3Step> steps;
    auto sol = solve3(oracle, trace ? &steps : nullptr);
    if (trace) report["trace"] = fast3_trace_to_json(steps);
    return sol;
  }
  if (algo == "brute") {
    auto all = brute_force_search(oracle);
    if (all.empty()) throw InvariantViolation("no fully colored cell found");
    report["solutions_found"] = all.size();
    return all.front();
  }
  throw SchemaError("unknown algorithm " + algo);
}

CommandResult solve_grid(const SolveRequest& req) {
  auto inst = grid_instance_from_json(req.instance);
  if (req.algo == "fast3") {
    throw SchemaError("fast3 relies on utility monotonicity; grid instances use dnc or brute");
  }
  Json report;
  report["command"] = "solve";
  report["algo"] = req.algo;
  Brouwer2DInstance brouwer;
  std::optional<DirectionPreservingInstance> dp;
  if (auto* b = std::get_if<Brouwer2DInstance>(&inst)) {
    brouwer = *b;
    report["kind"] = "brouwer";
  } else {
    dp = std::get<DirectionPreservingInstance>(inst);
    validate_dp(*dp);
    brouwer = dp_to_coloring(*dp);
    report["kind"] = "dp";
  }
  auto oracle = make_embedded_oracle(brouwer);
  oracle.set_deadline(deadline_from(req.timeout));
  report["d"] = 2;
  report["n"] = oracle.scale();
  const auto sol = run_search(req.algo, oracle, req.trace, report);
  report["solution"] = solution_to_json(sol);
  const auto sq = extract_brouwer(sol, brouwer);
  Json sj;
  sj["corner"] = {sq.corner.x, sq.corner.y};
  sj["values"] = sq.values;
  sj["all_colors"] = is_brouwer_solution(brouwer, sq.corner.x, sq.corner.y);
  if (dp) {
    Json zeros = Json::array();
    for (const auto& z : zeros_in_square(*dp, sq.corner)) zeros.push_back({z.x, z.y});
    sj["zeros"] = std::move(zeros);
  }
  report["square"] = std::move(sj);
  report["query_count"] = oracle.distinct_queries();
  report["queries"] = query_counts(oracle);
  return {report, 0};
}

std::pair<std::optional<Rational>, Rational> parse_adversary(const std::string& text) {
  std::optional<Rational> x, delta;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SchemaError("adversary expects x=<p/q>,delta=<p/q>");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "x") {
      x = Rational::parse(value);
    } else if (key == "delta") {
      delta = Rational::parse(value);
    } else {
      throw SchemaError("adversary: unknown key " + key);
    }
  }
  if (!delta) throw SchemaError("adversary needs delta=<p/q>");
  return {x, *delta};
}

}  // namespace

Coord grid_for_epsilon(const Rational& k, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw SchemaError("epsilon must be positive");
  if (k.sign() <= 0) throw SchemaError("K must be positive");
  const Rational target = k / epsilon;
  Coord n = 1;
  while (Rational(static_cast<long>(n)) < target) {
    if (n >= (Coord{1} << 40)) throw DomainError("K/epsilon is too large for the grid");
    n *= 2;
  }
  return n;
}

CommandResult run_solve(const SolveRequest& req) {
  if (is_grid_instance(req.instance)) return solve_grid(req);
  const UtilityProfile profile = profile_from_json(req.instance);
  validate_solver_profile(profile);
  Json report;
  report["command"] = "solve";
  report["algo"] = req.algo;
  report["d"] = profile.d();
  const Coord n = resolve_n(req, lipschitz_constant(profile), report);
  report["n"] = n;
  auto oracle = make_profile_oracle(profile, n);
  oracle.set_deadline(deadline_from(req.timeout));
  const auto sol = run_search(req.algo, oracle, req.trace, report);
  report["solution"] = solution_to_json(sol);
  const auto env = verify_envy_free(sol, profile);
  report["verification"] = envy_report_to_json(env);
  report["max_envy"] = env.valid ? Json(env.max_envy.str()) : Json(nullptr);
  report["query_count"] = oracle.distinct_queries();
  report["queries"] = query_counts(oracle);
  return {report, env.valid ? 0 : static_cast<int>(ExitCode::not_envy_free)};
}

CommandResult run_verify(const Json& instance, const Json& solution) {
  const UtilityProfile profile = profile_from_json(instance);
  const auto cuts = cuts_from_json(solution);
  const auto claimed = assignment_from_json(solution);
  const auto rep = verify_envy_free(cuts, profile, claimed);
  Json report;
  report["command"] = "verify";
  report["verification"] = envy_report_to_json(rep);
  bool ok = rep.valid;
  if (!claimed.empty()) {
    const bool claim_holds = rep.valid && rep.assignment == claimed;
    report["claimed_assignment"] = claimed;
    report["claimed_assignment_holds"] = claim_holds;
    ok = ok && claim_holds;
  }
  if (rep.valid) ok = ok && rep.max_envy <= rep.bound;
  report["envy_free"] = ok;
  return {report, ok ? 0 : static_cast<int>(ExitCode::not_envy_free)};
}

Json run_gen(const GenRequest& req) {
  if (req.kind == "brouwer") return brouwer_to_json(planted_brouwer(req.n, req.seed));
  if (req.kind == "dp") {
    auto inst = random_dp_instance(req.n, req.seed);
    validate_dp(inst);
    return dp_to_json(inst);
  }
  if (req.kind == "random") return profile_to_json(random_profile(req.d, req.seed));
  if (req.kind == "uniform") return profile_to_json(uniform_profile(req.d));
  if (req.kind == "adversary") return profile_to_json(adversary::profile(Rational::parse(req.delta)));
  throw SchemaError("unknown instance kind " + req.kind);
}

CommandResult run_stromquist(const StromquistRequest& req) {
  Json report;
  report["command"] = "stromquist";
  std::optional<std::pair<std::optional<Rational>, Rational>> adv;
  std::optional<UtilityProfile> profile;
  if (!req.adversary.empty()) {
    adv = parse_adversary(req.adversary);
    const auto& [x, delta] = *adv;
    profile = x ? adversary::perturbed_profile(*x, delta) : adversary::profile(delta);
    report["instance"] = x ? "adversary C_x" : "adversary C";
    report["delta"] = delta.str();
    if (x) report["x"] = x->str();
  } else if (!req.instance.is_null()) {
    profile = profile_from_json(req.instance);
    report["instance"] = "file";
  } else {
    throw SchemaError("an instance or an adversary is required");
  }
  report["shout"] = shout_to_json(simulate(*profile));
  if (req.queries > 0) {
    if (!adv || !adv->first) throw SchemaError("the query experiment needs an adversary with x=<p/q>");
    const Rational& x = *adv->first;
    const Rational& delta = adv->second;
    auto qs = req.outside ? random_queries_outside(req.queries, req.seed, x, delta)
                          : random_queries(req.queries, req.seed);
    auto rep = indistinguishability_experiment(x, delta, qs);
    Json ij = indistinguishability_to_json(rep, req.list_queries);
    ij["seed"] = req.seed;
    ij["endpoints_avoid_window"] = req.outside;
    report["indistinguishability"] = std::move(ij);
  }
  return {report, 0};
}

}  // namespace envycut
