#include "envycut/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "envycut/errors.hpp"

namespace envycut {

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError(where + ": expected a rational string \"p/q\" or an integer");
}

Json rational_to_json(const Rational& r) { return r.str(); }

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<Rational> rationals(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::vector<int> grid_values(const Json& grid, Coord n) {
  if (!grid.is_array() || static_cast<Coord>(grid.size()) != n + 1) throw SchemaError("grid: expected N+1 rows");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (const auto& row : grid) {
    if (!row.is_array() || static_cast<Coord>(row.size()) != n + 1) throw SchemaError("grid: expected N+1 values per row");
    for (const auto& v : row) values.push_back(static_cast<int>(integer(v, "grid value")));
  }
  return values;
}

template <typename F>
Json grid_json(Coord n, F&& at) {
  Json grid = Json::array();
  for (Coord x = 0; x <= n; ++x) {
    Json row = Json::array();
    for (Coord y = 0; y <= n; ++y) row.push_back(at(x, y));
    grid.push_back(std::move(row));
  }
  return grid;
}

constexpr Coord kExplicitGridLimit = 1024;

}  // namespace

UtilityProfile profile_from_json(const Json& j) {
  const auto d = integer(field(j, "d", "instance"), "instance.d");
  if (d < 1) throw SchemaError("instance.d must be >= 1");
  const auto& players = field(j, "players", "instance");
  if (!players.is_array()) throw SchemaError("instance.players: expected an array");
  if (static_cast<std::int64_t>(players.size()) != d + 1) {
    throw SchemaError("instance.players: expected d+1 = " + std::to_string(d + 1) + " players, got " +
                      std::to_string(players.size()));
  }
  std::vector<PiecewiseDensity> dens;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string where = "instance.players[" + std::to_string(i) + "]";
    const auto& p = players[i];
    auto bps = rationals(field(p, "breakpoints", where), where + ".breakpoints");
    try {
      if (p.contains("values")) {
        dens.emplace_back(std::move(bps), rationals(p["values"], where + ".values"));
      } else if (p.contains("masses")) {
        dens.push_back(PiecewiseDensity::from_masses(std::move(bps), rationals(p["masses"], where + ".masses")));
      } else {
        throw SchemaError(where + ": missing \"values\"");
      }
    } catch (const DomainError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return UtilityProfile(std::move(dens));
}

Json profile_to_json(const UtilityProfile& profile) {
  Json j;
  j["d"] = profile.d();
  Json players = Json::array();
  for (const auto& p : profile.players()) {
    Json pj;
    pj["breakpoints"] = Json::array();
    for (const auto& b : p.breakpoints()) pj["breakpoints"].push_back(b.str());
    pj["values"] = Json::array();
    for (const auto& v : p.densities()) pj["values"].push_back(v.str());
    players.push_back(std::move(pj));
  }
  j["players"] = std::move(players);
  return j;
}

bool is_grid_instance(const Json& j) { return j.is_object() && j.contains("kind"); }

GridInstance grid_instance_from_json(const Json& j) {
  const auto& kind_j = field(j, "kind", "grid instance");
  if (!kind_j.is_string()) throw SchemaError("grid instance.kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  const Coord n = integer(field(j, "n", "grid instance"), "grid instance.n");
  if (n < 1) throw SchemaError("grid instance.n must be >= 1");
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) seed = static_cast<std::uint64_t>(integer(j["seed"], "grid instance.seed"));
  auto point = [&](const char* key) -> std::optional<GridPoint> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    const auto& a = j[key];
    if (!a.is_array() || a.size() != 2) throw SchemaError(std::string("grid instance.") + key + ": expected [x, y]");
    return GridPoint{integer(a[0], key), integer(a[1], key)};
  };
  if (kind == "brouwer") {
    Brouwer2DInstance inst;
    auto plant = point("plant");
    if (j.contains("grid")) {
      inst = brouwer_from_grid(n, grid_values(j["grid"], n));
      inst.plant = plant;
    } else if (plant) {
      inst = planted_brouwer_at(n, plant->x, plant->y);
    } else {
      throw SchemaError("brouwer instance needs \"grid\" or \"plant\"");
    }
    inst.seed = seed;
    return inst;
  }
  if (kind == "dp") {
    DirectionPreservingInstance inst;
    if (j.contains("grid")) {
      inst = dp_from_grid(n, grid_values(j["grid"], n));
      inst.zero = point("zero");
      inst.seed = seed;
    } else if (seed) {
      inst = random_dp_instance(n, *seed);
    } else {
      throw SchemaError("dp instance needs \"grid\" or \"seed\"");
    }
    return inst;
  }
  throw SchemaError("grid instance.kind must be \"brouwer\" or \"dp\", got \"" + kind + "\"");
}

Json brouwer_to_json(const Brouwer2DInstance& inst) {
  Json j;
  j["kind"] = "brouwer";
  j["n"] = inst.n;
  if (inst.seed) j["seed"] = *inst.seed;
  if (inst.plant) j["plant"] = {inst.plant->x, inst.plant->y};
  if (inst.n <= kExplicitGridLimit) j["grid"] = grid_json(inst.n, [&](Coord x, Coord y) { return inst.at(x, y); });
  return j;
}

Json dp_to_json(const DirectionPreservingInstance& inst) {
  Json j;
  j["kind"] = "dp";
  j["n"] = inst.n;
  if (inst.seed) j["seed"] = *inst.seed;
  if (inst.zero) j["zero"] = {inst.zero->x, inst.zero->y};
  if (inst.n <= kExplicitGridLimit) j["grid"] = grid_json(inst.n, [&](Coord x, Coord y) { return inst.at(x, y); });
  return j;
}

Json point_to_json(const BarycentricPoint& p) { return p.coords(); }

Json solution_to_json(const SolutionCell& sol) {
  Json j;
  j["n"] = sol.cell.scale;
  j["base"] = sol.cell.base;
  j["perm"] = sol.cell.perm;
  j["vertices"] = Json::array();
  for (const auto& v : sol.vertices) j["vertices"].push_back(point_to_json(v));
  j["colors"] = sol.colors;
  j["labels"] = sol.labels;
  j["assignment"] = sol.assignment;
  return j;
}

std::vector<BarycentricPoint> cuts_from_json(const Json& j) {
  const Json& sol = j.contains("solution") ? j["solution"] : j;
  const Coord n = integer(field(sol, "n", "solution"), "solution.n");
  const auto& verts = field(sol, "vertices", "solution");
  if (!verts.is_array() || verts.empty()) throw SchemaError("solution.vertices: expected a non-empty array");
  std::vector<BarycentricPoint> out;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const std::string where = "solution.vertices[" + std::to_string(v) + "]";
    if (!verts[v].is_array()) throw SchemaError(where + ": expected an array");
    std::vector<Coord> coords;
    for (const auto& c : verts[v]) coords.push_back(integer(c, where));
    try {
      out.emplace_back(std::move(coords), n);
    } catch (const DomainError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return out;
}

std::vector<int> assignment_from_json(const Json& j) {
  const Json& sol = j.contains("solution") ? j["solution"] : j;
  std::vector<int> out;
  if (!sol.contains("assignment")) return out;
  for (const auto& a : sol["assignment"]) out.push_back(static_cast<int>(integer(a, "solution.assignment")));
  return out;
}

Json envy_report_to_json(const EnvyReport& rep) {
  Json j;
  j["valid"] = rep.valid;
  j["max_envy"] = rep.valid ? Json(rep.max_envy.str()) : Json(nullptr);
  j["envy_bound"] = rep.bound.str();
  j["assignment"] = rep.assignment;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  return j;
}

Json dnc_trace_to_json(const std::vector<DncStep>& steps) {
  Json arr = Json::array();
  for (const auto& s : steps) {
    Json j;
    j["lo"] = s.region.lo;
    j["hi"] = s.region.hi;
    j["axis"] = s.axis;
    j["cut"] = s.cut;
    j["index_lower"] = s.index_lower;
    j["index_upper"] = s.index_upper;
    j["took"] = s.took_lower ? "lower" : "upper";
    arr.push_back(std::move(j));
  }
  return arr;
}

Json fast3_trace_to_json(const std::vector<Fast3Step>& steps) {
  Json arr = Json::array();
  for (const auto& s : steps) {
    Json j;
    j["region"] = {s.region.i1, s.region.i2, s.region.k1, s.region.k2};
    j["cut_on"] = s.cut_i ? "i" : "k";
    j["cut"] = s.cut;
    j["index_lower"] = s.index_lower;
    j["index_upper"] = s.index_upper;
    j["took"] = s.took_lower ? "lower" : "upper";
    j["queries"] = s.queries;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json shout_to_json(const ShoutEvent& ev) {
  Json j;
  j["shouter"] = ev.shouter;
  j["sword"] = ev.sword.str();
  j["sword_approx"] = ev.sword.to_double();
  j["right_limit"] = ev.right_limit;
  j["also_shouting"] = ev.also_shouting;
  j["knives"] = Json::array();
  for (const auto& k : ev.knives) j["knives"].push_back(k.str());
  j["middle_knife"] = ev.middle_knife.str();
  j["middle_owner"] = ev.middle_owner;
  j["allocation"] = ev.allocation;
  j["pieces"] = Json::array();
  j["pieces"].push_back(Json::array({"0", ev.sword.str()}));
  j["pieces"].push_back(Json::array({ev.sword.str(), ev.middle_knife.str()}));
  j["pieces"].push_back(Json::array({ev.middle_knife.str(), "1"}));
  j["values"] = Json::array();
  for (const auto& row : ev.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    j["values"].push_back(std::move(r));
  }
  j["intervals_examined"] = ev.intervals_examined;
  return j;
}

Json indistinguishability_to_json(const IndistinguishabilityReport& rep, bool include_queries) {
  Json j;
  j["x"] = rep.x.str();
  j["delta"] = rep.delta.str();
  j["queries"] = rep.queries.size();
  j["distinguishing"] = rep.distinguishing;
  j["endpoints_in_window"] = rep.endpoints_in_window;
  j["violations"] = rep.violations;
  j["fraction"] = rep.fraction();
  j["expected_fraction"] = 4.0 * rep.delta.to_double();
  j["distinct_queries_base"] = rep.distinct_queries_base;
  j["distinct_queries_perturbed"] = rep.distinct_queries_perturbed;
  if (include_queries) {
    Json arr = Json::array();
    for (const auto& q : rep.queries) {
      arr.push_back({{"a", q.a.str()},
                     {"b", q.b.str()},
                     {"base", q.base.str()},
                     {"perturbed", q.perturbed.str()},
                     {"differs", q.differs}});
    }
    j["comparisons"] = std::move(arr);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

}  // namespace envycut
