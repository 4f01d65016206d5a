// envycut: command-line front end for the solvers, generators and benchmarks.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "envycut/coloring.hpp"
#include "envycut/commands.hpp"
#include "envycut/errors.hpp"
#include "envycut/fast3.hpp"
#include "envycut/io.hpp"
#include "envycut/search.hpp"

using namespace envycut;

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_from(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

int finish(const CommandResult& result, const std::string& path) {
  write_json_file(path.empty() ? "-" : path, result.report);
  return result.exit_code;
}

// ---- bench -------------------------------------------------------------

struct BenchOptions {
  std::string suite = "dnc-scaling";
  std::vector<Coord> sizes;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int d = 3;
  double timeout = 60;
  std::string out;
};

// Least-squares slope and intercept of y on x.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double b = sxx > 0 ? sxy / sxx : 0.0;
  return {b, my - b * mx};
}

int cmd_bench(BenchOptions o) {
  const bool dnc = o.suite == "dnc-scaling";
  if (!dnc && o.suite != "fast3-scaling") throw SchemaError("unknown --suite " + o.suite);
  if (!dnc) o.d = 2;
  if (o.sizes.empty()) {
    if (dnc) {
      o.sizes = {8, 16, 32, 64};
    } else {
      for (int e = 8; e <= 20; e += 2) o.sizes.push_back(Coord{1} << e);
    }
  }
  for (Coord n : o.sizes) {
    if (!is_power_of_two(n)) throw SchemaError("bench sizes must be powers of 2");
  }
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw SchemaError("cannot write " + o.out);
  }
  std::ostream& csv = o.out.empty() ? std::cout : file;
  csv << "algo,d,n,seed,queries,wall_ms,status,solution\n";
  std::vector<double> xs, ys;
  for (Coord n : o.sizes) {
    for (auto seed : o.seeds) {
      const auto profile = random_profile(o.d, seed);
      auto oracle = make_profile_oracle(profile, n);
      oracle.set_deadline(deadline_from(o.timeout));
      const auto t0 = Clock::now();
      std::string status = "ok", summary;
      try {
        const auto sol = dnc ? search_dnc(oracle) : solve3(oracle);
        std::ostringstream s;
        for (std::size_t v = 0; v < sol.cell.base.size(); ++v) s << (v ? " " : "") << sol.cell.base[v];
        s << " |";
        for (int p : sol.cell.perm) s << ' ' << p;
        summary = s.str();
      } catch (const Timeout&) {
        status = "timeout";
      } catch (const Error& e) {
        status = "error";
        summary = e.what();
        std::replace(summary.begin(), summary.end(), ',', ';');
      }
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      const auto q = oracle.distinct_queries();
      csv << (dnc ? "dnc" : "fast3") << ',' << o.d << ',' << n << ',' << seed << ',' << q << ',' << ms << ','
          << status << ',' << summary << '\n';
      if (status == "ok") {
        const double lg = std::log2(static_cast<double>(n));
        xs.push_back(dnc ? std::log(static_cast<double>(n)) : lg * lg);
        ys.push_back(dnc ? std::log(static_cast<double>(q)) : static_cast<double>(q));
      }
    }
  }
  if (xs.size() >= 2) {
    auto [b, a] = fit_line(xs, ys);
    if (dnc) {
      csv << "# summary,loglog_slope," << b << '\n';
    } else {
      csv << "# summary,fit a+b*log2(N)^2,a=" << a << ",b=" << b << '\n';
    }
  }
  return 0;
}

// ---- cells -------------------------------------------------------------

int cmd_cells(int d, Coord n) {
  if (simplex_cell_count(d, n) > 100000) throw BudgetExceeded("cells listing limited to 100000 cells", simplex_cell_count(d, n), 100000);
  for_each_simplex_cell(d, n, [&](const BaseCell& cell) {
    std::cout << "base";
    for (auto c : cell.base) std::cout << ' ' << c;
    std::cout << " perm";
    for (auto p : cell.perm) std::cout << ' ' << p;
    std::cout << " :";
    for (const auto& v : cell_vertices_barycentric(cell)) std::cout << ' ' << v.str() << "/L" << label(v);
    std::cout << '\n';
    return true;
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate envy-free cake cutting: solvers, generators and benchmarks"};
  app.require_subcommand(1);

  SolveRequest solve;
  std::string solve_instance, solve_report;
  auto* s = app.add_subcommand("solve", "Find a fully colored cell and verify envy-freeness");
  s->add_option("--instance", solve_instance, "Instance JSON (utility profile or grid instance)")->required();
  s->add_option("--n", solve.n, "Grid scale N");
  s->add_option("--epsilon", solve.epsilon, "Target envy; N = K/epsilon rounded up to a power of 2");
  s->add_option("--k", solve.k, "Lipschitz constant K (default: max density)");
  s->add_option("--algo", solve.algo, "dnc | brute | fast3")->check(CLI::IsMember({"dnc", "brute", "fast3"}));
  s->add_option("--report", solve_report, "Report JSON path (default stdout)");
  s->add_flag("--trace", solve.trace, "Include the recursion trace");
  s->add_option("--timeout", solve.timeout, "Seconds before giving up (0 = none)");

  SolveRequest solve3;
  std::string solve3_instance, solve3_report;
  auto* s3 = app.add_subcommand("solve3", "Three-player search with O(log^2 N) queries");
  s3->add_option("--instance", solve3_instance, "Instance JSON (three players)")->required();
  s3->add_option("--n", solve3.n, "Grid scale N (up to 2^30)");
  s3->add_option("--epsilon", solve3.epsilon, "Target envy");
  s3->add_option("--k", solve3.k, "Lipschitz constant K");
  s3->add_option("--report", solve3_report, "Report JSON path (default stdout)");
  s3->add_flag("--trace", solve3.trace, "Include the per-round trace");
  s3->add_option("--timeout", solve3.timeout, "Seconds before giving up (0 = none)");

  GenRequest gen;
  std::string gen_out;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "brouwer | dp | random | uniform | adversary")
      ->check(CLI::IsMember({"brouwer", "dp", "random", "uniform", "adversary"}));
  g->add_option("--n", gen.n, "Grid size for brouwer/dp");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--d", gen.d, "Cuts for random/uniform profiles");
  g->add_option("--delta", gen.delta, "delta for the adversary profile");
  g->add_option("--out", gen_out, "Output JSON path (default stdout)");

  StromquistRequest sq;
  std::string sq_instance, sq_report;
  auto* st = app.add_subcommand("stromquist", "Simulate the moving-knife procedure");
  st->add_option("--instance", sq_instance, "Three-player instance JSON");
  st->add_option("--adversary", sq.adversary, "x=<p/q>,delta=<p/q> (omit x for the unperturbed C)");
  st->add_option("--queries", sq.queries, "Random value queries for the indistinguishability experiment");
  st->add_option("--seed", sq.seed, "Seed for the queries");
  st->add_flag("--outside", sq.outside, "Draw query endpoints outside (x - delta, x + delta)");
  st->add_flag("--list-queries", sq.list_queries, "Include every query comparison in the report");
  st->add_option("--report", sq_report, "Report JSON path (default stdout)");

  std::string v_instance, v_solution, v_report;
  auto* v = app.add_subcommand("verify", "Check a solution file against an instance");
  v->add_option("--instance", v_instance, "Instance JSON")->required();
  v->add_option("--solution", v_solution, "Solution or solve report JSON")->required();
  v->add_option("--report", v_report, "Report JSON path (default stdout)");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Query-count scaling benchmarks (CSV)");
  b->add_option("--suite", bench.suite, "dnc-scaling | fast3-scaling")
      ->check(CLI::IsMember({"dnc-scaling", "fast3-scaling"}));
  b->add_option("--sizes", bench.sizes, "Grid sizes (powers of 2)");
  b->add_option("--seeds", bench.seeds, "Profile seeds");
  b->add_option("--d", bench.d, "Cuts for dnc-scaling");
  b->add_option("--timeout", bench.timeout, "Per-row timeout in seconds");
  b->add_option("--out", bench.out, "CSV path (default stdout)");

  int cells_d = 2;
  Coord cells_n = 2;
  auto* c = app.add_subcommand("cells", "List the base cells of a small grid");
  c->add_option("--d", cells_d, "Cuts");
  c->add_option("--n", cells_n, "Grid scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::schema);
  }

  try {
    if (*s) {
      solve.instance = read_json_file(solve_instance);
      return finish(run_solve(solve), solve_report);
    }
    if (*s3) {
      solve3.instance = read_json_file(solve3_instance);
      solve3.algo = "fast3";
      return finish(run_solve(solve3), solve3_report);
    }
    if (*g) {
      write_json_file(gen_out.empty() ? "-" : gen_out, run_gen(gen));
      return 0;
    }
    if (*st) {
      if (!sq_instance.empty()) sq.instance = read_json_file(sq_instance);
      return finish(run_stromquist(sq), sq_report);
    }
    if (*v) return finish(run_verify(read_json_file(v_instance), read_json_file(v_solution)), v_report);
    if (*b) return cmd_bench(bench);
    if (*c) return cmd_cells(cells_d, cells_n);
  } catch (const BudgetExceeded& e) {
    std::cerr << "envycut: budget exceeded: " << e.what() << " (required " << e.required() << ")\n";
    return static_cast<int>(e.exit_code());
  } catch (const Error& e) {
    std::cerr << "envycut: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "envycut: internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::internal);
  }
  return static_cast<int>(ExitCode::internal);
}
