#pragma once

// Report-producing entry points shared by the CLI and the Python module.
// Errors propagate as envycut::Error subclasses; each carries its exit code.

#include <string>

#include "envycut/io.hpp"

namespace envycut {

struct CommandResult {
  Json report;
  int exit_code = 0;
};

struct SolveRequest {
  Json instance;            // utility profile or grid instance
  Coord n = 0;              // grid scale, or 0 to derive it from epsilon
  std::string epsilon;      // "p/q"
  std::string k;            // "p/q"; defaults to the profile's max density
  std::string algo = "dnc"; // dnc | brute | fast3
  bool trace = false;
  double timeout = 0;       // seconds, 0 = none
};

/// N = K / epsilon rounded up to a power of two.
Coord grid_for_epsilon(const Rational& k, const Rational& epsilon);

/// Exit code 5 when the found cell fails verification.
CommandResult run_solve(const SolveRequest& req);

/// Exit code 5 unless the cuts admit an envy-free assignment, the claimed
/// assignment (if any) is the one found, and max_envy is within K (d+1)/N.
CommandResult run_verify(const Json& instance, const Json& solution);

struct GenRequest {
  std::string kind = "dp";  // brouwer | dp | random | uniform | adversary
  Coord n = 64;
  std::uint64_t seed = 0;
  int d = 2;
  std::string delta = "1/1000000";
};
Json run_gen(const GenRequest& req);

struct StromquistRequest {
  Json instance;             // used when adversary is empty
  std::string adversary;     // "x=<p/q>,delta=<p/q>" or "delta=<p/q>"
  std::size_t queries = 0;
  std::uint64_t seed = 0;
  bool outside = false;
  bool list_queries = false;
};
CommandResult run_stromquist(const StromquistRequest& req);

}  // namespace envycut
