#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qmt/report.hpp"

namespace qmt {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// One fully-specified checker invocation. Commands: laws, space-check,
/// space-ball, space-cauchy, struct-check, struct-embed, class-ap,
/// class-types, class-dist, class-ctp, class-tame, omega-check.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string quantale = "extreal";
  int budget = 10000;
  int depth = 64;
  double tol = 1e-9;           // echoed in reports; comparisons use the
                               // library-wide tolerance
  int kappa = 1;
  std::string eps;             // value literal in the target quantale
  std::string delta;
  bool strong = false;         // tameness with delta = eps
  std::string center;          // ball center point
  std::string seq;             // comma-separated point names
  std::string limit;           // convergence target point
  std::string map;             // embedding pairs "a:b,c:d"
  std::string base;            // class base structure name
  std::uint64_t seed = 0;
  std::string out;             // output path; empty writes to stdout
  std::string format = "text"; // text | json
};

/// Dispatches to the named checker and assembles the report. Throws
/// ParseError / QuantaleError / std::invalid_argument on unusable input.
Report run(const RunConfig& config);

/// Renders the report of run() to `out` (or the configured output path) and
/// returns the exit status: 0 when every check passed, 1 otherwise, 2 on
/// error (message goes to `err`).
int run_to_stream(const RunConfig& config, std::ostream& out,
                  std::ostream& err);

}  // namespace qmt
