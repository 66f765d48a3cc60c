#pragma once

// Command-line front end: configuration, parsing and the five commands.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "superzeta/errors.hpp"

namespace superzeta::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kDomainError = 2, kNumericFailure = 3 };

struct CommandConfig {
  std::string command;       // zeros, eval, table, cumulants, verify
  std::string primary_spec;  // riemann, dirichlet:<D>, dedekind:<D>
  std::string family;        // z1, z2, z3 (eval)
  std::optional<cplx> s;     // s for z1, sigma for z2 and z3
  std::optional<cplx> point; // x, v or y
  std::string marker;        // deriv0 or fp1 in place of s
  double T_max = 100.0;
  std::string method = "auto";
  std::string format = "text";  // text, json, csv
  std::string cache_dir;
  std::string out_path;      // zeros: also write the cache here
  int table = 0;
  int n_max = 4;
  std::optional<cplx> parameter;  // table column: x or v
  int cumulant_order = 6;
  std::optional<double> tolerance;

  bool operator==(const CommandConfig&) const = default;
};

/// Accepts "a", "a+bi", "a-bi", "bi" (j for i is allowed).
cplx parse_complex(const std::string& text);

/// Throws DomainError on invalid flags or combinations.
CommandConfig parse_args(const std::vector<std::string>& args);

std::string to_json(const CommandConfig& config);
CommandConfig config_from_json(const std::string& text);

/// Runs a validated configuration. Errors propagate as exceptions.
int run(const CommandConfig& config, std::ostream& out);

/// Parse, run and map errors to exit codes; messages go to `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superzeta::cli
