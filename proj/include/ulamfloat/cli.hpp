// Command-line driver: configuration, dispatch and CSV/JSON emission.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ulamfloat {

struct RunConfig {
  /// "body", "cut", "ulam", "floating", "zp", "check sandwich", "check zp-sandwich",
  /// "check symmetry", "asa", "limit", "pasa", "grad-check", "float2d", "roundness".
  std::string command;
  std::string body_path;
  std::string weight_path;  ///< empty: constant weight 1
  double delta = 0.1;
  /// Interpret delta as a fraction of the total mass.
  bool delta_relative = false;
  double delta0 = 1e-2;
  int steps = 6;
  int m = 512;
  std::vector<double> theta;
  double p = 1.0;
  std::string extension = "radial";
  double rho = 0.5;
  int samples = 0;  ///< 0: command default
  int resolution = 0;
  double rel_tol = 1e-12;
  double radial_rel_tol = 1e-10;
  double check_tol = 1e-8;
  std::string backend = "auto";
  std::int64_t mc_samples = 400000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string output;  ///< empty: standard output
  std::string format;  ///< "json" or "csv"; empty: command default
};

/// The resolved configuration as a JSON object string.
std::string config_json(const RunConfig& config);

/// Exit codes: 0 success or verification passed, 1 verification failed or numerical
/// failure, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ulamfloat
