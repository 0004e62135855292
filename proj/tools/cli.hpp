#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monopole::cli {

using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
  std::string command;
  std::string cartan;
  std::string alpha;
  std::string j_labels;
  std::string beta;
  std::string convention;
  std::string point;  // path, "-" for stdin, or inline JSON
  std::uint64_t seed = 0;
  std::size_t points = 100;
  double t = 1.0;
  double dt = 1e-3;
  double tol = 1e-9;
  unsigned jobs = 1;
  std::string out;
};

struct Report {
  json body;
  int exit_code = kExitOk;
};

// Seed from --seed, else MONOPOLE_SEED, else 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

// Jacobi identity, Omega P = Id, oracle-vs-table and rank at cfg.points
// seeded random chart points.
Report cmd_verify(const RunConfig& cfg);
Report cmd_oracle_check(const RunConfig& cfg);
Report cmd_leaves(const RunConfig& cfg);

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopole::cli
