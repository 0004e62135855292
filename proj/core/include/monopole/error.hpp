#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monopole {

enum class Errc {
  not_finite_type,
  malformed_matrix,
  index_out_of_range,
  duplicate_node,
  inexact_division,
  invariant_violation,
  not_a_root,
  coincident_roots,
  zero_y,
  outside_chart,
  coincident_evaluation,
  left_chart,
  support_violation,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the integrator when a trajectory approaches a coordinate
// collision or a vanishing y.
class LeftChart : public Error {
 public:
  LeftChart(double t, const std::string& what) : Error(Errc::left_chart, what), t_(t) {}

  double time() const noexcept { return t_; }

 private:
  double t_;
};

}  // namespace monopole
