#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "monopole/chart.hpp"
#include "monopole/poly.hpp"
#include "monopole/rational.hpp"

namespace monopole {

// mt19937_64 output is fully specified, and the draws below are plain
// modular reductions of it, so a seed reproduces the same points everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  // p/q with |p| <= bound, 1 <= q <= bound.
  Rat small_rational(std::int64_t bound = 10000);
  Rat nonzero_rational(std::int64_t bound = 10000);
  double uniform_real(double lo, double hi);

  // Distinct x across all colors, nonzero y; rejection on collisions.
  ChartPoint chart_point(const CartanDatum& cartan, const Degree& alpha, std::int64_t bound = 10000);
  // Complex chart point with coordinates of moderate size for flows.
  ComplexPoint complex_chart_point(const CartanDatum& cartan, const Degree& alpha);
  Poly polynomial(int max_degree, std::int64_t bound = 100);

 private:
  std::mt19937_64 engine_;
};

}  // namespace monopole
