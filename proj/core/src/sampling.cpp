#include "monopole/sampling.hpp"

#include <cmath>

#include "monopole/error.hpp"

namespace monopole {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rat Sampler::small_rational(std::int64_t bound) {
  Rat r(Int(static_cast<long>(uniform(-bound, bound))), Int(static_cast<long>(uniform(1, bound))));
  r.canonicalize();
  return r;
}

Rat Sampler::nonzero_rational(std::int64_t bound) {
  for (;;) {
    Rat r = small_rational(bound);
    if (r != 0) return r;
  }
}

double Sampler::uniform_real(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

ChartPoint Sampler::chart_point(const CartanDatum& cartan, const Degree& alpha, std::int64_t bound) {
  ChartLayout layout(cartan, alpha);
  std::vector<Rat> coords;
  coords.reserve(layout.size());
  while (coords.size() < layout.half()) {
    Rat x = small_rational(bound);
    bool clash = false;
    for (const Rat& other : coords) clash = clash || other == x;
    if (!clash) coords.push_back(std::move(x));
  }
  while (coords.size() < layout.size()) coords.push_back(nonzero_rational(bound));
  return ChartPoint::from_coords(std::move(layout), std::move(coords));
}

ComplexPoint Sampler::complex_chart_point(const CartanDatum& cartan, const Degree& alpha) {
  ChartLayout layout(cartan, alpha);
  std::vector<Complex> coords;
  coords.reserve(layout.size());
  while (coords.size() < layout.half()) {
    const Complex x(uniform_real(-2.0, 2.0), uniform_real(-2.0, 2.0));
    bool clash = false;
    for (const Complex& other : coords) clash = clash || std::abs(other - x) < 0.25;
    if (!clash) coords.push_back(x);
  }
  while (coords.size() < layout.size()) coords.push_back(std::polar(uniform_real(0.5, 2.0), uniform_real(-M_PI, M_PI)));
  return ComplexPoint(std::move(layout), std::move(coords));
}

Poly Sampler::polynomial(int max_degree, std::int64_t bound) {
  const auto degree = uniform(0, max_degree);
  std::vector<Rat> c;
  for (std::int64_t m = 0; m <= degree; ++m) c.push_back(small_rational(bound));
  return Poly(std::move(c));
}

}  // namespace monopole
