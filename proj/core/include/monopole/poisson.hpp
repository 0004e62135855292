#pragma once

#include <cstddef>
#include <vector>

#include "monopole/chart.hpp"
#include "monopole/error.hpp"
#include "monopole/matrix.hpp"
#include "monopole/multipoly.hpp"
#include "monopole/rational.hpp"

namespace monopole {

// Bracket table in chart coordinates:
//   {x_i^k, x_j^l} = 0
//   {x_i^k, y_j^l} = delta_ij delta_kl y_i^k
//   {y_i^k, y_j^l} = (i.j) y_i^k y_j^l / (x_i^k - x_j^l)   for i != j
//   {y_i^k, y_i^l} = 0
// The same formulas serve exact points and the complex points used by flows.
template <class Scalar>
Scalar bracket_entry(const BasicChartPoint<Scalar>& pt, std::size_t a, std::size_t b) {
  const ChartLayout& layout = pt.layout();
  const std::size_t half = layout.half();
  const auto& v = pt.coords();
  const bool ax = a < half;
  const bool bx = b < half;
  if (ax && bx) return Scalar(0);
  if (ax != bx) {
    const std::size_t xa = ax ? a : b;
    const std::size_t ya = ax ? b : a;
    if (ya - half != xa) return Scalar(0);
    return ax ? v[ya] : Scalar(-v[ya]);
  }
  const std::size_t ha = a - half;
  const std::size_t hb = b - half;
  const std::size_t ci = layout.color_of(ha);
  const std::size_t cj = layout.color_of(hb);
  if (ci == cj) return Scalar(0);
  const int ij = layout.cartan().dot(ci, cj);
  if (ij == 0) return Scalar(0);
  const Scalar gap = v[ha] - v[hb];
  if (gap == Scalar(0)) throw Error(Errc::outside_chart, "coincident x in {y,y} bracket");
  return Scalar(ij) * v[a] * v[b] / gap;
}

template <class Scalar>
Matrix<Scalar> bivector_matrix_of(const BasicChartPoint<Scalar>& pt) {
  const std::size_t n = pt.layout().size();
  Matrix<Scalar> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      m(a, b) = bracket_entry(pt, a, b);
      m(b, a) = -m(a, b);
    }
  return m;
}

Rat bracket_coords(const ChartPoint& pt, const CoordIndex& a, const CoordIndex& b);

RatMatrix bivector_matrix(const ChartPoint& pt);

// Omega(dx_i^k, dy_i^k) = -1/y_i^k, Omega(dx_i^k, dx_j^l) = (i.j)/(x_i^k - x_j^l)
// for i != j, y-y block zero. With the bracket sign above, Omega * P = Id.
RatMatrix symplectic_matrix(const ChartPoint& pt);

// sum_{a,b} df/dxi_a P^{ab} dg/dxi_b at pt.
Rat bracket_functions(const ChartPoint& pt, const MultiPoly& f, const MultiPoly& g);

// Nonzero partial derivatives d P^{ab} / d xi_d, in closed form.
struct EntryPartial {
  std::size_t variable;
  Rat value;
};
std::vector<EntryPartial> bracket_entry_partials(const ChartPoint& pt, std::size_t a, std::size_t b);

// {{a,b},c} + {{b,c},a} + {{c,a},b}
Rat jacobiator(const ChartPoint& pt, const CoordIndex& a, const CoordIndex& b, const CoordIndex& c);
Rat jacobiator(const ChartPoint& pt, std::size_t a, std::size_t b, std::size_t c);

struct JacobiFailure {
  std::size_t a, b, c;
  Rat value;
};

// Evaluates the Jacobiator on every ordered triple a, b, c of coordinates,
// reusing one assembled matrix for the outer brackets.
struct JacobiScan {
  std::size_t triples = 0;
  std::vector<JacobiFailure> failures;
};
JacobiScan jacobi_scan(const ChartPoint& pt);

std::size_t rank(const ChartPoint& pt);

}  // namespace monopole
