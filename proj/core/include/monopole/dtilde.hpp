#pragma once

#include <cstddef>
#include <vector>

#include "monopole/cartan.hpp"
#include "monopole/chart.hpp"
#include "monopole/poly.hpp"
#include "monopole/rational.hpp"

namespace monopole {

// Recomputes the chart brackets from the polynomial data (p_i, q_i) through
// the divided-difference section
//   T_i(z, w) = (p_i(z) q_i(w) - q_i(z) p_i(w)) / (z - w)
// and the mixed-color component with coefficient (i.j) on F_i v (x) F_j v.
// Nothing here reads the bracket table in poisson.hpp.
//
// Sign: the dy-pairing <f^{i'-w}, F_i v_w> = -1 enters once per dy. For the
// (x, y) pair it combines with the orientation F_i v (x) v - v (x) F_i v of
// the same-color component, for the (y, y) pair it appears squared; both
// products are +1, which gives {x_i^k, y_i^k} = +y_i^k.
class DTildeOracle {
 public:
  // roots[i] must be exactly the roots of pc.p[i]; throws invariant_violation.
  DTildeOracle(PolyChart pc, std::vector<std::vector<Rat>> roots);

  const PolyChart& polys() const noexcept { return pc_; }
  const BiPoly& same_color_section(std::size_t color) const { return sections_.at(color); }

  // T_i(x, x) / p_i'(x) at x = x_i^k
  Rat xy(std::size_t color, std::size_t k) const;
  // T_i(x_i^k, x_i^l), k != l
  Rat yy_same(std::size_t color, std::size_t k, std::size_t l) const;
  // (i.j) q_i(x_i^k) q_j(x_j^l) / (x_i^k - x_j^l), i != j. The two terms of
  // the numerator carrying p_i(z) or p_j(w) vanish at the evaluation point;
  // this is checked, not assumed.
  Rat yy_mixed(std::size_t ci, std::size_t k, std::size_t cj, std::size_t l) const;

  // Oracle value of {xi_a, xi_b} for any pair of coordinates.
  Rat bracket(const CoordIndex& a, const CoordIndex& b) const;

 private:
  PolyChart pc_;
  std::vector<std::vector<Rat>> roots_;
  std::vector<BiPoly> sections_;
};

// Scalars of sum xi^k (x) xi_k - (w_i, w_j) on the summands of V_{w_i} (x) V_{w_j}
// and the projection denominators they cancel against.
struct CasimirTable {
  Rat top;           // on V_{w_i + w_j}
  Rat same_color;    // on V_{2 w_i - i'}
  Rat mixed;         // on V_{w_i + w_j - i' - j'}, present iff i != j and i.j != 0
  Rat same_denominator;   // 2
  Rat mixed_denominator;  // i.j - 2
  bool has_mixed = false;

  Rat same_ratio() const { return same_color / same_denominator; }
  Rat mixed_ratio() const { return mixed / mixed_denominator; }
};

// Table of the expected scalars for colors (i, j) of a datum.
CasimirTable casimir_table(const CartanDatum& cartan, std::size_t i, std::size_t j);

// Builds the 2-dimensional representation of sl_2, the dual-basis operator
// sum xi^k (x) xi_k with respect to the trace form on V (x) V, subtracts
// (w, w) and reads the scalars off the highest vectors of Sym^2 V and
// Lambda^2 V. Each of the four basis vectors is checked to be an eigenvector.
struct Rank1Casimir {
  Rat on_symmetric;      // V_{2w}
  Rat on_antisymmetric;  // V_{2w - i'}
  Rat denominator;       // 2
  Rat ratio() const { return on_antisymmetric / denominator; }
};
Rank1Casimir casimir_scalars_rank1();

}  // namespace monopole
