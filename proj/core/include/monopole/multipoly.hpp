#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "monopole/chart.hpp"
#include "monopole/rational.hpp"

namespace monopole {

// Sparse polynomial in the chart coordinates, variables addressed by layout
// position. A monomial is a sorted list of (variable, exponent > 0).
class MultiPoly {
 public:
  using Monomial = std::vector<std::pair<std::size_t, int>>;

  MultiPoly() = default;
  static MultiPoly constant(const Rat& c);
  static MultiPoly variable(std::size_t position);
  // e_m of the x-coordinates of one color (e_0 = 1, e_m = 0 for m > a_i).
  static MultiPoly elementary_x(const ChartLayout& layout, std::size_t color, int m);
  // sum_k (x_i^k)^m
  static MultiPoly power_sum_x(const ChartLayout& layout, std::size_t color, int m);

  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Largest variable position used, plus one.
  std::size_t arity() const;
  // true when no variable at position >= half appears.
  bool depends_only_below(std::size_t half) const;

  MultiPoly partial(std::size_t position) const;

  Rat operator()(const std::vector<Rat>& point) const;
  Complex operator()(const std::vector<Complex>& point) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rat& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

// Parses a polynomial expression in the chart coordinates:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | x:i:k | y:i:k | e:m:i | p:m:i | '(' expr ')'  [ '^' n ]
// where e:m:i is the m-th elementary symmetric function and p:m:i the m-th
// power sum of the x-coordinates of color i (labels 1-based).
MultiPoly parse_multipoly(std::string_view text, const ChartLayout& layout);

}  // namespace monopole
