#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monopole/rational.hpp"

namespace monopole {

// Univariate polynomial over Q, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);
  static Poly constant(const Rat& c);
  // z - root
  static Poly linear(const Rat& root);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coefficients() const noexcept { return c_; }
  Rat coefficient(std::size_t m) const { return m < c_.size() ? c_[m] : Rat(0); }
  const Rat& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rat operator()(const Rat& z) const;
  Complex operator()(const Complex& z) const;

  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Quotient of p by (z - r); the remainder p(r) is written to *remainder.
Poly divide_linear(const Poly& p, const Rat& r, Rat* remainder = nullptr);

// prod_k (z - roots[k])
Poly monic_from_roots(std::span<const Rat> roots);

// Unique polynomial of degree < n through (nodes[k], values[k]), built as
// sum_k values[k] * phi(z) / (phi'(nodes[k]) (z - nodes[k])) with phi the
// monic polynomial vanishing at the nodes. Throws duplicate_node.
Poly lagrange_lower(std::span<const Rat> nodes, std::span<const Rat> values);

// Bivariate polynomial sum c[m][n] z^m w^n, trimmed in both variables.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rat>> grid);

  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<std::vector<Rat>>& grid() const noexcept { return c_; }
  Rat coefficient(std::size_t m, std::size_t n) const;
  int degree_z() const noexcept { return static_cast<int>(c_.size()) - 1; }
  int degree_w() const noexcept;

  Rat operator()(const Rat& z, const Rat& w) const;

  // p(z) q(w)
  static BiPoly outer(const Poly& p, const Poly& q);
  // (z - w) * this
  BiPoly times_z_minus_w() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();
  std::vector<std::vector<Rat>> c_;
};

// T with (z - w) T(z, w) = p(z) q(w) - q(z) p(w). Synthetic division in z
// with w as a parameter; a nonzero remainder throws inexact_division.
BiPoly antisym_quotient(const Poly& p, const Poly& q);

// Exact division of a bivariate polynomial by (z - w).
BiPoly divide_z_minus_w(const BiPoly& numerator);

}  // namespace monopole
