#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monopole/rational.hpp"

namespace monopole {

// A finite-type Cartan datum (I, .). Nodes are addressed by 0-based position
// internally; user-facing labels are 1-based ("1", "2", ...).
class CartanDatum {
 public:
  // Builds and validates the datum from a symmetric dot matrix.
  static CartanDatum from_dot(std::vector<std::vector<int>> dot, std::string name = "");

  // Accepts a type name ("A2", "G2", "D4", products such as "A1xB2").
  static CartanDatum from_name(std::string_view name);

  std::size_t rank() const noexcept { return dot_.size(); }
  const std::string& name() const noexcept { return name_; }

  int dot(std::size_t i, std::size_t j) const;
  // a_ij = 2(i.j)/(i.i)
  int cartan(std::size_t i, std::size_t j) const;
  // d_i with i.i = 2 d_i
  int symmetrizer(std::size_t i) const;

  const std::vector<std::vector<int>>& dot_matrix() const noexcept { return dot_; }
  std::vector<std::vector<int>> cartan_matrix() const;

  // <gamma, j'> = sum_k gamma_k * 2(k.j)/(k.k)
  Int coweight_root_pairing(std::span<const Int> gamma, std::size_t j) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) { return a.dot_ == b.dot_; }

 private:
  CartanDatum() = default;

  std::vector<std::vector<int>> dot_;
  std::string name_;
};

// alpha = sum a_i i with a_i >= 0.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<int> coefficients);

  std::size_t size() const noexcept { return a_.size(); }
  int operator[](std::size_t i) const { return a_.at(i); }
  const std::vector<int>& coefficients() const noexcept { return a_; }
  // |alpha|
  int total() const noexcept;
  // <alpha, omega_i> = a_i
  int weight_pairing(std::size_t i) const { return a_.at(i); }

  std::vector<Int> as_lattice() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  std::vector<int> a_;
};

// <i, omega_j> for simple coroot i and fundamental weight j.
inline int simple_fundamental_pairing(std::size_t i, std::size_t j) { return i == j ? 1 : 0; }

}  // namespace monopole
