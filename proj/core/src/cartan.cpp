#include "monopole/cartan.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "monopole/error.hpp"

namespace monopole {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix zero_matrix(std::size_t n) { return IntMatrix(n, std::vector<int>(n, 0)); }

void link(IntMatrix& m, std::size_t i, std::size_t j, int value) {
  m[i][j] = value;
  m[j][i] = value;
}

// Dot matrices in Bourbaki numbering; long roots have i.i = 4 (6 for G2).
IntMatrix simple_type(char family, int n) {
  const auto un = static_cast<std::size_t>(n);
  IntMatrix m = zero_matrix(un);
  auto chain = [&](int diag) {
    for (std::size_t i = 0; i < un; ++i) m[i][i] = diag;
    for (std::size_t i = 0; i + 1 < un; ++i) link(m, i, i + 1, -diag / 2);
  };
  switch (family) {
    case 'A':
      if (n < 1) break;
      chain(2);
      return m;
    case 'B':
      if (n < 2) break;
      chain(4);
      m[un - 1][un - 1] = 2;
      return m;
    case 'C':
      if (n < 2) break;
      chain(2);
      m[un - 1][un - 1] = 4;
      link(m, un - 2, un - 1, -2);
      return m;
    case 'D':
      if (n < 4) break;
      chain(2);
      link(m, un - 2, un - 1, 0);
      link(m, un - 3, un - 1, -1);
      return m;
    case 'E':
      if (n < 6 || n > 8) break;
      for (std::size_t i = 0; i < un; ++i) m[i][i] = 2;
      link(m, 0, 2, -1);
      link(m, 1, 3, -1);
      for (std::size_t i = 2; i + 1 < un; ++i) link(m, i, i + 1, -1);
      return m;
    case 'F':
      if (n != 4) break;
      m[0][0] = m[1][1] = 4;
      m[2][2] = m[3][3] = 2;
      link(m, 0, 1, -2);
      link(m, 1, 2, -2);
      link(m, 2, 3, -1);
      return m;
    case 'G':
      if (n != 2) break;
      m[0][0] = 2;
      m[1][1] = 6;
      link(m, 0, 1, -3);
      return m;
    default:
      break;
  }
  throw Error(Errc::malformed_matrix, std::string("unsupported Cartan type ") + family + std::to_string(n));
}

// Determinant of an integer matrix by Bareiss elimination.
Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

CartanDatum CartanDatum::from_dot(std::vector<std::vector<int>> dot, std::string name) {
  const std::size_t n = dot.size();
  for (const auto& row : dot)
    if (row.size() != n) throw Error(Errc::malformed_matrix, "dot matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    const int d = dot[i][i];
    if (d != 2 && d != 4 && d != 6)
      throw Error(Errc::malformed_matrix, "diagonal entry i.i must be 2, 4 or 6 (node " + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      if (dot[i][j] != dot[j][i]) throw Error(Errc::malformed_matrix, "dot matrix is not symmetric");
      if (i == j) continue;
      if (dot[i][j] > 0) throw Error(Errc::malformed_matrix, "off-diagonal i.j must be <= 0");
      if ((2 * dot[i][j]) % d != 0) throw Error(Errc::malformed_matrix, "2(i.j)/(i.i) is not an integer");
      const int a = 2 * dot[i][j] / d;
      if (a < -3) throw Error(Errc::malformed_matrix, "Cartan integer below -3");
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = dot[i][j];
    if (determinant(std::move(minor)) <= 0)
      throw Error(Errc::not_finite_type, "leading principal minor of order " + std::to_string(k) + " is not positive");
  }
  CartanDatum c;
  c.dot_ = std::move(dot);
  c.name_ = std::move(name);
  return c;
}

CartanDatum CartanDatum::from_name(std::string_view name) {
  IntMatrix total;
  std::string_view rest = name;
  if (rest.empty()) throw Error(Errc::malformed_matrix, "empty Cartan type name");
  while (!rest.empty()) {
    const auto sep = rest.find('x');
    std::string_view part = rest.substr(0, sep);
    rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep + 1);
    if (part.size() < 2) throw Error(Errc::malformed_matrix, "bad Cartan type name '" + std::string(name) + "'");
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part.front())));
    int n = 0;
    auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), n);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw Error(Errc::malformed_matrix, "bad Cartan type name '" + std::string(name) + "'");
    IntMatrix block = simple_type(family, n);
    const std::size_t base = total.size();
    const std::size_t size = base + block.size();
    for (auto& row : total) row.resize(size, 0);
    total.resize(size, std::vector<int>(size, 0));
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) total[base + i][base + j] = block[i][j];
  }
  return from_dot(std::move(total), std::string(name));
}

int CartanDatum::dot(std::size_t i, std::size_t j) const {
  if (i >= rank() || j >= rank()) throw Error(Errc::index_out_of_range, "node index out of range");
  return dot_[i][j];
}

int CartanDatum::cartan(std::size_t i, std::size_t j) const { return 2 * dot(i, j) / dot(i, i); }

int CartanDatum::symmetrizer(std::size_t i) const { return dot(i, i) / 2; }

std::vector<std::vector<int>> CartanDatum::cartan_matrix() const {
  IntMatrix a = zero_matrix(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) a[i][j] = cartan(i, j);
  return a;
}

Int CartanDatum::coweight_root_pairing(std::span<const Int> gamma, std::size_t j) const {
  if (j >= rank() || gamma.size() != rank()) throw Error(Errc::index_out_of_range, "pairing index out of range");
  Int out = 0;
  for (std::size_t k = 0; k < rank(); ++k) out += gamma[k] * cartan(k, j);
  return out;
}

Degree::Degree(std::vector<int> coefficients) : a_(std::move(coefficients)) {
  for (int v : a_)
    if (v < 0) throw Error(Errc::invariant_violation, "degree coefficients must be nonnegative");
}

int Degree::total() const noexcept {
  int s = 0;
  for (int v : a_) s += v;
  return s;
}

std::vector<Int> Degree::as_lattice() const { return {a_.begin(), a_.end()}; }

}  // namespace monopole
