#include "monopole/poly.hpp"

#include <algorithm>

#include "monopole/error.hpp"

namespace monopole {

Poly::Poly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::linear(const Rat& root) { return Poly({Rat(-root), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw Error(Errc::invariant_violation, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rat Poly::operator()(const Rat& z) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex Poly::operator()(const Complex& z) const {
  Complex acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t m = 1; m < c_.size(); ++m) d[m - 1] = c_[m] * static_cast<long>(m);
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = a.coefficient(m) + b.coefficient(m);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = a.coefficient(m) - b.coefficient(m);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t m = 0; m < a.c_.size(); ++m)
    for (std::size_t n = 0; n < b.c_.size(); ++n) c[m + n] += a.c_[m] * b.c_[n];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> c(a.c_);
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Poly divide_linear(const Poly& p, const Rat& r, Rat* remainder) {
  const auto& c = p.coefficients();
  if (c.empty()) {
    if (remainder) *remainder = 0;
    return {};
  }
  std::vector<Rat> quotient(c.size() - 1);
  Rat carry = c.back();
  for (std::size_t m = c.size() - 1; m-- > 0;) {
    quotient[m] = carry;
    carry = c[m] + r * carry;
  }
  if (remainder) *remainder = carry;
  return Poly(std::move(quotient));
}

Poly monic_from_roots(std::span<const Rat> roots) {
  Poly out = Poly::constant(1);
  for (const Rat& r : roots) out = out * Poly::linear(r);
  return out;
}

Poly lagrange_lower(std::span<const Rat> nodes, std::span<const Rat> values) {
  if (nodes.size() != values.size())
    throw Error(Errc::invariant_violation, "lagrange_lower: nodes and values differ in length");
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (std::size_t l = k + 1; l < nodes.size(); ++l)
      if (nodes[k] == nodes[l]) throw Error(Errc::duplicate_node, "interpolation node repeated: " + to_string(nodes[k]));

  const Poly phi = monic_from_roots(nodes);
  const Poly dphi = phi.derivative();
  Poly out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (values[k] == 0) continue;
    Rat rem;
    Poly basis = divide_linear(phi, nodes[k], &rem);
    out = out + Rat(values[k] / dphi(nodes[k])) * basis;
  }
  return out;
}

BiPoly::BiPoly(std::vector<std::vector<Rat>> grid) : c_(std::move(grid)) { trim(); }

void BiPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

Rat BiPoly::coefficient(std::size_t m, std::size_t n) const {
  if (m >= c_.size() || n >= c_[m].size()) return 0;
  return c_[m][n];
}

int BiPoly::degree_w() const noexcept {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rat BiPoly::operator()(const Rat& z, const Rat& w) const {
  Rat acc = 0;
  for (auto row = c_.rbegin(); row != c_.rend(); ++row) {
    Rat inner = 0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * w + *it;
    acc = acc * z + inner;
  }
  return acc;
}

BiPoly BiPoly::outer(const Poly& p, const Poly& q) {
  std::vector<std::vector<Rat>> grid(p.coefficients().size());
  for (std::size_t m = 0; m < grid.size(); ++m) {
    grid[m].resize(q.coefficients().size());
    for (std::size_t n = 0; n < grid[m].size(); ++n) grid[m][n] = p.coefficients()[m] * q.coefficients()[n];
  }
  return BiPoly(std::move(grid));
}

BiPoly BiPoly::times_z_minus_w() const {
  if (is_zero()) return {};
  const std::size_t dw = static_cast<std::size_t>(degree_w() + 1);
  std::vector<std::vector<Rat>> grid(c_.size() + 1, std::vector<Rat>(dw + 1));
  for (std::size_t m = 0; m < c_.size(); ++m)
    for (std::size_t n = 0; n < c_[m].size(); ++n) {
      grid[m + 1][n] += c_[m][n];
      grid[m][n + 1] -= c_[m][n];
    }
  return BiPoly(std::move(grid));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<std::vector<Rat>> grid(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t m = 0; m < grid.size(); ++m) {
    const std::size_t la = m < a.c_.size() ? a.c_[m].size() : 0;
    const std::size_t lb = m < b.c_.size() ? b.c_[m].size() : 0;
    grid[m].resize(std::max(la, lb));
    for (std::size_t n = 0; n < grid[m].size(); ++n) grid[m][n] = a.coefficient(m, n) + b.coefficient(m, n);
  }
  return BiPoly(std::move(grid));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<std::vector<Rat>> grid(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t m = 0; m < grid.size(); ++m) {
    const std::size_t la = m < a.c_.size() ? a.c_[m].size() : 0;
    const std::size_t lb = m < b.c_.size() ? b.c_[m].size() : 0;
    grid[m].resize(std::max(la, lb));
    for (std::size_t n = 0; n < grid[m].size(); ++n) grid[m][n] = a.coefficient(m, n) - b.coefficient(m, n);
  }
  return BiPoly(std::move(grid));
}

BiPoly divide_z_minus_w(const BiPoly& numerator) {
  // numerator = sum_m N_m(w) z^m; the quotient rows satisfy
  // T_{M-1} = N_M, T_{m-1} = N_m + w T_m, and N_0 + w T_0 must vanish.
  const auto& rows = numerator.grid();
  if (rows.empty()) return {};
  const auto times_w = [](const std::vector<Rat>& r) {
    std::vector<Rat> out(r.size() + 1);
    for (std::size_t n = 0; n < r.size(); ++n) out[n + 1] = r[n];
    return out;
  };
  const auto add = [](std::vector<Rat> a, const std::vector<Rat>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) a[n] += b[n];
    return a;
  };
  std::vector<std::vector<Rat>> quotient(rows.size() - 1);
  std::vector<Rat> carry = rows.back();
  for (std::size_t m = rows.size() - 1; m-- > 0;) {
    quotient[m] = carry;
    carry = add(rows[m], times_w(carry));
  }
  for (const Rat& v : carry)
    if (v != 0) throw Error(Errc::inexact_division, "numerator is not divisible by (z - w)");
  return BiPoly(std::move(quotient));
}

BiPoly antisym_quotient(const Poly& p, const Poly& q) {
  return divide_z_minus_w(BiPoly::outer(p, q) - BiPoly::outer(q, p));
}

}  // namespace monopole
