#pragma once

// Reference computations used only by the tests. None of these call into the
// code paths they are compared against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <vector>

#include "monopole/cartan.hpp"
#include "monopole/rational.hpp"

namespace oracle {

using monopole::Rat;

// Ascending coefficients of the Newton-form interpolant through (x_k, v_k).
inline std::vector<Rat> newton_interpolate(const std::vector<Rat>& x, const std::vector<Rat>& v) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<Rat> dd(v);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (x[k] - x[k - level]);
      if (k == level) break;
    }
  // Horner on the Newton basis: c(z) = dd0 + (z - x0)(dd1 + (z - x1)(...))
  std::vector<Rat> c{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t m = 0; m < c.size(); ++m) {
      next[m + 1] += c[m];
      next[m] -= x[k] * c[m];
    }
    next[0] += dd[k];
    c = next;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// Coefficient grid of p(z) q(w) - q(z) p(w) from raw coefficient lists.
inline std::vector<std::vector<Rat>> antisym_numerator(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  auto at = [](const std::vector<Rat>& c, std::size_t m) { return m < c.size() ? c[m] : Rat(0); };
  std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) g[m][k] = at(p, m) * at(q, k) - at(q, m) * at(p, k);
  return g;
}

// Coefficient grid of (z - w) T for T given as a grid.
inline std::vector<std::vector<Rat>> times_z_minus_w(const std::vector<std::vector<Rat>>& t, std::size_t size) {
  std::vector<std::vector<Rat>> g(size, std::vector<Rat>(size));
  for (std::size_t m = 0; m < t.size(); ++m)
    for (std::size_t k = 0; k < t[m].size(); ++k) {
      if (m + 1 < size) g[m + 1][k] += t[m][k];
      if (k + 1 < size) g[m][k + 1] -= t[m][k];
    }
  return g;
}

// Leibniz determinant; only for small n.
inline Rat leibniz_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Bracket table written out directly from the coordinate formulas, on a flat
// complex vector ordered (x of color 0.., x of color 1.., y ...).
struct FloatTable {
  std::vector<std::size_t> color;  // color of each half-position
  std::vector<std::vector<int>> dot;

  std::size_t half() const { return color.size(); }

  std::complex<double> entry(const std::vector<std::complex<double>>& v, std::size_t a, std::size_t b) const {
    const std::size_t h = half();
    if (a < h && b < h) return 0.0;
    if (a < h) return b - h == a ? v[b] : 0.0;
    if (b < h) return a - h == b ? -v[a] : 0.0;
    const std::size_t i = color[a - h], j = color[b - h];
    if (i == j) return 0.0;
    return double(dot[i][j]) * v[a] * v[b] / (v[a - h] - v[b - h]);
  }

  // d entry(a,b) / d v_d by central differences.
  std::complex<double> partial(std::vector<std::complex<double>> v, std::size_t a, std::size_t b, std::size_t d,
                               double step) const {
    const auto base = v[d];
    v[d] = base + step;
    const auto plus = entry(v, a, b);
    v[d] = base - step;
    const auto minus = entry(v, a, b);
    return (plus - minus) / (2.0 * step);
  }

  std::complex<double> jacobiator(const std::vector<std::complex<double>>& v, std::size_t a, std::size_t b,
                                  std::size_t c, double step) const {
    std::complex<double> acc = 0.0;
    const std::size_t n = 2 * half();
    for (std::size_t d = 0; d < n; ++d) {
      acc += partial(v, a, b, d, step) * entry(v, d, c);
      acc += partial(v, b, c, d, step) * entry(v, d, a);
      acc += partial(v, c, a, d, step) * entry(v, d, b);
    }
    return acc;
  }
};

// <gamma, j'> = sum_k gamma_k 2(k.j)/(k.k), from the raw dot matrix.
inline long pairing(const std::vector<std::vector<int>>& dot, const std::vector<int>& gamma, std::size_t j) {
  long s = 0;
  for (std::size_t k = 0; k < gamma.size(); ++k) s += long(gamma[k]) * 2 * dot[k][j] / dot[k][k];
  return s;
}

// All alpha = beta + gamma, 0 <= gamma_j <= box on J, satisfying the lift
// predicate; lexicographic.
inline std::vector<std::vector<int>> brute_force_lifts(const std::vector<std::vector<int>>& dot,
                                                       const std::vector<bool>& in_j, const std::vector<int>& beta,
                                                       bool lemma, int box) {
  const std::size_t n = beta.size();
  std::vector<std::vector<int>> out;
  std::vector<int> alpha = beta;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      std::vector<int> gamma(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (in_j[i]) gamma[i] = alpha[i];
      const auto& probe = lemma ? alpha : gamma;
      for (std::size_t j = 0; j < n; ++j)
        if (in_j[j] && pairing(dot, probe, j) > 0) return;
      out.push_back(alpha);
      return;
    }
    if (!in_j[pos]) {
      rec(pos + 1);
      return;
    }
    for (int g = 0; g <= box; ++g) {
      alpha[pos] = g;
      rec(pos + 1);
    }
    alpha[pos] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
