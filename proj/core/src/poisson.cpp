#include "monopole/poisson.hpp"

namespace monopole {

Rat bracket_coords(const ChartPoint& pt, const CoordIndex& a, const CoordIndex& b) {
  const ChartLayout& layout = pt.layout();
  return bracket_entry(pt, layout.position(a), layout.position(b));
}

RatMatrix bivector_matrix(const ChartPoint& pt) { return bivector_matrix_of(pt); }

RatMatrix symplectic_matrix(const ChartPoint& pt) {
  const ChartLayout& layout = pt.layout();
  const std::size_t half = layout.half();
  const auto& v = pt.coords();
  RatMatrix omega(layout.size(), layout.size());
  for (std::size_t a = 0; a < half; ++a) {
    if (v[half + a] == 0) throw Error(Errc::outside_chart, "zero y at " + layout.index(half + a).str());
    omega(a, half + a) = Rat(-1) / v[half + a];
    omega(half + a, a) = -omega(a, half + a);
    for (std::size_t b = a + 1; b < half; ++b) {
      const std::size_t ci = layout.color_of(a);
      const std::size_t cj = layout.color_of(b);
      if (ci == cj) continue;
      const int ij = layout.cartan().dot(ci, cj);
      if (ij == 0) continue;
      if (v[a] == v[b]) throw Error(Errc::outside_chart, "coincident x in symplectic form");
      omega(a, b) = Rat(ij) / (v[a] - v[b]);
      omega(b, a) = -omega(a, b);
    }
  }
  return omega;
}

Rat bracket_functions(const ChartPoint& pt, const MultiPoly& f, const MultiPoly& g) {
  const std::size_t n = pt.layout().size();
  if (f.arity() > n || g.arity() > n) throw Error(Errc::index_out_of_range, "polynomial uses coordinates outside the chart");
  std::vector<Rat> df(n), dg(n);
  for (std::size_t a = 0; a < n; ++a) {
    df[a] = f.partial(a)(pt.coords());
    dg[a] = g.partial(a)(pt.coords());
  }
  Rat out = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (df[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (dg[b] == 0) continue;
      out += df[a] * bracket_entry(pt, a, b) * dg[b];
    }
  }
  return out;
}

std::vector<EntryPartial> bracket_entry_partials(const ChartPoint& pt, std::size_t a, std::size_t b) {
  const ChartLayout& layout = pt.layout();
  const std::size_t half = layout.half();
  const auto& v = pt.coords();
  const bool ax = a < half;
  const bool bx = b < half;
  if (ax && bx) return {};
  if (ax != bx) {
    const std::size_t xa = ax ? a : b;
    const std::size_t ya = ax ? b : a;
    if (ya - half != xa) return {};
    // P = +y for (x, y), -y for (y, x)
    return {{ya, Rat(ax ? 1 : -1)}};
  }
  const std::size_t ha = a - half;
  const std::size_t hb = b - half;
  const std::size_t ci = layout.color_of(ha);
  const std::size_t cj = layout.color_of(hb);
  if (ci == cj) return {};
  const int ij = layout.cartan().dot(ci, cj);
  if (ij == 0) return {};
  const Rat gap = v[ha] - v[hb];
  if (gap == 0) throw Error(Errc::outside_chart, "coincident x in {y,y} bracket");
  // P = c ya yb / (xa - xb)
  const Rat c_over_gap = Rat(ij) / gap;
  const Rat value = c_over_gap * v[a] * v[b];
  const Rat d_gap = value / gap;
  return {
      {a, c_over_gap * v[b]},
      {b, c_over_gap * v[a]},
      {ha, -d_gap},
      {hb, d_gap},
  };
}

Rat jacobiator(const ChartPoint& pt, std::size_t a, std::size_t b, std::size_t c) {
  const auto cyclic = [&](std::size_t p, std::size_t q, std::size_t r) {
    Rat acc = 0;
    for (const auto& [d, value] : bracket_entry_partials(pt, p, q)) acc += value * bracket_entry(pt, d, r);
    return acc;
  };
  return cyclic(a, b, c) + cyclic(b, c, a) + cyclic(c, a, b);
}

Rat jacobiator(const ChartPoint& pt, const CoordIndex& a, const CoordIndex& b, const CoordIndex& c) {
  const ChartLayout& layout = pt.layout();
  return jacobiator(pt, layout.position(a), layout.position(b), layout.position(c));
}

JacobiScan jacobi_scan(const ChartPoint& pt) {
  const std::size_t n = pt.layout().size();
  const RatMatrix p = bivector_matrix(pt);
  std::vector<std::vector<EntryPartial>> partials(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) partials[a * n + b] = bracket_entry_partials(pt, a, b);

  const auto cyclic = [&](std::size_t q1, std::size_t q2, std::size_t r) {
    Rat acc = 0;
    for (const auto& [d, value] : partials[q1 * n + q2]) acc += value * p(d, r);
    return acc;
  };
  JacobiScan scan;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        ++scan.triples;
        Rat j = cyclic(a, b, c) + cyclic(b, c, a) + cyclic(c, a, b);
        if (j != 0) scan.failures.push_back({a, b, c, std::move(j)});
      }
  return scan;
}

std::size_t rank(const ChartPoint& pt) { return exact_rank(bivector_matrix(pt)); }

}  // namespace monopole
