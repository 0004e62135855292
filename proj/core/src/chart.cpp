#include "monopole/chart.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "monopole/error.hpp"

namespace monopole {

namespace {

std::size_t parse_label(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw Error(Errc::parse_error, "bad coordinate '" + std::string(whole) + "' (expected x:i:k or y:i:k)");
  return v - 1;
}

}  // namespace

CoordIndex CoordIndex::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || first != 1 || (text[0] != 'x' && text[0] != 'y'))
    throw Error(Errc::parse_error, "bad coordinate '" + std::string(text) + "' (expected x:i:k or y:i:k)");
  CoordIndex c;
  c.kind = text[0] == 'x' ? Kind::x : Kind::y;
  c.color = parse_label(text.substr(first + 1, second - first - 1), text);
  c.slot = parse_label(text.substr(second + 1), text);
  return c;
}

std::string CoordIndex::str() const {
  return std::string(kind == Kind::x ? "x" : "y") + ":" + std::to_string(color + 1) + ":" + std::to_string(slot + 1);
}

ChartLayout::ChartLayout(CartanDatum cartan, Degree alpha) : cartan_(std::move(cartan)), alpha_(std::move(alpha)) {
  if (alpha_.size() != cartan_.rank())
    throw Error(Errc::invariant_violation, "degree has " + std::to_string(alpha_.size()) + " entries but the datum has rank " +
                                               std::to_string(cartan_.rank()));
  offsets_.reserve(alpha_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    offsets_.push_back(half_);
    for (int k = 0; k < alpha_[i]; ++k) color_of_.push_back(i);
    half_ += static_cast<std::size_t>(alpha_[i]);
  }
}

std::size_t ChartLayout::position(const CoordIndex& c) const {
  if (c.color >= alpha_.size() || c.slot >= static_cast<std::size_t>(alpha_[c.color]))
    throw Error(Errc::index_out_of_range, "coordinate " + c.str() + " is not in the chart");
  return (c.kind == Kind::x ? 0 : half_) + offsets_[c.color] + c.slot;
}

CoordIndex ChartLayout::index(std::size_t position) const {
  if (position >= size()) throw Error(Errc::index_out_of_range, "coordinate position out of range");
  CoordIndex c;
  c.kind = position < half_ ? Kind::x : Kind::y;
  const std::size_t h = position % half_;
  c.color = color_of_[h];
  c.slot = h - offsets_[c.color];
  return c;
}

int dimension(const Degree& alpha) { return 2 * alpha.total(); }

void validate_chart(const ChartLayout& layout, const std::vector<Rat>& coords) {
  if (coords.size() != layout.size())
    throw Error(Errc::invariant_violation, "expected " + std::to_string(layout.size()) + " coordinates");
  const std::size_t half = layout.half();
  for (std::size_t a = 0; a < half; ++a)
    for (std::size_t b = a + 1; b < half; ++b)
      if (coords[a] == coords[b])
        throw Error(Errc::invariant_violation,
                    "coincident x: " + layout.index(a).str() + " = " + layout.index(b).str() + " = " + to_string(coords[a]));
  for (std::size_t a = half; a < coords.size(); ++a)
    if (coords[a] == 0) throw Error(Errc::invariant_violation, "zero y at " + layout.index(a).str());
}

ChartPoint ChartPoint::make(const CartanDatum& cartan, const Degree& alpha, const std::vector<std::vector<Rat>>& x,
                            const std::vector<std::vector<Rat>>& y) {
  ChartLayout layout(cartan, alpha);
  if (x.size() != alpha.size() || y.size() != alpha.size())
    throw Error(Errc::invariant_violation, "x and y need one block per color");
  std::vector<Rat> coords(layout.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto a = static_cast<std::size_t>(alpha[i]);
    if (x[i].size() != a || y[i].size() != a)
      throw Error(Errc::invariant_violation, "color " + std::to_string(i + 1) + " needs exactly " + std::to_string(a) + " pairs");
    for (std::size_t k = 0; k < a; ++k) {
      coords[layout.color_offset(i) + k] = x[i][k];
      coords[layout.half() + layout.color_offset(i) + k] = y[i][k];
    }
  }
  return from_coords(std::move(layout), std::move(coords));
}

ChartPoint ChartPoint::from_coords(ChartLayout layout, std::vector<Rat> coords) {
  validate_chart(layout, coords);
  return ChartPoint(std::move(layout), std::move(coords));
}

ComplexPoint ChartPoint::to_complex() const {
  std::vector<Complex> c;
  c.reserve(coords().size());
  for (const Rat& v : coords()) c.push_back(monopole::to_complex(v));
  return ComplexPoint(layout(), std::move(c));
}

bool inside_float_chart(const ComplexPoint& pt, const FloatChartTolerance& tol) {
  const auto& v = pt.coords();
  const std::size_t half = pt.layout().half();
  for (std::size_t a = 0; a < half; ++a) {
    if (!std::isfinite(v[a].real()) || !std::isfinite(v[a].imag())) return false;
    for (std::size_t b = a + 1; b < half; ++b)
      if (std::abs(v[a] - v[b]) <= tol.min_x_gap) return false;
  }
  for (std::size_t a = half; a < v.size(); ++a)
    if (!std::isfinite(std::abs(v[a])) || std::abs(v[a]) <= tol.min_abs_y) return false;
  return true;
}

PolyChart to_polys(const ChartPoint& pt) {
  validate_chart(pt.layout(), pt.coords());
  PolyChart pc{pt.cartan(), pt.alpha(), {}, {}};
  for (std::size_t i = 0; i < pt.alpha().size(); ++i) {
    const auto xs = pt.x_block(i);
    const auto ys = pt.y_block(i);
    pc.p.push_back(monic_from_roots(xs));
    pc.q.push_back(lagrange_lower(xs, ys));
  }
  return pc;
}

namespace {

void check_polychart_shape(const PolyChart& pc) {
  if (pc.p.size() != pc.alpha.size() || pc.q.size() != pc.alpha.size())
    throw Error(Errc::invariant_violation, "polychart needs one (p, q) pair per color");
  for (std::size_t i = 0; i < pc.alpha.size(); ++i) {
    if (pc.p[i].degree() != pc.alpha[i] || !pc.p[i].is_monic())
      throw Error(Errc::invariant_violation, "p_" + std::to_string(i + 1) + " must be monic of degree " + std::to_string(pc.alpha[i]));
    if (pc.q[i].degree() >= pc.alpha[i])
      throw Error(Errc::invariant_violation, "q_" + std::to_string(i + 1) + " must have degree < " + std::to_string(pc.alpha[i]));
  }
}

}  // namespace

ChartPoint from_polys(const PolyChart& pc, const std::vector<std::vector<Rat>>& roots) {
  check_polychart_shape(pc);
  if (roots.size() != pc.alpha.size()) throw Error(Errc::not_a_root, "roots needed for every color");
  std::vector<const Rat*> seen;
  for (std::size_t i = 0; i < pc.alpha.size(); ++i) {
    if (roots[i].size() != static_cast<std::size_t>(pc.alpha[i]))
      throw Error(Errc::not_a_root, "color " + std::to_string(i + 1) + " needs " + std::to_string(pc.alpha[i]) + " roots");
    for (const Rat& r : roots[i]) {
      if (pc.p[i](r) != 0) throw Error(Errc::not_a_root, to_string(r) + " is not a root of p_" + std::to_string(i + 1));
      for (const Rat* s : seen)
        if (*s == r) throw Error(Errc::coincident_roots, "root " + to_string(r) + " repeated");
      seen.push_back(&r);
    }
  }
  std::vector<std::vector<Rat>> y(pc.alpha.size());
  for (std::size_t i = 0; i < pc.alpha.size(); ++i)
    for (const Rat& r : roots[i]) {
      Rat v = pc.q[i](r);
      if (v == 0) throw Error(Errc::zero_y, "q_" + std::to_string(i + 1) + " vanishes at " + to_string(r) + "; point lies outside the chart");
      y[i].push_back(std::move(v));
    }
  return ChartPoint::make(pc.cartan, pc.alpha, roots, y);
}

std::vector<Complex> companion_roots(const Poly& p) {
  if (!p.is_monic()) throw Error(Errc::invariant_violation, "companion_roots expects a monic polynomial");
  const int n = p.degree();
  if (n <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int r = 1; r < n; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) companion(r, n - 1) = -p.coefficient(static_cast<std::size_t>(r)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(Errc::not_a_root, "eigenvalue iteration did not converge");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) out.push_back(solver.eigenvalues()[r]);
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

ComplexPoint from_polys_float(const PolyChart& pc) {
  check_polychart_shape(pc);
  ChartLayout layout(pc.cartan, pc.alpha);
  std::vector<Complex> coords(layout.size());
  for (std::size_t i = 0; i < pc.alpha.size(); ++i) {
    const auto roots = companion_roots(pc.p[i]);
    const int deg = pc.p[i].degree();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Complex x = roots[k];
      if (std::abs(pc.p[i](x)) > 1e-9 * std::pow(1.0 + std::abs(x), deg))
        throw Error(Errc::not_a_root, "numerical root of p_" + std::to_string(i + 1) + " failed the residual check");
      coords[layout.color_offset(i) + k] = x;
      coords[layout.half() + layout.color_offset(i) + k] = pc.q[i](x);
    }
  }
  ComplexPoint pt(std::move(layout), std::move(coords));
  if (!inside_float_chart(pt)) throw Error(Errc::zero_y, "imported polynomials give a point outside the chart");
  return pt;
}

}  // namespace monopole
