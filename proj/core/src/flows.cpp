#include "monopole/flows.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monopole/error.hpp"
#include "monopole/poisson.hpp"

namespace monopole {

Hamiltonian::Hamiltonian(const ChartLayout& layout, MultiPoly poly) : poly_(std::move(poly)) {
  if (poly_.arity() > layout.size()) throw Error(Errc::index_out_of_range, "Hamiltonian uses coordinates outside the chart");
  x_only_ = poly_.depends_only_below(layout.half());
  partials_.reserve(layout.size());
  for (std::size_t a = 0; a < layout.size(); ++a) partials_.push_back(poly_.partial(a));
}

Hamiltonian Hamiltonian::parse(std::string_view text, const ChartLayout& layout) {
  Hamiltonian h(layout, parse_multipoly(text, layout));
  h.set_label(std::string(text));
  return h;
}

std::vector<Complex> Hamiltonian::gradient(const std::vector<Complex>& point) const {
  if (point.size() != partials_.size()) throw Error(Errc::index_out_of_range, "point does not match the Hamiltonian's chart");
  std::vector<Complex> g(partials_.size());
  for (std::size_t a = 0; a < partials_.size(); ++a)
    if (!partials_[a].is_zero()) g[a] = partials_[a](point);
  return g;
}

namespace {

std::vector<Complex> field(const Hamiltonian& h, const ComplexPoint& pt) {
  const std::vector<Complex> g = h.gradient(pt.coords());
  const std::size_t n = g.size();
  std::vector<Complex> v(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g[b] != Complex(0.0)) v[a] += bracket_entry(pt, a, b) * g[b];
  return v;
}

ComplexPoint shifted(const ComplexPoint& base, const std::vector<Complex>& dir, double scale) {
  ComplexPoint out = base;
  auto& c = out.mutable_coords();
  for (std::size_t a = 0; a < c.size(); ++a) c[a] += scale * dir[a];
  return out;
}

}  // namespace

std::vector<Complex> hamiltonian_vector_field(const Hamiltonian& h, const ComplexPoint& pt, const FloatChartTolerance& tol) {
  if (!inside_float_chart(pt, tol)) throw Error(Errc::outside_chart, "point violates the float chart tolerance");
  return field(h, pt);
}

Trajectory integrate(const Hamiltonian& h, const ComplexPoint& start, double t_end, double dt, Method method,
                     const FloatChartTolerance& tol) {
  if (!(dt > 0.0)) throw Error(Errc::invariant_violation, "step must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw Error(Errc::invariant_violation, "t_end must be finite and >= 0");
  if (!inside_float_chart(start, tol)) throw Error(Errc::outside_chart, "start point violates the float chart tolerance");

  Trajectory traj;
  traj.step = dt;
  traj.method = method;
  traj.samples.push_back({0.0, start});

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  ComplexPoint state = start;
  double t = 0.0;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t_next = std::min(static_cast<double>(s + 1) * dt, t_end);
    const double step = t_next - t;
    try {
      const auto k1 = field(h, state);
      const auto k2 = field(h, shifted(state, k1, step / 2));
      const auto k3 = field(h, shifted(state, k2, step / 2));
      const auto k4 = field(h, shifted(state, k3, step));
      auto& c = state.mutable_coords();
      for (std::size_t a = 0; a < c.size(); ++a) c[a] += step / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
    } catch (const Error& e) {
      throw LeftChart(t, std::string("trajectory left the chart: ") + e.what());
    }
    t = t_next;
    if (!inside_float_chart(state, tol)) throw LeftChart(t, "trajectory left the chart at t = " + std::to_string(t));
    traj.samples.push_back({t, state});
  }
  return traj;
}

ComplexPoint closed_form_x_flow(const Hamiltonian& h, const ComplexPoint& start, double t) {
  if (!h.x_only()) throw Error(Errc::invariant_violation, "closed form needs an x-only Hamiltonian");
  const std::vector<Complex> g = h.gradient(start.coords());
  ComplexPoint out = start;
  auto& c = out.mutable_coords();
  const std::size_t half = start.layout().half();
  for (std::size_t a = 0; a < half; ++a) c[half + a] *= std::exp(-t * g[a]);
  return out;
}

std::vector<double> conservation_report(const Trajectory& traj, const std::vector<Hamiltonian>& functions) {
  std::vector<double> drift(functions.size(), 0.0);
  if (traj.samples.empty()) return drift;
  for (std::size_t f = 0; f < functions.size(); ++f) {
    const Complex initial = functions[f](traj.samples.front().point.coords());
    for (const auto& s : traj.samples) {
      const double d = std::abs(functions[f](s.point.coords()) - initial) / (1.0 + std::abs(initial));
      drift[f] = std::max(drift[f], d);
    }
  }
  return drift;
}

double closed_form_deviation(const Hamiltonian& h, const Trajectory& traj) {
  if (traj.samples.empty()) return 0.0;
  const ComplexPoint& start = traj.samples.front().point;
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const ComplexPoint exact = closed_form_x_flow(h, start, s.t);
    for (std::size_t a = 0; a < exact.coords().size(); ++a) {
      const double err = std::abs(s.point.coords()[a] - exact.coords()[a]);
      const double scale = std::abs(exact.coords()[a]);
      worst = std::max(worst, scale > 0.0 ? err / scale : err);
    }
  }
  return worst;
}

double commute_check(const Hamiltonian& h1, const Hamiltonian& h2, const ComplexPoint& start, double t, double dt) {
  const auto flow = [&](const Hamiltonian& h, const ComplexPoint& p) { return integrate(h, p, t, dt).samples.back().point; };
  const ComplexPoint a = flow(h1, flow(h2, start));
  const ComplexPoint b = flow(h2, flow(h1, start));
  double worst = 0.0;
  for (std::size_t k = 0; k < a.coords().size(); ++k) worst = std::max(worst, std::abs(a.coords()[k] - b.coords()[k]));
  return worst;
}

}  // namespace monopole
