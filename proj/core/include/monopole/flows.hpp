#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monopole/chart.hpp"
#include "monopole/multipoly.hpp"
#include "monopole/rational.hpp"

namespace monopole {

class Hamiltonian {
 public:
  Hamiltonian(const ChartLayout& layout, MultiPoly poly);
  static Hamiltonian parse(std::string_view text, const ChartLayout& layout);

  const MultiPoly& poly() const noexcept { return poly_; }
  bool x_only() const noexcept { return x_only_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Complex operator()(const std::vector<Complex>& point) const { return poly_(point); }
  std::vector<Complex> gradient(const std::vector<Complex>& point) const;

 private:
  MultiPoly poly_;
  std::vector<MultiPoly> partials_;
  bool x_only_ = true;
  std::string label_;
};

// P dH at pt. Throws outside_chart if pt violates the float chart tolerance.
std::vector<Complex> hamiltonian_vector_field(const Hamiltonian& h, const ComplexPoint& pt,
                                              const FloatChartTolerance& tol = {});

enum class Method { rk4 };

struct TrajectorySample {
  double t;
  ComplexPoint point;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  Method method = Method::rk4;
};

// Fixed-step classical RK4 for d xi/dt = P(xi) dH(xi). The last step is
// shortened to land on t_end. Throws LeftChart with the time of exit.
Trajectory integrate(const Hamiltonian& h, const ComplexPoint& start, double t_end, double dt,
                     Method method = Method::rk4, const FloatChartTolerance& tol = {});

// Exact time-t flow of an x-only Hamiltonian: x is conserved and
// y_i^k(t) = y_i^k(0) exp(-t dH/dx_i^k(x(0))).
ComplexPoint closed_form_x_flow(const Hamiltonian& h, const ComplexPoint& start, double t);

// max_t |f(xi(t)) - f(xi(0))| / (1 + |f(xi(0))|) per function.
std::vector<double> conservation_report(const Trajectory& traj, const std::vector<Hamiltonian>& functions);

// Max over samples and coordinates of |xi - xi_exact| / |xi_exact| against the
// closed-form solution (x_only Hamiltonians).
double closed_form_deviation(const Hamiltonian& h, const Trajectory& traj);

// max-norm of Phi_1^t Phi_2^t (start) - Phi_2^t Phi_1^t (start) under RK4.
double commute_check(const Hamiltonian& h1, const Hamiltonian& h2, const ComplexPoint& start,
                     double t, double dt);

}  // namespace monopole
