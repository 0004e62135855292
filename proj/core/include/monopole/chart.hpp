#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monopole/cartan.hpp"
#include "monopole/poly.hpp"
#include "monopole/rational.hpp"

namespace monopole {

enum class Kind { x, y };

// A chart coordinate x_i^k or y_i^k. color and slot are 0-based; the textual
// form "x:i:k" is 1-based.
struct CoordIndex {
  Kind kind = Kind::x;
  std::size_t color = 0;
  std::size_t slot = 0;

  static CoordIndex parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const CoordIndex&, const CoordIndex&) = default;
};

// Fixed linear ordering of the 2|alpha| coordinates: all x ascending in
// (color, slot), then all y in the same order.
class ChartLayout {
 public:
  ChartLayout(CartanDatum cartan, Degree alpha);

  const CartanDatum& cartan() const noexcept { return cartan_; }
  const Degree& alpha() const noexcept { return alpha_; }
  std::size_t half() const noexcept { return half_; }
  std::size_t size() const noexcept { return 2 * half_; }
  std::size_t colors() const noexcept { return alpha_.size(); }

  std::size_t position(const CoordIndex& c) const;
  CoordIndex index(std::size_t position) const;
  // Offset of the first x (or y) slot of a color inside its half.
  std::size_t color_offset(std::size_t color) const { return offsets_.at(color); }
  std::size_t color_of(std::size_t half_position) const { return color_of_.at(half_position); }

  friend bool operator==(const ChartLayout& a, const ChartLayout& b) {
    return a.cartan_ == b.cartan_ && a.alpha_ == b.alpha_;
  }

 private:
  CartanDatum cartan_;
  Degree alpha_;
  std::size_t half_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> color_of_;
};

// 2|alpha|
int dimension(const Degree& alpha);

// Chart point with coordinates stored in layout order. The exact (rational)
// instance validates the chart invariants on construction; the complex
// instance is only checked against float tolerances by callers.
template <class Scalar>
class BasicChartPoint {
 public:
  BasicChartPoint(ChartLayout layout, std::vector<Scalar> coords)
      : layout_(std::move(layout)), coords_(std::move(coords)) {}

  const ChartLayout& layout() const noexcept { return layout_; }
  const CartanDatum& cartan() const noexcept { return layout_.cartan(); }
  const Degree& alpha() const noexcept { return layout_.alpha(); }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  std::vector<Scalar>& mutable_coords() noexcept { return coords_; }

  const Scalar& operator[](const CoordIndex& c) const { return coords_[layout_.position(c)]; }
  const Scalar& x(std::size_t color, std::size_t slot) const {
    return coords_[layout_.color_offset(color) + slot];
  }
  const Scalar& y(std::size_t color, std::size_t slot) const {
    return coords_[layout_.half() + layout_.color_offset(color) + slot];
  }
  std::vector<Scalar> x_block(std::size_t color) const { return block(0, color); }
  std::vector<Scalar> y_block(std::size_t color) const { return block(layout_.half(), color); }

  friend bool operator==(const BasicChartPoint& a, const BasicChartPoint& b) {
    return a.layout_ == b.layout_ && a.coords_ == b.coords_;
  }

 private:
  std::vector<Scalar> block(std::size_t base, std::size_t color) const {
    auto first = coords_.begin() + static_cast<std::ptrdiff_t>(base + layout_.color_offset(color));
    return {first, first + layout_.alpha()[color]};
  }

  ChartLayout layout_;
  std::vector<Scalar> coords_;
};

using ComplexPoint = BasicChartPoint<Complex>;

class ChartPoint : public BasicChartPoint<Rat> {
 public:
  // x[i], y[i] hold the a_i values of color i. Throws invariant_violation if
  // the block sizes are wrong, any two x coincide (across all colors) or some
  // y vanishes.
  static ChartPoint make(const CartanDatum& cartan, const Degree& alpha,
                         const std::vector<std::vector<Rat>>& x,
                         const std::vector<std::vector<Rat>>& y);
  static ChartPoint from_coords(ChartLayout layout, std::vector<Rat> coords);

  ComplexPoint to_complex() const;

 private:
  using BasicChartPoint<Rat>::BasicChartPoint;
};

// Checks the exact chart invariants on raw layout-ordered coordinates.
void validate_chart(const ChartLayout& layout, const std::vector<Rat>& coords);

struct FloatChartTolerance {
  double min_x_gap = 1e-8;
  double min_abs_y = 1e-12;
};

// true when all |x - x'| > min_x_gap and all |y| > min_abs_y.
bool inside_float_chart(const ComplexPoint& pt, const FloatChartTolerance& tol = {});

// Per color: p_i monic of degree a_i, q_i of degree < a_i.
struct PolyChart {
  CartanDatum cartan;
  Degree alpha;
  std::vector<Poly> p;
  std::vector<Poly> q;

  friend bool operator==(const PolyChart&, const PolyChart&) = default;
};

PolyChart to_polys(const ChartPoint& pt);

// roots[i] must be exactly the roots of p_i. Throws not_a_root,
// coincident_roots or zero_y.
ChartPoint from_polys(const PolyChart& pc, const std::vector<std::vector<Rat>>& roots);

// Companion-matrix eigenvalues of a monic polynomial.
std::vector<Complex> companion_roots(const Poly& p);

// Float-mode companion of from_polys for imported polynomial data: roots are
// found numerically and accepted when |p(x)| <= 1e-9 (1 + |x|)^deg.
ComplexPoint from_polys_float(const PolyChart& pc);

}  // namespace monopole
