#include <doctest.h>

#include "monopole/chart.hpp"
#include "monopole/error.hpp"
#include "monopole/sampling.hpp"

using namespace monopole;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected monopole::Error");
  return Errc::parse_error;
}

const CartanDatum kA1 = CartanDatum::from_name("A1");
const CartanDatum kA2 = CartanDatum::from_name("A2");

std::vector<std::vector<Rat>> blocks(const ChartPoint& pt) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < pt.alpha().size(); ++i) out.push_back(pt.x_block(i));
  return out;
}

}  // namespace

TEST_CASE("coordinate indices and layout ordering") {
  const ChartLayout layout(kA2, Degree({2, 1}));
  CHECK(layout.size() == 6);
  CHECK(layout.position(CoordIndex::parse("x:1:1")) == 0);
  CHECK(layout.position(CoordIndex::parse("x:1:2")) == 1);
  CHECK(layout.position(CoordIndex::parse("x:2:1")) == 2);
  CHECK(layout.position(CoordIndex::parse("y:1:1")) == 3);
  CHECK(layout.position(CoordIndex::parse("y:2:1")) == 5);
  for (std::size_t p = 0; p < layout.size(); ++p) CHECK(layout.position(layout.index(p)) == p);
  CHECK(CoordIndex::parse("y:2:1").str() == "y:2:1");
  CHECK(code_of([] { (void)CoordIndex::parse("z:1:1"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)CoordIndex::parse("x:0:1"); }) == Errc::parse_error);
  CHECK(code_of([&] { (void)layout.position(CoordIndex::parse("x:2:2")); }) == Errc::index_out_of_range);
}

TEST_CASE("dimension") {
  CHECK(dimension(Degree({0})) == 0);
  CHECK(dimension(Degree({2, 1})) == 6);
  for (int a = 0; a < 6; ++a) CHECK(dimension(Degree({a})) == 2 * a);
}

TEST_CASE("to_polys examples") {
  auto pt = ChartPoint::make(kA1, Degree({2}), {{0, 1}}, {{1, 2}});
  auto pc = to_polys(pt);
  CHECK(pc.p[0] == Poly({0, -1, 1}));
  CHECK(pc.q[0] == Poly({1, 1}));

  const Rat c(3, 7), v(-2, 5);
  pc = to_polys(ChartPoint::make(kA1, Degree({1}), {{c}}, {{v}}));
  CHECK(pc.p[0] == Poly({Rat(-c), Rat(1)}));
  CHECK(pc.q[0] == Poly({v}));

  pc = to_polys(ChartPoint::make(kA2, Degree({1, 1}), {{0}, {2}}, {{1}, {3}}));
  CHECK(pc.p[0] == Poly({0, 1}));
  CHECK(pc.q[0] == Poly({1}));
  CHECK(pc.p[1] == Poly({-2, 1}));
  CHECK(pc.q[1] == Poly({3}));
}

TEST_CASE("from_polys examples and errors") {
  PolyChart pc{kA1, Degree({2}), {Poly({0, -1, 1})}, {Poly({1, 1})}};
  const auto pt = from_polys(pc, {{0, 1}});
  CHECK(pt.x_block(0) == std::vector<Rat>{0, 1});
  CHECK(pt.y_block(0) == std::vector<Rat>{1, 2});

  const PolyChart single{kA1, Degree({1}), {Poly({-5, 1})}, {Poly({9})}};
  CHECK(from_polys(single, {{5}}).y(0, 0) == 9);

  PolyChart boundary{kA1, Degree({2}), {Poly({0, -1, 1})}, {Poly({0, 1})}};
  CHECK(code_of([&] { (void)from_polys(boundary, {{0, 1}}); }) == Errc::zero_y);
  CHECK(code_of([&] { (void)from_polys(pc, {{0, 2}}); }) == Errc::not_a_root);
  CHECK(code_of([&] { (void)from_polys(pc, {{0, 0}}); }) == Errc::coincident_roots);

  // Roots shared across colors are rejected: p_1 = z, p_2 = z
  PolyChart shared{kA2, Degree({1, 1}), {Poly({0, 1}), Poly({0, 1})}, {Poly({1}), Poly({1})}};
  CHECK(code_of([&] { (void)from_polys(shared, {{0}, {0}}); }) == Errc::coincident_roots);

  PolyChart not_monic{kA1, Degree({1}), {Poly({0, 2})}, {Poly({1})}};
  CHECK(code_of([&] { (void)from_polys(not_monic, {{0}}); }) == Errc::invariant_violation);
}

TEST_CASE("chart invariants are enforced on construction") {
  CHECK(code_of([] { (void)ChartPoint::make(kA1, Degree({2}), {{1, 1}}, {{1, 2}}); }) == Errc::invariant_violation);
  CHECK(code_of([] { (void)ChartPoint::make(kA2, Degree({1, 1}), {{1}, {1}}, {{1}, {2}}); }) == Errc::invariant_violation);
  CHECK(code_of([] { (void)ChartPoint::make(kA1, Degree({1}), {{1}}, {{0}}); }) == Errc::invariant_violation);
  CHECK(code_of([] { (void)ChartPoint::make(kA1, Degree({2}), {{1}}, {{1}}); }) == Errc::invariant_violation);
  CHECK(code_of([] { (void)ChartLayout(kA2, Degree({1})); }) == Errc::invariant_violation);
}

TEST_CASE("property: exact round trip and shape of the polynomial avatar") {
  Sampler s(2024);
  const std::vector<std::pair<const char*, std::vector<int>>> cases{
      {"A1", {4}}, {"A2", {2, 1}}, {"A3", {1, 2, 1}}, {"B2", {2, 2}}, {"G2", {1, 3}}};
  for (const auto& [name, a] : cases) {
    const auto cartan = CartanDatum::from_name(name);
    for (int trial = 0; trial < 40; ++trial) {
      const ChartPoint pt = s.chart_point(cartan, Degree(a));
      const PolyChart pc = to_polys(pt);
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(pc.p[i].is_monic());
        CHECK(pc.p[i].degree() == a[i]);
        CHECK(pc.q[i].degree() < a[i]);
        for (std::size_t k = 0; k < pt.x_block(i).size(); ++k) CHECK(pc.q[i](pt.x(i, k)) == pt.y(i, k));
      }
      CHECK(from_polys(pc, blocks(pt)) == pt);
    }
  }
}

TEST_CASE("property: p depends on x only") {
  Sampler s(8);
  const auto pt = s.chart_point(kA2, Degree({2, 2}));
  auto coords = pt.coords();
  for (std::size_t a = pt.layout().half(); a < coords.size(); ++a) coords[a] = s.nonzero_rational();
  const auto other = ChartPoint::from_coords(pt.layout(), coords);
  CHECK(to_polys(pt).p == to_polys(other).p);
}

TEST_CASE("float mode: companion-matrix roots") {
  const auto pt = ChartPoint::make(kA2, Degree({2, 1}), {{Rat(-1), Rat(3, 2)}, {Rat(1, 3)}}, {{Rat(2), Rat(-5)}, {Rat(7)}});
  const ComplexPoint f = from_polys_float(to_polys(pt));
  const ComplexPoint exact = pt.to_complex();
  for (std::size_t a = 0; a < f.coords().size(); ++a) CHECK(std::abs(f.coords()[a] - exact.coords()[a]) < 1e-9);

  const auto roots = companion_roots(Poly({1, 0, 1}));  // z^2 + 1
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - Complex(0, -1)) < 1e-12);
  CHECK(std::abs(roots[1] - Complex(0, 1)) < 1e-12);
  CHECK(inside_float_chart(f));
  ComplexPoint collided = f;
  collided.mutable_coords()[1] = collided.coords()[0] + 1e-10;
  CHECK_FALSE(inside_float_chart(collided));
}
