#include <doctest.h>

#include "monopole/cartan.hpp"
#include "monopole/error.hpp"

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

const char* kTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "B2", "B3", "B4",
                        "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("named data: normalizations") {
  CHECK(CartanDatum::from_name("A1").dot_matrix() == std::vector<std::vector<int>>{{2}});

  const auto a2 = CartanDatum::from_name("A2");
  CHECK(a2.dot_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.cartan_matrix() == a2.dot_matrix());
}

TEST_CASE("G2 Cartan integers from the symmetrized form") {
  const auto g2 = CartanDatum::from_name("G2");
  CHECK(g2.dot_matrix() == std::vector<std::vector<int>>{{2, -3}, {-3, 6}});
  CHECK(g2.symmetrizer(0) == 1);
  CHECK(g2.symmetrizer(1) == 3);
  // a_ij = 2(i.j)/(i.i): row of the short root carries the -3.
  CHECK(g2.cartan(0, 1) == -3);
  CHECK(g2.cartan(1, 0) == -1);
}

TEST_CASE("dot lookups") {
  CHECK(CartanDatum::from_name("A2").dot(0, 1) == -1);
  CHECK(CartanDatum::from_name("A1").dot(0, 0) == 2);
  CHECK(CartanDatum::from_name("A3").dot(0, 2) == 0);
  CHECK(code_of([] { (void)CartanDatum::from_name("A2").dot(0, 2); }) == Errc::index_out_of_range);
}

TEST_CASE("coweight_root_pairing examples") {
  const auto a2 = CartanDatum::from_name("A2");
  const std::vector<Int> e2{0, 1}, e1{1, 0};
  CHECK(a2.coweight_root_pairing(e2, 1) == 2);
  CHECK(a2.coweight_root_pairing(e1, 1) == -1);
  const std::vector<Int> zero{0};
  CHECK(CartanDatum::from_name("A1").coweight_root_pairing(zero, 0) == 0);
  CHECK(code_of([&] { (void)a2.coweight_root_pairing(e1, 5); }) == Errc::index_out_of_range);
}

TEST_CASE("every named type satisfies the Cartan invariants") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    const auto c = CartanDatum::from_name(name);
    for (std::size_t i = 0; i < c.rank(); ++i) {
      const int ii = c.dot(i, i);
      CHECK((ii == 2 || ii == 4 || ii == 6));
      CHECK(c.cartan(i, i) == 2);
      for (std::size_t j = 0; j < c.rank(); ++j) {
        CHECK(c.dot(i, j) == c.dot(j, i));
        CHECK(c.cartan(i, j) * ii == 2 * c.dot(i, j));
        if (i != j) {
          CHECK(c.dot(i, j) <= 0);
          CHECK(c.cartan(i, j) >= -3);
          CHECK((c.cartan(i, j) == 0) == (c.cartan(j, i) == 0));
        }
      }
    }
  }
}

TEST_CASE("pairing is linear in gamma and matches the Cartan table on basis vectors") {
  const auto b3 = CartanDatum::from_name("B3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<Int> e(3, 0);
      e[i] = 1;
      CHECK(b3.coweight_root_pairing(e, j) == b3.cartan(i, j));
    }
  const std::vector<Int> g1{2, -1, 3}, g2{-1, 4, 1}, sum{1, 3, 4};
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(b3.coweight_root_pairing(sum, j) == b3.coweight_root_pairing(g1, j) + b3.coweight_root_pairing(g2, j));
}

TEST_CASE("positive definiteness over the box [-3, 3]^n") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    const auto c = CartanDatum::from_name(name);
    const std::size_t n = c.rank();
    std::vector<int> v(n, -3);
    for (;;) {
      bool nonzero = false;
      long q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        nonzero = nonzero || v[i] != 0;
        for (std::size_t j = 0; j < n; ++j) q += long(v[i]) * v[j] * c.dot(i, j);
      }
      if (nonzero) REQUIRE(q > 0);
      std::size_t k = 0;
      while (k < n && v[k] == 3) v[k++] = -3;
      if (k == n) break;
      ++v[k];
    }
  }
}

TEST_CASE("explicit matrices: validation errors") {
  CHECK(code_of([] { (void)CartanDatum::from_dot({{2, -1}, {0, 2}}); }) == Errc::malformed_matrix);
  CHECK(code_of([] { (void)CartanDatum::from_dot({{3}}); }) == Errc::malformed_matrix);
  CHECK(code_of([] { (void)CartanDatum::from_dot({{2, 1}, {1, 2}}); }) == Errc::malformed_matrix);
  CHECK(code_of([] { (void)CartanDatum::from_dot({{2, -1}}); }) == Errc::malformed_matrix);
  // affine A1: minor of order 2 vanishes
  CHECK(code_of([] { (void)CartanDatum::from_dot({{2, -2}, {-2, 2}}); }) == Errc::not_finite_type);
  // affine A2 triangle
  CHECK(code_of([] { (void)CartanDatum::from_dot({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }) == Errc::not_finite_type);
  CHECK(code_of([] { (void)CartanDatum::from_name("Q3"); }) == Errc::malformed_matrix);
  CHECK(code_of([] { (void)CartanDatum::from_name("D3"); }) == Errc::malformed_matrix);
}

TEST_CASE("reducible data") {
  const auto c = CartanDatum::from_name("A1xA2");
  CHECK(c.rank() == 3);
  CHECK(c.dot(0, 1) == 0);
  CHECK(c.dot(1, 2) == -1);
  CHECK(CartanDatum::from_dot({{2, 0}, {0, 4}}).rank() == 2);
}

TEST_CASE("degrees") {
  const Degree a({2, 1});
  CHECK(a.total() == 3);
  CHECK(a.weight_pairing(0) == 2);
  CHECK(simple_fundamental_pairing(1, 1) == 1);
  CHECK(simple_fundamental_pairing(0, 1) == 0);
  CHECK(code_of([] { Degree bad({1, -1}); }) == Errc::invariant_violation);
}
