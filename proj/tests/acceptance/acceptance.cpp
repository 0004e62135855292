// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "monopole/dtilde.hpp"
#include "monopole/error.hpp"
#include "monopole/flows.hpp"
#include "monopole/leaves.hpp"
#include "monopole/poisson.hpp"
#include "monopole/sampling.hpp"
#include "oracles.hpp"

using namespace monopole;

namespace {

struct Config {
  const char* name;
  std::vector<int> alpha;
};

const std::vector<Config> kData{
    {"A1", {2}},       {"A1", {4}},       {"A1", {6}},       {"A2", {1, 1}}, {"A2", {2, 1}},
    {"A2", {3, 3}},    {"A3", {1, 1, 1}}, {"A3", {2, 1, 1}}, {"A3", {2, 2, 2}}, {"B2", {1, 1}},
    {"B2", {2, 1}},    {"B2", {3, 3}},    {"G2", {1, 1}},    {"G2", {1, 2}},    {"G2", {3, 3}},
};
constexpr int kPointsPerConfig = 100;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string describe(const Config& c) {
  std::string s = std::string(c.name) + " alpha=(";
  for (std::size_t i = 0; i < c.alpha.size(); ++i) s += (i ? "," : "") + std::to_string(c.alpha[i]);
  return s + ")";
}

std::vector<std::vector<ChartPoint>> sample_all() {
  std::vector<std::vector<ChartPoint>> out;
  Sampler s(20261014);
  for (const auto& c : kData) {
    const auto cartan = CartanDatum::from_name(c.name);
    std::vector<ChartPoint> pts;
    for (int k = 0; k < kPointsPerConfig; ++k) pts.push_back(s.chart_point(cartan, Degree(c.alpha)));
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<std::vector<Rat>> roots_of(const ChartPoint& pt) {
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < pt.alpha().size(); ++i) out.push_back(pt.x_block(i));
  return out;
}

Outcome jacobi(const std::vector<std::vector<ChartPoint>>& all) {
  Outcome o;
  std::size_t triples = 0;
  for (std::size_t c = 0; c < kData.size(); ++c)
    for (const auto& pt : all[c]) {
      const auto scan = jacobi_scan(pt);
      const std::size_t n = pt.layout().size();
      triples += scan.triples;
      if (scan.triples != n * n * n) o.fail("incomplete triple scan for " + describe(kData[c]));
      if (!scan.failures.empty()) o.fail("nonzero Jacobiator for " + describe(kData[c]));
    }
  if (o.ok) o.detail = std::to_string(kData.size() * kPointsPerConfig) + " points, " + std::to_string(triples) + " triples";
  return o;
}

Outcome inverse(const std::vector<std::vector<ChartPoint>>& all) {
  Outcome o;
  // sign pin on the 2x2 case
  const auto sl2 = ChartPoint::make(CartanDatum::from_name("A1"), Degree({1}), {{0}}, {{5}});
  if (symplectic_matrix(sl2) * bivector_matrix(sl2) != RatMatrix::identity(2)) o.fail("sign pin: Omega P != +Id");
  for (std::size_t c = 0; c < kData.size(); ++c)
    for (const auto& pt : all[c])
      if (symplectic_matrix(pt) * bivector_matrix(pt) != RatMatrix::identity(pt.layout().size()))
        o.fail("Omega P != Id for " + describe(kData[c]));
  if (o.ok) o.detail = "exact at every point, sign +Id";
  return o;
}

Outcome oracle_equivalence(const std::vector<std::vector<ChartPoint>>& all) {
  Outcome o;
  std::size_t comparisons = 0;
  for (std::size_t c = 0; c < kData.size(); ++c)
    for (const auto& pt : all[c]) {
      const DTildeOracle d(to_polys(pt), roots_of(pt));
      const auto& layout = pt.layout();
      for (std::size_t i = 0; i < layout.colors(); ++i)
        for (std::size_t k = 0; k < pt.x_block(i).size(); ++k) {
          ++comparisons;
          if (d.xy(i, k) != bracket_coords(pt, {Kind::x, i, k}, {Kind::y, i, k})) o.fail("xy mismatch");
          for (std::size_t l = 0; l < pt.x_block(i).size(); ++l) {
            if (l != k) {
              ++comparisons;
              if (d.yy_same(i, k, l) != bracket_coords(pt, {Kind::y, i, k}, {Kind::y, i, l})) o.fail("yy_same mismatch");
            }
          }
          for (std::size_t j = 0; j < layout.colors(); ++j) {
            if (j == i) continue;
            for (std::size_t l = 0; l < pt.x_block(j).size(); ++l) {
              ++comparisons;
              if (d.yy_mixed(i, k, j, l) != bracket_coords(pt, {Kind::y, i, k}, {Kind::y, j, l})) o.fail("yy_mixed mismatch");
            }
          }
        }
    }
  Sampler s(8);
  int pairs = 0;
  for (; pairs < 1000; ++pairs) {
    const Poly p = s.polynomial(8), q = s.polynomial(8);
    try {
      const BiPoly t = antisym_quotient(p, q);
      const std::size_t size = static_cast<std::size_t>(std::max(p.degree(), q.degree()) + 1);
      const auto want = oracle::antisym_numerator(p.coefficients(), q.coefficients());
      std::vector<std::vector<Rat>> grid = t.grid();
      if (oracle::times_z_minus_w(grid, size) != want) o.fail("(z-w) T differs from the numerator");
    } catch (const Error& e) {
      o.fail(std::string("division by (z-w) left a remainder: ") + e.what());
    }
  }
  if (o.ok) o.detail = std::to_string(comparisons) + " oracle comparisons, " + std::to_string(pairs) + " exact divisions";
  return o;
}

Outcome sl2_baseline() {
  Outcome o;
  Sampler s(4);
  const auto a1 = CartanDatum::from_name("A1");
  for (int a = 1; a <= 4; ++a)
    for (int trial = 0; trial < 25; ++trial) {
      const auto pt = s.chart_point(a1, Degree({a}));
      const auto omega = symplectic_matrix(pt);
      for (std::size_t k = 0; k < std::size_t(a); ++k)
        for (std::size_t m = 0; m < std::size_t(a); ++m) {
          if (bracket_coords(pt, {Kind::x, 0, k}, {Kind::x, 0, m}) != 0) o.fail("{x,x} != 0");
          if (bracket_coords(pt, {Kind::y, 0, k}, {Kind::y, 0, m}) != 0) o.fail("{y,y} != 0");
          if (bracket_coords(pt, {Kind::x, 0, k}, {Kind::y, 0, m}) != (k == m ? pt.y(0, m) : Rat(0))) o.fail("{x,y} != delta y");
          if (omega(k, m) != 0) o.fail("Omega has an x-x block");
          if (omega(a + k, a + m) != 0) o.fail("Omega has a y-y block");
          if (omega(k, a + m) != (k == m ? Rat(-1 / pt.y(0, k)) : Rat(0))) o.fail("Omega is not sum dy^dx/y");
        }
    }
  if (o.ok) o.detail = "degrees 1..4, 25 points each";
  return o;
}

Outcome casimir() {
  Outcome o;
  const auto c = casimir_scalars_rank1();
  if (c.on_symmetric != 0 || c.on_antisymmetric != -2) o.fail("scalars are not {0, -2}");
  if (c.denominator != 2 || c.ratio() != -1) o.fail("ratio against denominator 2 is not -1");
  if (o.ok) o.detail = "{0, -2}, ratio -1";
  return o;
}

Outcome integrable() {
  Outcome o;
  double worst_dev = 0, worst_drift = 0, worst_commute = 0;
  Sampler s(61);
  struct FlowCase {
    const char* name;
    std::vector<int> alpha;
    std::vector<std::string> hamiltonians;
  };
  const std::vector<FlowCase> cases{
      {"A1", {3}, {"e:1:1", "e:2:1", "e:3:1", "p:2:1 + e:1:1*e:2:1"}},
      {"A2", {2, 1}, {"e:1:1", "e:2:1", "e:1:2", "e:2:1*e:1:2 + 1/3*p:3:1"}},
  };
  for (const auto& fc : cases) {
    const auto cartan = CartanDatum::from_name(fc.name);
    for (int trial = 0; trial < 3; ++trial) {
      const auto start = s.complex_chart_point(cartan, Degree(fc.alpha));
      const auto& layout = start.layout();
      std::vector<Hamiltonian> symmetric;
      for (std::size_t i = 0; i < fc.alpha.size(); ++i)
        for (int m = 1; m <= fc.alpha[i]; ++m) symmetric.emplace_back(layout, MultiPoly::elementary_x(layout, i, m));
      std::vector<Hamiltonian> hs;
      for (const auto& text : fc.hamiltonians) hs.push_back(Hamiltonian::parse(text, layout));
      for (const auto& h : hs) {
        const auto traj = integrate(h, start, 1.0, 1e-3);
        worst_dev = std::max(worst_dev, closed_form_deviation(h, traj));
        for (double d : conservation_report(traj, symmetric)) worst_drift = std::max(worst_drift, d);
      }
      for (std::size_t a = 0; a < hs.size(); ++a)
        for (std::size_t b = a + 1; b < hs.size(); ++b)
          worst_commute = std::max(worst_commute, commute_check(hs[a], hs[b], start, 1.0, 1e-3));
    }
  }
  if (worst_dev > 1e-9) o.fail("closed-form deviation " + std::to_string(worst_dev));
  if (worst_drift > 1e-9) o.fail("symmetric-function drift " + std::to_string(worst_drift));
  if (worst_commute > 1e-8) o.fail("commutator " + std::to_string(worst_commute));
  char buf[160];
  std::snprintf(buf, sizeof buf, "deviation %.2e, drift %.2e, commute %.2e", worst_dev, worst_drift, worst_commute);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome round_trip() {
  Outcome o;
  Sampler s(7);
  int n = 0;
  for (; n < 1000; ++n) {
    const auto& c = kData[n % kData.size()];
    const auto pt = s.chart_point(CartanDatum::from_name(c.name), Degree(c.alpha));
    if (from_polys(to_polys(pt), roots_of(pt)) != pt) o.fail("round trip changed a point of " + describe(c));
  }
  if (o.ok) o.detail = std::to_string(n) + " points";
  return o;
}

std::vector<std::vector<int>> to_lists(const std::vector<Degree>& lifts) {
  std::vector<std::vector<int>> out;
  for (const auto& d : lifts) {
    std::vector<int> v;
    for (std::size_t i = 0; i < d.size(); ++i) v.push_back(d[i]);
    out.push_back(v);
  }
  return out;
}

Outcome leaves() {
  Outcome o;
  std::size_t data = 0;
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    const auto cartan = CartanDatum::from_name(name);
    const std::size_t n = cartan.rank();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> in_j(n);
      for (std::size_t i = 0; i < n; ++i) in_j[i] = (mask >> i) & 1u;
      std::vector<int> beta(n, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == n) {
          const ParabolicDatum pd(cartan, in_j, Degree(beta));
          for (auto conv : {LiftConvention::lemma, LiftConvention::literal}) {
            ++data;
            const auto got = enumerate_special_lifts(pd, conv);
            int box = 0;
            for (int b : got.bound) box = std::max(box, b);
            const auto brute = oracle::brute_force_lifts(cartan.dot_matrix(), in_j, beta, conv == LiftConvention::lemma, box + 3);
            const auto lists = to_lists(got.lifts);
            if (lists != brute) o.fail(std::string("enumeration differs from brute force in ") + name);
            if (std::find(lists.begin(), lists.end(), beta) == lists.end()) o.fail("beta missing from its lifts");
            for (const auto& a : got.lifts) {
              const int total = static_cast<int>(a.total());
              if (leaf_dimension(a) != 2 * total) o.fail("leaf dimension is not 2|alpha|");
            }
          }
          return;
        }
        for (int v = 0; v <= (in_j[pos] ? 0 : left); ++v) {
          beta[pos] = v;
          rec(pos + 1, left - v);
        }
        beta[pos] = 0;
      };
      rec(0, 4);
    }
  }
  const auto a2 = CartanDatum::from_name("A2");
  const ParabolicDatum pd(a2, {false, true}, Degree({2, 0}));
  const auto lemma = enumerate_special_lifts(pd, LiftConvention::lemma);
  const auto literal = enumerate_special_lifts(pd, LiftConvention::literal);
  if (to_lists(lemma.lifts) != std::vector<std::vector<int>>{{2, 0}, {2, 1}}) o.fail("A2 LEMMA example");
  if (to_lists(literal.lifts) != std::vector<std::vector<int>>{{2, 0}}) o.fail("A2 LITERAL example");
  // the enumerated lift must also carry the bracket rank 2|alpha|
  Sampler s(3);
  for (const auto& a : lemma.lifts) {
    const auto pt = s.chart_point(a2, a);
    if (rank(pt) != static_cast<std::size_t>(leaf_dimension(a))) o.fail("rank of P differs from the leaf dimension");
  }
  if (o.ok) o.detail = std::to_string(data) + " (J, beta, convention) cases";
  return o;
}

Outcome nondegeneracy(const std::vector<std::vector<ChartPoint>>& all) {
  Outcome o;
  for (std::size_t c = 0; c < kData.size(); ++c)
    for (const auto& pt : all[c])
      if (rank(pt) != static_cast<std::size_t>(dimension(pt.alpha()))) o.fail("rank below 2|alpha| for " + describe(kData[c]));
  if (o.ok) o.detail = "full rank at every point";
  return o;
}

}  // namespace

int main() {
  const auto points = sample_all();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Jacobi identity", [&] { return jacobi(points); }},
      {"inverse identity", [&] { return inverse(points); }},
      {"oracle equivalence", [&] { return oracle_equivalence(points); }},
      {"rank-one baseline", sl2_baseline},
      {"Casimir scalars", casimir},
      {"integrable system", integrable},
      {"chart round trip", round_trip},
      {"leaf combinatorics", leaves},
      {"nondegeneracy", [&] { return nondegeneracy(points); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str(), secs);
    if (!o.ok) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
