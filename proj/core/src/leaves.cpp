#include "monopole/leaves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monopole/error.hpp"
#include "monopole/matrix.hpp"

namespace monopole {

LiftConvention parse_convention(std::string_view text) {
  if (text == "lemma" || text == "LEMMA") return LiftConvention::lemma;
  if (text == "literal" || text == "LITERAL") return LiftConvention::literal;
  throw Error(Errc::parse_error, "convention must be 'lemma' or 'literal', got '" + std::string(text) + "'");
}

std::string_view to_string(LiftConvention c) { return c == LiftConvention::lemma ? "lemma" : "literal"; }

ParabolicDatum::ParabolicDatum(CartanDatum c, std::vector<bool> j, Degree b)
    : cartan(std::move(c)), in_j(std::move(j)), beta(std::move(b)) {
  if (in_j.size() != cartan.rank() || beta.size() != cartan.rank())
    throw Error(Errc::index_out_of_range, "J and beta must be indexed by the nodes of the datum");
  for (std::size_t i = 0; i < in_j.size(); ++i)
    if (in_j[i] && beta[i] != 0)
      throw Error(Errc::support_violation, "beta must vanish on J (node " + std::to_string(i + 1) + ")");
}

bool is_antidominant(const CartanDatum& cartan, const Degree& gamma, const std::vector<bool>& in_j) {
  if (gamma.size() != cartan.rank() || in_j.size() != cartan.rank())
    throw Error(Errc::index_out_of_range, "gamma and J must be indexed by the nodes of the datum");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!in_j[i] && gamma[i] != 0) throw Error(Errc::support_violation, "gamma must be supported on J");
  const auto lattice = gamma.as_lattice();
  for (std::size_t j = 0; j < in_j.size(); ++j)
    if (in_j[j] && cartan.coweight_root_pairing(lattice, j) > 0) return false;
  return true;
}

bool is_special_lift(const Degree& alpha, const ParabolicDatum& pd, LiftConvention convention) {
  const std::size_t n = pd.cartan.rank();
  if (alpha.size() != n) throw Error(Errc::index_out_of_range, "alpha must be indexed by the nodes of the datum");
  std::vector<int> gamma(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pd.in_j[i]) {
      if (alpha[i] != pd.beta[i]) return false;
    } else {
      gamma[i] = alpha[i];
    }
  }
  if (convention == LiftConvention::literal) return is_antidominant(pd.cartan, Degree(gamma), pd.in_j);
  const auto lattice = alpha.as_lattice();
  for (std::size_t j = 0; j < n; ++j)
    if (pd.in_j[j] && pd.cartan.coweight_root_pairing(lattice, j) > 0) return false;
  return true;
}

std::vector<int> lift_search_bound(const ParabolicDatum& pd, LiftConvention convention) {
  const std::size_t n = pd.cartan.rank();
  std::vector<std::size_t> js;
  for (std::size_t i = 0; i < n; ++i)
    if (pd.in_j[i]) js.push_back(i);
  std::vector<int> bound(n, 0);
  if (js.empty()) return bound;

  // Constraint rows: sum_{k in J} gamma_k a_kj <= b_j.
  RatMatrix m(js.size(), js.size());
  std::vector<Rat> b(js.size());
  for (std::size_t r = 0; r < js.size(); ++r) {
    for (std::size_t c = 0; c < js.size(); ++c) m(r, c) = pd.cartan.cartan(js[c], js[r]);
    if (convention == LiftConvention::lemma)
      for (std::size_t i = 0; i < n; ++i)
        if (!pd.in_j[i]) b[r] -= Rat(pd.beta[i]) * pd.cartan.cartan(i, js[r]);
  }
  const RatMatrix inv = exact_inverse(m);
  for (std::size_t r = 0; r < js.size(); ++r) {
    Rat v = 0;
    for (std::size_t c = 0; c < js.size(); ++c) {
      if (inv(r, c) < 0) throw Error(Errc::not_finite_type, "inverse Cartan matrix has a negative entry");
      v += inv(r, c) * b[c];
    }
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    bound[js[r]] = std::max(0, static_cast<int>(fl.get_si()));
  }
  return bound;
}

SpecialLiftSet enumerate_special_lifts(const ParabolicDatum& pd, LiftConvention convention) {
  SpecialLiftSet out{convention, {}, lift_search_bound(pd, convention)};
  std::vector<std::size_t> js;
  for (std::size_t i = 0; i < pd.cartan.rank(); ++i)
    if (pd.in_j[i]) js.push_back(i);

  std::vector<int> alpha = pd.beta.coefficients();
  for (bool more = true; more;) {
    Degree candidate(alpha);
    if (is_special_lift(candidate, pd, convention)) out.lifts.push_back(std::move(candidate));
    // Odometer over the J-coordinates of the box.
    more = false;
    for (std::size_t r = js.size(); r-- > 0;) {
      if (alpha[js[r]] < out.bound[js[r]]) {
        ++alpha[js[r]];
        more = true;
        break;
      }
      alpha[js[r]] = 0;
    }
  }
  std::sort(out.lifts.begin(), out.lifts.end());
  return out;
}

int leaf_dimension(const Degree& alpha) { return 2 * alpha.total(); }

}  // namespace monopole
