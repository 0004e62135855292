#include "monopole/dtilde.hpp"

#include <string>

#include "monopole/error.hpp"
#include "monopole/matrix.hpp"

namespace monopole {

DTildeOracle::DTildeOracle(PolyChart pc, std::vector<std::vector<Rat>> roots)
    : pc_(std::move(pc)), roots_(std::move(roots)) {
  if (roots_.size() != pc_.alpha.size() || pc_.p.size() != pc_.alpha.size() || pc_.q.size() != pc_.alpha.size())
    throw Error(Errc::invariant_violation, "oracle needs p, q and roots for every color");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != static_cast<std::size_t>(pc_.alpha[i]) || pc_.p[i].degree() != pc_.alpha[i])
      throw Error(Errc::invariant_violation, "color " + std::to_string(i + 1) + ": root count does not match the degree");
    for (const Rat& r : roots_[i])
      if (pc_.p[i](r) != 0) throw Error(Errc::invariant_violation, to_string(r) + " is not a root of p_" + std::to_string(i + 1));
    sections_.push_back(antisym_quotient(pc_.p[i], pc_.q[i]));
  }
}

Rat DTildeOracle::xy(std::size_t color, std::size_t k) const {
  const Rat& x = roots_.at(color).at(k);
  const Rat slope = pc_.p[color].derivative()(x);
  if (slope == 0) throw Error(Errc::invariant_violation, "repeated root of p_" + std::to_string(color + 1));
  return sections_[color](x, x) / slope;
}

Rat DTildeOracle::yy_same(std::size_t color, std::size_t k, std::size_t l) const {
  if (k == l) return 0;
  const auto& r = roots_.at(color);
  return sections_[color](r.at(k), r.at(l));
}

Rat DTildeOracle::yy_mixed(std::size_t ci, std::size_t k, std::size_t cj, std::size_t l) const {
  if (ci == cj) throw Error(Errc::invariant_violation, "yy_mixed needs two different colors");
  const Rat& xi = roots_.at(ci).at(k);
  const Rat& xj = roots_.at(cj).at(l);
  if (xi == xj) throw Error(Errc::coincident_evaluation, "x_" + std::to_string(ci + 1) + " = x_" + std::to_string(cj + 1));
  // Dropped numerator terms are p_i(z) (.) and (.) p_j(w).
  if (pc_.p[ci](xi) != 0 || pc_.p[cj](xj) != 0)
    throw Error(Errc::invariant_violation, "evaluation point is not a pair of roots");
  const int ij = pc_.cartan.dot(ci, cj);
  if (ij == 0) return 0;
  const Rat numerator = Rat(ij) * pc_.q[ci](xi) * pc_.q[cj](xj);
  return numerator / (xi - xj);
}

Rat DTildeOracle::bracket(const CoordIndex& a, const CoordIndex& b) const {
  if (a.kind == Kind::x && b.kind == Kind::x) return 0;
  if (a.kind == Kind::y && b.kind == Kind::x) return -bracket(b, a);
  if (a.kind == Kind::x) {
    // Different colors: the weight w_i + w_j - j' meets only the top summand.
    if (a.color != b.color) return 0;
    if (a.slot == b.slot) return xy(a.color, a.slot);
    const auto& r = roots_.at(a.color);
    return sections_[a.color](r.at(a.slot), r.at(b.slot)) / pc_.p[a.color].derivative()(r.at(a.slot));
  }
  if (a.color == b.color) return yy_same(a.color, a.slot, b.slot);
  return yy_mixed(a.color, a.slot, b.color, b.slot);
}

CasimirTable casimir_table(const CartanDatum& cartan, std::size_t i, std::size_t j) {
  CasimirTable t;
  t.top = 0;
  t.same_color = -2;
  t.same_denominator = 2;
  const int ij = cartan.dot(i, j);
  t.has_mixed = i != j && ij != 0;
  t.mixed = t.has_mixed ? Rat(ij - 2) : Rat(0);
  t.mixed_denominator = t.has_mixed ? Rat(ij - 2) : Rat(1);
  return t;
}

namespace {

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Rat trace(const RatMatrix& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Returns lambda with op * u = lambda * u, or throws if u is not an eigenvector.
Rat eigenvalue_on(const RatMatrix& op, const std::vector<Rat>& u) {
  std::vector<Rat> image(u.size());
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (std::size_t c = 0; c < op.cols(); ++c) image[r] += op(r, c) * u[c];
  std::size_t lead = 0;
  while (lead < u.size() && u[lead] == 0) ++lead;
  const Rat lambda = image[lead] / u[lead];
  for (std::size_t r = 0; r < u.size(); ++r)
    if (image[r] != lambda * u[r]) throw Error(Errc::invariant_violation, "vector is not an eigenvector of the Casimir operator");
  return lambda;
}

}  // namespace

Rank1Casimir casimir_scalars_rank1() {
  const CartanDatum a1 = CartanDatum::from_name("A1");
  RatMatrix e(2, 2), f(2, 2), h(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  const std::vector<RatMatrix> basis{e, f, h};

  RatMatrix gram(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) gram(k, l) = trace(basis[k] * basis[l]);
  const RatMatrix dual_coeffs = exact_inverse(gram);

  RatMatrix op(4, 4);
  for (std::size_t k = 0; k < 3; ++k) {
    RatMatrix dual(2, 2);
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) dual(r, c) += dual_coeffs(k, l) * basis[l](r, c);
    const RatMatrix term = kronecker(dual, basis[k]);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) op(r, c) += term(r, c);
  }

  // (w, w) = d^2 / (i.i) for the single node, with d = (i.i)/2.
  const Rat d = a1.symmetrizer(0);
  const Rat omega_sq = d * d / Rat(a1.dot(0, 0));
  for (std::size_t r = 0; r < 4; ++r) op(r, r) -= omega_sq;

  // v = e_0, F v = e_1; index of v_a (x) v_b is 2a + b.
  const std::vector<Rat> vv{1, 0, 0, 0};
  const std::vector<Rat> sym_mid{0, 1, 1, 0};
  const std::vector<Rat> ff{0, 0, 0, 1};
  const std::vector<Rat> anti{0, 1, -1, 0};

  Rank1Casimir out;
  out.on_symmetric = eigenvalue_on(op, vv);
  if (eigenvalue_on(op, sym_mid) != out.on_symmetric || eigenvalue_on(op, ff) != out.on_symmetric)
    throw Error(Errc::invariant_violation, "Casimir operator is not scalar on Sym^2 V");
  out.on_antisymmetric = eigenvalue_on(op, anti);
  out.denominator = 2;
  return out;
}

}  // namespace monopole
