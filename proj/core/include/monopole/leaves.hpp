#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "monopole/cartan.hpp"

namespace monopole {

// LITERAL: alpha - beta antidominant on J.
// LEMMA:   <alpha, j'> <= 0 for every j in J, which is what the immersion
//          argument uses (deg phi^* L_theta <= 0 on positive J-roots).
enum class LiftConvention { literal, lemma };

LiftConvention parse_convention(std::string_view text);
std::string_view to_string(LiftConvention c);

struct ParabolicDatum {
  CartanDatum cartan;
  std::vector<bool> in_j;  // indexed by node
  Degree beta;             // beta_j = 0 for j in J

  // Throws support_violation if beta is supported on J.
  ParabolicDatum(CartanDatum cartan, std::vector<bool> in_j, Degree beta);
};

// true iff <gamma, j'> <= 0 for all j in J. gamma must vanish off J.
bool is_antidominant(const CartanDatum& cartan, const Degree& gamma, const std::vector<bool>& in_j);

bool is_special_lift(const Degree& alpha, const ParabolicDatum& pd, LiftConvention convention);

struct SpecialLiftSet {
  LiftConvention convention;
  std::vector<Degree> lifts;  // lexicographic
  std::vector<int> bound;     // per node search bound on alpha - beta (0 off J)
};

// Box bound: alpha - beta <= A_J^{-T} b with b_j = -sum_{i not in J} beta_i a_ij,
// valid because the inverse of a finite-type Cartan matrix is entrywise >= 0.
std::vector<int> lift_search_bound(const ParabolicDatum& pd, LiftConvention convention);

SpecialLiftSet enumerate_special_lifts(const ParabolicDatum& pd, LiftConvention convention);

// 2|alpha|
int leaf_dimension(const Degree& alpha);

}  // namespace monopole
