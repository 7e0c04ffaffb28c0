#pragma once

// Worked computations with the parametric Magnus map:
//
//  * commutator_chain(m) = [y, z x^-1, z x^-2, ..., z x^-m] has coefficient
//    polynomials vanishing below length m + 1, and its length-(m + 1)
//    coefficients all have roots 0, 1, ..., m;
//  * U = [w, z][x, y] has eta(U) = 1 mod J^3 with a degree-3 part whose
//    coefficients are multiples of C(t, 2), which is not in Z[t].

#include <map>
#include <string>
#include <vector>

#include "rfg/magnus.hpp"
#include "rfg/series.hpp"
#include "rfg/words.hpp"

namespace rfg {

inline constexpr int kMaxChainLength = 4;

// [y, z x^-1, ..., z x^-m] over {w, x, y, z}; m = 0 gives y.
Word commutator_chain(int m);

struct ChainReport {
  int m = 0;
  Word g;
  // pi_W for |W| <= m are all zero (vacuous claim for m = 0).
  bool low_degree_vanish = false;
  // The length-(m + 1) part of eta_param(g), monomial -> pi_W.
  std::map<Monomial, RationalPoly, MonomialOrder> top_coefficients;
  // Every top coefficient vanishes at t = 0..m.
  bool top_vanish_at_roots = false;
  bool top_nonzero = false;
  // phi(g)(k) = 1 for k = 0..m.
  bool phi_trivial_below = false;
  // gamma_depth(phi(g)(m + 1), m + 2).
  GammaDepth depth_at_next;
  // t (t-1) ... (t-m) * sum_{k=1}^m C(m, k) b^k a b^(m-k), the closed form
  // printed alongside the computation.
  ParamSeries displayed_formula{0};
  bool matches_displayed_formula = false;

  bool verified() const {
    return low_degree_vanish && top_vanish_at_roots && top_nonzero && phi_trivial_below && depth_at_next.exact &&
           depth_at_next.depth == m + 1;
  }
};

// Throws DomainError unless 0 <= m <= kMaxChainLength.
ChainReport analyze_commutator_chain(int m);

struct ProductCommutatorReport {
  Word U;  // [w, z][x, y]
  bool degree1_vanishes = false;
  bool degree2_vanishes = false;
  ParamSeries degree3{3};
  // C(t, 2) (ab^2 + b^2a + ba^2 + a^2b - 2aba - 2bab).
  ParamSeries displayed_formula{3};
  bool matches_displayed_formula = false;
  // Some degree-3 coefficient lies outside Z[t] ...
  bool has_non_integral_coefficient = false;
  // ... and every degree-3 coefficient is an integer multiple of C(t, 2).
  bool coefficients_are_binomial_multiples = false;
};

ProductCommutatorReport analyze_product_commutator();

// Text blocks used by the CLI and the golden files.
std::string format_chain_report(const ChainReport& r);
std::string format_product_commutator_report(const ProductCommutatorReport& r);

}  // namespace rfg
