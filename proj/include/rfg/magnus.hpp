#pragma once

// Magnus embedding of F(a, b) into the units of Q<<alpha, beta>>, and its
// parametric companion on Gamma = F(w, x, y, z):
//
//     eta:       a -> 1 + alpha,  b -> 1 + beta
//     eta_param: w -> 1 + alpha,  x -> 1 + beta,
//                y -> (1 + alpha)^t,  z -> (1 + beta)^t
//
// A word u lies in gamma_c(F) exactly when eta(u) = 1 mod J^c, which makes
// in_gamma an exact decision procedure.

#include <map>
#include <optional>

#include "rfg/series.hpp"
#include "rfg/words.hpp"

namespace rfg {

// Generator indices of Gamma, matching Alphabet::wxyz().
enum GammaGen : int { kW = 0, kX = 1, kY = 2, kZ = 3 };
inline constexpr int kGammaRank = 4;
inline constexpr int kFreeRank = 2;

// u must be over {a, b}; degree_bound >= 0.
PlainSeries eta(const Word& u, int degree_bound);

// g must be over {w, x, y, z}. Inverses of y, z are taken with invert_unit
// on the binomial series.
ParamSeries eta_param(const Word& g, int degree_bound);

// u in gamma_c(F(a, b)); c >= 1.
bool in_gamma(const Word& u, int c);

struct GammaDepth {
  int depth = 0;
  // false means "at least depth": the word survived every test up to the
  // bound (only the identity does so for large enough bounds).
  bool exact = true;

  friend bool operator==(const GammaDepth&, const GammaDepth&) = default;
};

// Largest c <= max_depth with u in gamma_c; reported as {max_depth + 1,
// exact = false} when u lies in gamma_{max_depth + 1}.
GammaDepth gamma_depth(const Word& u, int max_depth);

// The nonconstant coefficient polynomials pi_W(t) of eta_param(g).
std::map<Monomial, RationalPoly, MonomialOrder> coefficient_polys(const Word& g, int degree_bound);

}  // namespace rfg
