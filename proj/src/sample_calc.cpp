#include "rfg/sample_calc.hpp"

#include <sstream>

#include "rfg/error.hpp"
#include "rfg/subdirect.hpp"

namespace rfg {

namespace {

constexpr std::uint8_t kAlpha = 0;
constexpr std::uint8_t kBeta = 1;

Word gamma_gen(int g, int power = 1) { return Word::generator(kGammaRank, g, power); }

Rational binomial_number(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

Word commutator_chain(int m) {
  if (m < 0 || m > kMaxChainLength)
    throw DomainError("chain length must lie in 0.." + std::to_string(kMaxChainLength));
  std::vector<Word> items{gamma_gen(kY)};
  for (int k = 1; k <= m; ++k) items.push_back(gamma_gen(kZ) * gamma_gen(kX, -k));
  return left_normed_commutator(items);
}

ChainReport analyze_commutator_chain(int m) {
  ChainReport r;
  r.m = m;
  r.g = commutator_chain(m);
  const int d = m + 1;
  const auto polys = coefficient_polys(r.g, d);

  r.low_degree_vanish = true;
  for (const auto& [W, p] : polys) {
    if (static_cast<int>(W.size()) <= m && !p.is_zero()) r.low_degree_vanish = false;
    if (static_cast<int>(W.size()) == d) r.top_coefficients.emplace(W, p);
  }
  r.top_nonzero = !r.top_coefficients.empty();
  r.top_vanish_at_roots = true;
  for (const auto& [W, p] : r.top_coefficients)
    for (int k = 0; k <= m; ++k)
      if (p.evaluate(k) != 0) r.top_vanish_at_roots = false;

  r.phi_trivial_below = true;
  for (int k = 0; k <= m; ++k)
    if (!phi(r.g, k).empty()) r.phi_trivial_below = false;
  r.depth_at_next = gamma_depth(phi(r.g, m + 1), m + 2);

  RationalPoly roots_poly(1);
  for (int k = 0; k <= m; ++k) roots_poly = roots_poly * RationalPoly(std::vector<Rational>{Rational(-k), 1});
  r.displayed_formula = ParamSeries(d);
  for (int k = 1; k <= m; ++k) {
    Monomial W(static_cast<std::size_t>(k), kBeta);
    W.push_back(kAlpha);
    W.insert(W.end(), static_cast<std::size_t>(m - k), kBeta);
    r.displayed_formula += ParamSeries::term(d, W, roots_poly * RationalPoly(binomial_number(m, k)));
  }
  ParamSeries computed(d);
  for (const auto& [W, p] : r.top_coefficients) computed += ParamSeries::term(d, W, p);
  r.matches_displayed_formula = computed == r.displayed_formula;
  return r;
}

ProductCommutatorReport analyze_product_commutator() {
  ProductCommutatorReport r;
  r.U = commutator(gamma_gen(kW), gamma_gen(kZ)) * commutator(gamma_gen(kX), gamma_gen(kY));
  const ParamSeries s = eta_param(r.U, 3);
  r.degree1_vanishes = s.homogeneous_part(1).is_zero();
  r.degree2_vanishes = s.homogeneous_part(2).is_zero();
  r.degree3 = s.homogeneous_part(3);

  const RationalPoly c2 = RationalPoly::binomial(2);
  const std::vector<std::pair<Monomial, long>> displayed{
      {{kAlpha, kBeta, kBeta}, 1},  {{kBeta, kBeta, kAlpha}, 1}, {{kBeta, kAlpha, kAlpha}, 1},
      {{kAlpha, kAlpha, kBeta}, 1}, {{kAlpha, kBeta, kAlpha}, -2}, {{kBeta, kAlpha, kBeta}, -2},
  };
  for (const auto& [W, k] : displayed) r.displayed_formula += ParamSeries::term(3, W, c2 * RationalPoly(k));
  r.matches_displayed_formula = r.degree3 == r.displayed_formula;

  r.coefficients_are_binomial_multiples = true;
  for (const auto& [W, p] : r.degree3.terms()) {
    if (!p.has_integer_coefficients()) r.has_non_integral_coefficient = true;
    // p = k * C(t, 2) with k an integer.
    const Rational k = p.coefficient(2) * 2;
    if (k.get_den() != 1 || !(p == c2 * RationalPoly(k))) r.coefficients_are_binomial_multiples = false;
  }
  if (r.degree3.is_zero()) r.coefficients_are_binomial_multiples = false;
  return r;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_chain_report(const ChainReport& r) {
  const Alphabet gamma = Alphabet::wxyz();
  std::ostringstream out;
  out << "commutator chain m = " << r.m << "\n";
  out << "g = " << format_word(r.g, gamma) << "\n";
  if (r.m == 0) {
    out << "no commutator: nothing is claimed to vanish\n";
  } else {
    out << "coefficients of length <= " << r.m << " vanish identically: " << yes_no(r.low_degree_vanish) << "\n";
  }
  out << "length-" << r.m + 1 << " coefficients:\n";
  for (const auto& [W, p] : r.top_coefficients) out << "  " << format_monomial(W) << ": " << p.to_string() << "\n";
  out << "each vanishes at t = 0.." << r.m << ": " << yes_no(r.top_vanish_at_roots) << "\n";
  out << "some length-" << r.m + 1 << " coefficient is nonzero: " << yes_no(r.top_nonzero) << "\n";
  out << "phi_k(g) = 1 for k = 0.." << r.m << ": " << yes_no(r.phi_trivial_below) << "\n";
  out << "gamma depth of phi_" << r.m + 1 << "(g) (bound " << r.m + 2 << "): "
      << (r.depth_at_next.exact ? "" : ">= ") << r.depth_at_next.depth << "\n";
  if (r.m > 0) {
    out << "closed form t(t-1)...(t-m) * sum_k C(m,k) b^k a b^(m-k): " << r.displayed_formula.to_string() << "\n";
    out << "computed part equals closed form: " << yes_no(r.matches_displayed_formula) << "\n";
  }
  return out.str();
}

std::string format_product_commutator_report(const ProductCommutatorReport& r) {
  std::ostringstream out;
  out << "U = " << format_word(r.U, Alphabet::wxyz()) << "\n";
  out << "degree-1 part vanishes: " << yes_no(r.degree1_vanishes) << "\n";
  out << "degree-2 part vanishes: " << yes_no(r.degree2_vanishes) << "\n";
  out << "degree-3 part: " << r.degree3.to_string() << "\n";
  out << "closed form C(t,2)(abb + bba + baa + aab - 2aba - 2bab): " << r.displayed_formula.to_string() << "\n";
  out << "computed part equals closed form: " << yes_no(r.matches_displayed_formula) << "\n";
  out << "some coefficient outside Z[t]: " << yes_no(r.has_non_integral_coefficient) << "\n";
  out << "all coefficients are integer multiples of C(t,2): " << yes_no(r.coefficients_are_binomial_multiples)
      << "\n";
  return out.str();
}

}  // namespace rfg
