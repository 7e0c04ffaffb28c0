#include "rfg/magnus.hpp"

#include <array>

#include "rfg/error.hpp"

namespace rfg {

namespace {

template <class Series, std::size_t N>
Series fold_letters(const Word& u, int degree_bound, const std::array<Series, N>& images,
                    const std::array<Series, N>& inverses) {
  Series acc = Series::one(degree_bound);
  for (const Letter& l : u.letters()) acc = acc * (l.sign > 0 ? images[l.gen] : inverses[l.gen]);
  return acc;
}

}  // namespace

PlainSeries eta(const Word& u, int degree_bound) {
  if (u.rank() != kFreeRank) throw MismatchError("eta expects a word over {a, b}");
  const PlainSeries a = PlainSeries::one_plus_variable(degree_bound, 0);
  const PlainSeries b = PlainSeries::one_plus_variable(degree_bound, 1);
  const std::array<PlainSeries, 2> images{a, b};
  const std::array<PlainSeries, 2> inverses{a.invert_unit(), b.invert_unit()};
  return fold_letters(u, degree_bound, images, inverses);
}

ParamSeries eta_param(const Word& g, int degree_bound) {
  if (g.rank() != kGammaRank) throw MismatchError("eta_param expects a word over {w, x, y, z}");
  const ParamSeries w = ParamSeries::one_plus_variable(degree_bound, 0);
  const ParamSeries x = ParamSeries::one_plus_variable(degree_bound, 1);
  const ParamSeries y = binomial_series(0, degree_bound);
  const ParamSeries z = binomial_series(1, degree_bound);
  const std::array<ParamSeries, 4> images{w, x, y, z};
  const std::array<ParamSeries, 4> inverses{w.invert_unit(), x.invert_unit(), y.invert_unit(),
                                            z.invert_unit()};
  return fold_letters(g, degree_bound, images, inverses);
}

bool in_gamma(const Word& u, int c) {
  if (c < 1) throw DomainError("in_gamma: c must be at least 1");
  // Only monomials of length < c matter for the J^c test.
  const PlainSeries s = eta(u, c - 1) - PlainSeries::one(c - 1);
  return !s.valuation().has_value();
}

GammaDepth gamma_depth(const Word& u, int max_depth) {
  if (max_depth < 1) throw DomainError("gamma_depth: depth bound must be at least 1");
  const PlainSeries s = eta(u, max_depth) - PlainSeries::one(max_depth);
  const auto v = s.valuation();
  if (!v) return {max_depth + 1, false};
  return {*v, true};
}

std::map<Monomial, RationalPoly, MonomialOrder> coefficient_polys(const Word& g, int degree_bound) {
  if (degree_bound < 1) throw DomainError("coefficient_polys: degree bound must be at least 1");
  const ParamSeries s = eta_param(g, degree_bound);
  std::map<Monomial, RationalPoly, MonomialOrder> out;
  for (const auto& [m, p] : s.terms())
    if (!m.empty()) out.emplace(m, p);
  return out;
}

}  // namespace rfg
