#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rfg/error.hpp"
#include "rfg/series.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

const Monomial kA{0};
const Monomial kB{1};
const Monomial kAA{0, 0};
const Monomial kAB{0, 1};
const Monomial kBA{1, 0};

PlainSeries plain(int d, std::initializer_list<std::pair<Monomial, long>> terms) {
  PlainSeries s(d);
  for (const auto& [m, c] : terms) s += PlainSeries::term(d, m, Rational(c));
  return s;
}

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PlainSeries random_plain(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  PlainSeries s(d);
  for (int len = 0; len <= d; ++len)
    for (const Monomial& m : monomials_of_length(len))
      if (rng() % 3 == 0) s += PlainSeries::term(d, m, ratio(coeff(rng), 1 + static_cast<long>(rng() % 2)));
  return s;
}

ParamSeries random_param(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  ParamSeries s(d);
  for (int len = 0; len <= d; ++len)
    for (const Monomial& m : monomials_of_length(len))
      if (rng() % 3 == 0) {
        std::vector<Rational> cs;
        for (int k = 0; k <= 2; ++k) cs.emplace_back(coeff(rng), 1 + static_cast<int>(rng() % 3));
        s += ParamSeries::term(d, m, RationalPoly(cs));
      }
  return s;
}

}  // namespace

TEST_CASE("RationalPoly arithmetic and rendering") {
  const RationalPoly t = RationalPoly::t();
  CHECK((t * t - t).to_string() == "t^2 - t");
  CHECK(RationalPoly::binomial(2).to_string() == "(t^2 - t)/2");
  CHECK(RationalPoly::binomial(0) == RationalPoly(1));
  CHECK(RationalPoly::binomial(3).evaluate(5) == 10);
  CHECK((-t).to_string() == "-t");
  CHECK((t - t).is_zero());
  CHECK(RationalPoly().to_string() == "0");
  CHECK(!RationalPoly::binomial(2).has_integer_coefficients());
  CHECK((RationalPoly::binomial(2) * RationalPoly(2)).has_integer_coefficients());
}

TEST_CASE("ring operations") {
  const PlainSeries one_plus_a = plain(2, {{{}, 1}, {kA, 1}});
  const PlainSeries one_minus_a = plain(2, {{{}, 1}, {kA, -1}});
  CHECK(mul(one_plus_a, one_minus_a) == plain(2, {{{}, 1}, {kAA, -1}}));

  const PlainSeries a = plain(2, {{kA, 1}});
  const PlainSeries b = plain(2, {{kB, 1}});
  CHECK(mul(a, b) != mul(b, a));
  CHECK(add(one_plus_a, -one_plus_a).is_zero());

  // Products longer than the bound are dropped.
  CHECK(mul(plain(1, {{kA, 1}}), plain(1, {{kB, 1}})).is_zero());
  CHECK_THROWS_AS(add(plain(2, {}), plain(3, {})), MismatchError);
}

TEST_CASE("invert_unit") {
  // Oracle: multiply back.
  const PlainSeries one_plus_a = plain(2, {{{}, 1}, {kA, 1}});
  const PlainSeries inv = invert_unit(one_plus_a);
  CHECK(mul(one_plus_a, inv) == PlainSeries::one(2));
  CHECK(inv == plain(2, {{{}, 1}, {kA, -1}, {kAA, 1}}));

  CHECK(invert_unit(PlainSeries::one(4)) == PlainSeries::one(4));

  const PlainSeries one_plus_ab = plain(3, {{{}, 1}, {kAB, 1}});
  const PlainSeries inv_ab = invert_unit(one_plus_ab);
  CHECK(mul(one_plus_ab, inv_ab) == PlainSeries::one(3));
  CHECK(mul(inv_ab, one_plus_ab) == PlainSeries::one(3));
  CHECK(inv_ab == plain(3, {{{}, 1}, {kAB, -1}}));

  CHECK_THROWS_AS(invert_unit(plain(2, {{{}, 2}, {kA, 1}})), DomainError);
  CHECK_THROWS_AS(invert_unit(plain(2, {{kA, 1}})), DomainError);
}

TEST_CASE("valuation") {
  CHECK(plain(3, {{kAB, 1}, {kBA, -1}}).valuation() == 2);
  CHECK(!PlainSeries::zero(3).valuation().has_value());
  CHECK((PlainSeries::one_plus_variable(3, 0) - PlainSeries::one(3)).valuation() == 1);
  CHECK(PlainSeries::one(3).valuation() == 0);
}

TEST_CASE("binomial series and evaluation at t") {
  const ParamSeries s = binomial_series(0, 4);
  CHECK(s.coefficient({}) == RationalPoly(1));
  CHECK(s.coefficient(kA) == RationalPoly::t());
  CHECK(s.coefficient(kAA).to_string() == "(t^2 - t)/2");
  CHECK(evaluate_t(s, 0) == PlainSeries::one(4));
  CHECK(evaluate_t(s, 1) == PlainSeries::one_plus_variable(4, 0));

  // (1 + a)^2 expanded by hand.
  CHECK(evaluate_t(binomial_series(0, 3), 2) == plain(3, {{{}, 1}, {kA, 2}, {kAA, 1}}));

  ParamSeries one_plus_ta = ParamSeries::one(2) + ParamSeries::term(2, kA, RationalPoly::t());
  CHECK(evaluate_t(one_plus_ta, 3) == plain(2, {{{}, 1}, {kA, 3}}));
}

TEST_CASE("binomial series matches repeated products") {
  const int d = 5;
  const PlainSeries base = PlainSeries::one_plus_variable(d, 1);
  const ParamSeries s = binomial_series(1, d);
  PlainSeries pow = PlainSeries::one(d);
  for (int n = 0; n <= d; ++n) {
    CHECK(evaluate_t(s, n) == pow);
    pow = pow * base;
  }
  PlainSeries inv_pow = PlainSeries::one(d);
  const PlainSeries base_inv = base.invert_unit();
  for (int n = 0; n >= -3; --n) {
    CHECK(evaluate_t(s, n) == inv_pow);
    inv_pow = inv_pow * base_inv;
  }
}

TEST_CASE("canonical rendering") {
  ParamSeries s = ParamSeries::one(2) + ParamSeries::term(2, kAB, RationalPoly::binomial(2)) +
                  ParamSeries::term(2, kBA, RationalPoly(-2));
  CHECK(s.to_string() == "1 + (t^2 - t)/2*ab - 2*ba");
  CHECK(plain(2, {{kA, -1}, {kB, 1}}).to_string() == "-a + b");
  CHECK(PlainSeries::zero(2).to_string() == "0");
  ParamSeries u = ParamSeries::term(2, kA, RationalPoly::t() - RationalPoly(1));
  CHECK(u.to_string() == "(t - 1)*a");
}

TEST_CASE("ring laws on random series") {
  auto rng = testing::make_rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const PlainSeries x = random_plain(rng, d), y = random_plain(rng, d), z = random_plain(rng, d);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);

    const ParamSeries p = random_param(rng, d), q = random_param(rng, d), r = random_param(rng, d);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    for (int n = -2; n <= 3; ++n) {
      CHECK(evaluate_t(p * q, n) == evaluate_t(p, n) * evaluate_t(q, n));
      CHECK(evaluate_t(p + q, n) == evaluate_t(p, n) + evaluate_t(q, n));
    }
  }
}
