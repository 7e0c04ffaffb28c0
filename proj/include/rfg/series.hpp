#pragma once

// Truncated power series in two non-commuting variables alpha, beta.
//
// A TruncatedSeries<Coeff> is an element of Coeff<<alpha, beta>> modulo the
// ideal of all monomials of length > degree_bound. Two coefficient rings are
// instantiated: exact rationals (PlainSeries) and univariate polynomials in
// t with rational coefficients (ParamSeries). Mixing the two is a compile
// error; mixing degree bounds throws MismatchError.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rfg {

using Rational = mpq_class;
using Integer = mpz_class;

// Polynomial in t over Q, coefficients indexed by degree. The zero
// polynomial has no coefficients; otherwise the leading one is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(const Rational& constant);  // NOLINT: implicit by design of the ring
  RationalPoly(long constant) : RationalPoly(Rational(constant)) {}  // NOLINT
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly t();
  // C(t, k) = t (t-1) ... (t-k+1) / k!
  static RationalPoly binomial(int k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  bool has_integer_coefficients() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  // `(t^2 - t)/2`, `3*t`, `-t/2`, `0`.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Word in the free monoid on the variables; letter 0 = alpha, 1 = beta.
using Monomial = std::vector<std::uint8_t>;

// Graded lexicographic order: shorter first, then alpha < beta.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

inline constexpr int kSeriesVariables = 2;

// `ab` style rendering, `a` for alpha and `b` for beta.
std::string format_monomial(const Monomial& m);
// All monomials of exactly the given length, in MonomialOrder.
std::vector<Monomial> monomials_of_length(int length);

template <class Coeff>
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  explicit TruncatedSeries(int degree_bound);

  static TruncatedSeries zero(int degree_bound) { return TruncatedSeries(degree_bound); }
  static TruncatedSeries one(int degree_bound);
  // c * m; dropped when m is longer than the bound.
  static TruncatedSeries term(int degree_bound, const Monomial& m, const Coeff& c);
  // 1 + x for the variable with index `var`.
  static TruncatedSeries one_plus_variable(int degree_bound, int var);

  int degree_bound() const { return degree_bound_; }
  const Terms& terms() const { return terms_; }
  Coeff coefficient(const Monomial& m) const;
  Coeff constant_term() const { return coefficient({}); }
  bool is_zero() const { return terms_.empty(); }

  // Smallest length of a monomial with nonzero coefficient; nullopt when the
  // series vanishes up to the bound (read as ">= degree_bound + 1").
  std::optional<int> valuation() const;

  // The homogeneous part of the given length.
  TruncatedSeries homogeneous_part(int length) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return a.times(b); }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.degree_bound_ == b.degree_bound_ && a.terms_ == b.terms_;
  }

  TruncatedSeries times(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Coeff& k) const;

  // Inverse of a series with constant term 1: sum_{k<=d} (1 - s)^k.
  // Throws DomainError when the constant term is not 1.
  TruncatedSeries invert_unit() const;

  // Canonical text: terms in MonomialOrder, e.g. `1 + (t^2 - t)/2*ab - 2*ba`.
  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;
  void add_term(const Monomial& m, const Coeff& c);

  int degree_bound_;
  Terms terms_;
};

using PlainSeries = TruncatedSeries<Rational>;
using ParamSeries = TruncatedSeries<RationalPoly>;

extern template class TruncatedSeries<Rational>;
extern template class TruncatedSeries<RationalPoly>;

PlainSeries add(const PlainSeries& s, const PlainSeries& u);
ParamSeries add(const ParamSeries& s, const ParamSeries& u);
PlainSeries mul(const PlainSeries& s, const PlainSeries& u);
ParamSeries mul(const ParamSeries& s, const ParamSeries& u);
PlainSeries invert_unit(const PlainSeries& s);
ParamSeries invert_unit(const ParamSeries& s);

// (1 + x)^t = sum_{k<=d} C(t, k) x^k for the variable `var`.
ParamSeries binomial_series(int var, int degree_bound);

// Substitutes t = n in every coefficient.
PlainSeries evaluate_t(const ParamSeries& s, const Rational& n);

// Forgets rational coefficients into constant polynomials.
ParamSeries as_parametric(const PlainSeries& s);

}  // namespace rfg
