#include "rfg/series.hpp"

#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RationalPoly RationalPoly::t() { return RationalPoly(std::vector<Rational>{0, 1}); }

RationalPoly RationalPoly::binomial(int k) {
  if (k < 0) throw DomainError("binomial index must be nonnegative");
  RationalPoly p(1);
  for (int i = 0; i < k; ++i) p = p * RationalPoly(std::vector<Rational>{Rational(-i), 1});
  Rational fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (auto& c : p.coeffs_) c /= fact;
  return p;
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool RationalPoly::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

namespace {

// Renders a polynomial with positive leading coefficient as
// (numerator)/denominator with the common denominator pulled out.
std::string format_positive_poly(const RationalPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::ostringstream num;
  int nterms = 0;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k) * den;
    if (c == 0) continue;
    Integer n = c.get_num();
    const bool negative = n < 0;
    if (negative) n = -n;
    if (nterms == 0)
      num << (negative ? "-" : "");
    else
      num << (negative ? " - " : " + ");
    if (k == 0)
      num << n;
    else {
      if (n != 1) num << n << '*';
      num << 't';
      if (k > 1) num << '^' << k;
    }
    ++nterms;
  }
  std::string text = num.str();
  if (nterms > 1 && (den != 1)) text = "(" + text + ")";
  if (den != 1) text += "/" + den.get_str();
  return text;
}

bool coeff_is_negative(const Rational& c) { return c < 0; }
bool coeff_is_negative(const RationalPoly& p) { return !p.is_zero() && p.coefficients().back() < 0; }

bool coeff_is_zero(const Rational& c) { return c == 0; }
bool coeff_is_zero(const RationalPoly& p) { return p.is_zero(); }

// Magnitude text for a positive coefficient, plus whether it needs
// parentheses when followed by `*monomial`.
std::string magnitude_text(const Rational& c, bool& compound) {
  compound = false;
  return c.get_str();
}

std::string magnitude_text(const RationalPoly& p, bool& compound) {
  std::string s = format_positive_poly(p);
  compound = p.degree() > 0 && s.front() != '(' && s.find(' ') != std::string::npos;
  return s;
}

}  // namespace

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  if (coeffs_.back() < 0) {
    std::string s = format_positive_poly(-*this);
    if (s.find(' ') != std::string::npos && s.front() != '(') s = "(" + s + ")";
    return "-" + s;
  }
  return format_positive_poly(*this);
}

// ---------------------------------------------------------------------------
// Monomials

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (auto v : m) s += static_cast<char>('a' + v);
  return s;
}

std::vector<Monomial> monomials_of_length(int length) {
  std::vector<Monomial> out{Monomial{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (int v = 0; v < kSeriesVariables; ++v) {
        Monomial e = m;
        e.push_back(static_cast<std::uint8_t>(v));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

template <class Coeff>
TruncatedSeries<Coeff>::TruncatedSeries(int degree_bound) : degree_bound_(degree_bound) {
  if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::one(int degree_bound) {
  return term(degree_bound, {}, Coeff(1));
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::term(int degree_bound, const Monomial& m, const Coeff& c) {
  TruncatedSeries s(degree_bound);
  s.add_term(m, c);
  return s;
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::one_plus_variable(int degree_bound, int var) {
  if (var < 0 || var >= kSeriesVariables) throw DomainError("series variable out of range");
  TruncatedSeries s = one(degree_bound);
  s.add_term({static_cast<std::uint8_t>(var)}, Coeff(1));
  return s;
}

template <class Coeff>
void TruncatedSeries<Coeff>::add_term(const Monomial& m, const Coeff& c) {
  if (static_cast<int>(m.size()) > degree_bound_ || coeff_is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }
}

template <class Coeff>
Coeff TruncatedSeries<Coeff>::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

template <class Coeff>
std::optional<int> TruncatedSeries<Coeff>::valuation() const {
  if (terms_.empty()) return std::nullopt;
  // MonomialOrder sorts by length first.
  return static_cast<int>(terms_.begin()->first.size());
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::homogeneous_part(int length) const {
  TruncatedSeries s(degree_bound_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == length) s.terms_.emplace(m, c);
  return s;
}

template <class Coeff>
void TruncatedSeries<Coeff>::check_compatible(const TruncatedSeries& o) const {
  if (degree_bound_ != o.degree_bound_)
    throw MismatchError("series with degree bounds " + std::to_string(degree_bound_) + " and " +
                        std::to_string(o.degree_bound_));
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::operator-() const {
  TruncatedSeries s = *this;
  for (auto& [m, c] : s.terms_) c = -c;
  return s;
}

template <class Coeff>
TruncatedSeries<Coeff>& TruncatedSeries<Coeff>::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

template <class Coeff>
TruncatedSeries<Coeff>& TruncatedSeries<Coeff>::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::times(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(degree_bound_);
  Monomial prod;
  for (const auto& [m1, c1] : terms_) {
    const int room = degree_bound_ - static_cast<int>(m1.size());
    for (const auto& [m2, c2] : o.terms_) {
      // o.terms_ is sorted by length, so nothing further fits.
      if (static_cast<int>(m2.size()) > room) break;
      prod = m1;
      prod.insert(prod.end(), m2.begin(), m2.end());
      r.add_term(prod, c1 * c2);
    }
  }
  return r;
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::scaled(const Coeff& k) const {
  TruncatedSeries r(degree_bound_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * k);
  return r;
}

template <class Coeff>
TruncatedSeries<Coeff> TruncatedSeries<Coeff>::invert_unit() const {
  if (!(constant_term() == Coeff(1))) throw DomainError("invert_unit: constant term is not 1");
  // s = 1 + j, s^-1 = sum (-j)^k; Horner form r <- 1 - j r.
  TruncatedSeries j = *this;
  j.terms_.erase(Monomial{});
  TruncatedSeries r = one(degree_bound_);
  for (int k = 0; k < degree_bound_; ++k) r = one(degree_bound_) - j * r;
  return r;
}

template <class Coeff>
std::string TruncatedSeries<Coeff>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = coeff_is_negative(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool compound = false;
    const std::string mag = magnitude_text(negative ? Coeff(-c) : c, compound);
    if (m.empty()) {
      out << mag;
    } else {
      if (mag != "1") out << (compound ? "(" + mag + ")" : mag) << '*';
      out << format_monomial(m);
    }
  }
  return out.str();
}

template class TruncatedSeries<Rational>;
template class TruncatedSeries<RationalPoly>;

// ---------------------------------------------------------------------------
// Free functions

PlainSeries add(const PlainSeries& s, const PlainSeries& u) { return s + u; }
ParamSeries add(const ParamSeries& s, const ParamSeries& u) { return s + u; }
PlainSeries mul(const PlainSeries& s, const PlainSeries& u) { return s * u; }
ParamSeries mul(const ParamSeries& s, const ParamSeries& u) { return s * u; }
PlainSeries invert_unit(const PlainSeries& s) { return s.invert_unit(); }
ParamSeries invert_unit(const ParamSeries& s) { return s.invert_unit(); }

ParamSeries binomial_series(int var, int degree_bound) {
  ParamSeries s(degree_bound);
  Monomial m;
  for (int k = 0; k <= degree_bound; ++k) {
    s += ParamSeries::term(degree_bound, m, RationalPoly::binomial(k));
    m.push_back(static_cast<std::uint8_t>(var));
  }
  return s;
}

PlainSeries evaluate_t(const ParamSeries& s, const Rational& n) {
  PlainSeries r(s.degree_bound());
  for (const auto& [m, p] : s.terms()) r += PlainSeries::term(s.degree_bound(), m, p.evaluate(n));
  return r;
}

ParamSeries as_parametric(const PlainSeries& s) {
  ParamSeries r(s.degree_bound());
  for (const auto& [m, c] : s.terms()) r += ParamSeries::term(s.degree_bound(), m, RationalPoly(c));
  return r;
}

}  // namespace rfg
