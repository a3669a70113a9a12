#pragma once

// Sparse Laurent polynomials in one indeterminate u with exact coefficients.
//
// A LaurentPolynomial<Coeff> stores only its nonzero terms, keyed by exponent,
// so two polynomials are equal exactly when their term maps are equal. The
// library instantiates it with GMP rationals (LaurentPoly); any exact ring
// with value semantics, ==, +, -, * and construction from int will do.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "cbs/errors.hpp"

namespace cbs {

template <typename Coeff>
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Coeff>;

  LaurentPolynomial() = default;
  // Implicit so that integer literals work inside Eigen expressions.
  LaurentPolynomial(int c) { add_term(0, Coeff(c)); }
  LaurentPolynomial(const Coeff& c) { add_term(0, c); }

  static LaurentPolynomial monomial(const Coeff& c, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
  }
  /// u^k
  static LaurentPolynomial u(int k = 1) { return monomial(Coeff(1), k); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Coeff coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Smallest exponent carrying a nonzero coefficient.
  int valuation() const {
    if (is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
    return terms_.begin()->first;
  }
  int degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
    return terms_.rbegin()->first;
  }

  /// Adds c*u^exponent in place, dropping the term if it cancels.
  void add_term(int exponent, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    return r;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by u^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  LaurentPolynomial divided_by(const Coeff& d) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c / d);
    return r;
  }

 private:
  Terms terms_;
};

using LaurentPoly = LaurentPolynomial<mpq_class>;

int u_valuation(const LaurentPoly& p);
/// Coefficient at u^valuation(p).
mpq_class leading_coefficient_at_valuation(const LaurentPoly& p);
bool has_integer_coefficients(const LaurentPoly& p);

/// Exact value at u = x; x must be nonzero if p has negative exponents.
mpq_class evaluate(const LaurentPoly& p, const mpq_class& x);

/// Canonical text form: `c*u^k` terms joined by `+`, exponents ascending,
/// coefficients as reduced GMP rationals (`-3/2`). The zero polynomial is `0`.
std::string to_string(const LaurentPoly& p);
/// Inverse of to_string. Whitespace is ignored; anything else malformed throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace cbs

namespace Eigen {

template <>
struct NumTraits<cbs::LaurentPoly> : GenericNumTraits<cbs::LaurentPoly> {
  using Real = cbs::LaurentPoly;
  using NonInteger = cbs::LaurentPoly;
  using Nested = cbs::LaurentPoly;
  using Literal = cbs::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
};

}  // namespace Eigen
