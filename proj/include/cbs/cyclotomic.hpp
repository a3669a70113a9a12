#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cbs/laurent.hpp"

namespace cbs {

/// The e-th cyclotomic polynomial, monic with integer coefficients.
LaurentPoly cyclotomic_polynomial(int e);

/// Euler's totient, the degree of the e-th cyclotomic polynomial.
int euler_phi(int e);

/// An element of Z[zeta_e], stored as its residue modulo Phi_e: a coefficient
/// vector of length phi(e) in the basis 1, zeta, ..., zeta^(phi(e)-1).
class CyclotomicInt {
 public:
  /// Zero of Z[zeta_e].
  explicit CyclotomicInt(int e);

  static CyclotomicInt integer(int e, const mpz_class& n);
  /// zeta_e^k for any integer k.
  static CyclotomicInt zeta_power(int e, long k);
  /// Reduces an integer polynomial (coefficient of zeta^i at index i).
  static CyclotomicInt from_polynomial(int e, std::vector<mpz_class> coeffs);

  int order() const noexcept { return order_; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator-(const CyclotomicInt& a);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

 private:
  void require_same_order(const CyclotomicInt& o) const;

  int order_;
  std::vector<mpz_class> coeffs_;
};

std::string to_string(const CyclotomicInt& z);

/// Image of p under u -> zeta_e. Requires integer coefficients.
CyclotomicInt specialize_cyclotomic(const LaurentPoly& p, int e);

/// Image of p under u -> q in F_ell, as a residue in [0, ell). Negative
/// exponents use the inverse of q modulo ell.
std::int64_t specialize_mod_prime(const LaurentPoly& p, std::int64_t q, std::int64_t ell);

bool is_prime(std::int64_t n);

}  // namespace cbs
