#pragma once

// The generic Iwahori-Hecke algebra of a weighted Coxeter group over
// Laurent polynomials in u, in its standard basis {T_w}.
//
//   T_s T_w = T_{sw}                              if l(sw) > l(w)
//   T_s T_w = u^{L(s)} T_{sw} + (u^{L(s)} - 1) T_w  otherwise

#include <map>
#include <string>
#include <string_view>

#include "cbs/coxeter.hpp"
#include "cbs/laurent.hpp"

namespace cbs {

class HeckeElement {
 public:
  using Support = std::map<std::uint32_t, LaurentPoly>;

  explicit HeckeElement(DatumPtr datum);
  /// coeff * T_w
  static HeckeElement basis(DatumPtr datum, GroupElement w, const LaurentPoly& coeff = 1);

  const DatumPtr& datum() const noexcept { return datum_; }
  const Support& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }
  LaurentPoly coefficient(GroupElement w) const;

  void add_term(GroupElement w, const LaurentPoly& coeff);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

 private:
  void require_same_datum(const HeckeElement& o) const;

  DatumPtr datum_;
  Support support_;
};

/// T_s * T_w
HeckeElement generator_times_basis(const DatumPtr& datum, int s, GroupElement w);
/// T_s * h
HeckeElement left_multiply_generator(int s, const HeckeElement& h);

/// Symmetrizing trace: the coefficient of T_1.
LaurentPoly tau(const HeckeElement& h);
/// tau(T_w T_w'), by explicit multiplication.
LaurentPoly tau_bilinear(const DatumPtr& datum, GroupElement w, GroupElement w_prime);

/// `poly * T[word]` summands joined by ` + `, in element order; zero is `0`.
std::string to_string(const HeckeElement& h);
HeckeElement parse_hecke(const DatumPtr& datum, std::string_view text);

}  // namespace cbs
