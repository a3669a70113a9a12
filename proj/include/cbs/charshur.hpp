#pragma once

// Matrix representations of the generic Hecke algebra, their characters,
// Schur elements and a-invariants.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

#include "cbs/coxeter.hpp"
#include "cbs/laurent.hpp"

namespace cbs {

using PolyMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

/// Images of the generators T_s; the image of T_w is the product along any
/// reduced word of w.
struct MatrixRep {
  std::string name;
  DatumPtr datum;
  std::vector<PolyMatrix> generator_images;

  int dimension() const {
    return generator_images.empty() ? 0 : static_cast<int>(generator_images.front().rows());
  }
};

/// The G2 datum with L(alpha) = 3, L(beta) = 1 (alpha is generator 0).
DatumPtr g2_unequal_datum();

/// ind, eps1, rho+, rho-, eps2, eps on G2 with weights (3,1), in a-value order.
std::vector<MatrixRep> builtin_g2_reps(const DatumPtr& g2);
std::vector<MatrixRep> builtin_g2_reps();

/// index (T_s -> u^{L(s)}) and sign (T_s -> -1).
std::vector<MatrixRep> one_dim_reps(const DatumPtr& datum);

struct RelationCheck {
  bool ok = true;
  std::string violated;  // empty when ok
  explicit operator bool() const noexcept { return ok; }
};

/// Checks the quadratic relation for each generator and every braid relation.
RelationCheck check_representation(const MatrixRep& rep);

/// Image of T_w. Throws NotARepresentation if the relations fail.
PolyMatrix rep_matrix(const MatrixRep& rep, GroupElement w);
LaurentPoly rep_trace(const MatrixRep& rep, GroupElement w);

/// trace(T_w) for every w, indexed by the datum's element order.
class Character {
 public:
  explicit Character(const MatrixRep& rep);

  const LaurentPoly& operator[](GroupElement w) const { return values_.at(w.index); }
  const std::vector<LaurentPoly>& values() const noexcept { return values_; }
  int degree() const noexcept { return degree_; }
  const DatumPtr& datum() const noexcept { return datum_; }

 private:
  DatumPtr datum_;
  int degree_;
  std::vector<LaurentPoly> values_;
};

/// sum_w u^{-L(w)} chi(T_w) psi(T_{w^-1}).
LaurentPoly character_pairing(const Character& chi, const Character& psi);

/// c = (1/dim) sum_w u^{-L(w)} trace(T_w) trace(T_{w^-1}); must have integer
/// coefficients, otherwise NonIntegralSchurElement.
LaurentPoly schur_element(const MatrixRep& rep);
LaurentPoly schur_element(const Character& chi);

struct AInvariant {
  int a = 0;
  mpz_class f;
};

/// c = f u^{-a} + higher powers of u.
AInvariant a_invariant(const LaurentPoly& c);

struct SchurRow {
  std::string name;
  int dim = 0;
  LaurentPoly schur;
  AInvariant a;
};

/// Schur element and a-invariant of each representation, in the given order.
std::vector<SchurRow> schur_table(const std::vector<MatrixRep>& reps);

}  // namespace cbs
